// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccspt/spt.hpp"

#include <string>
#include <unordered_map>

namespace ccspt {

namespace {

bool is_structural(ViolationKind k) {
  switch (k) {
    case ViolationKind::kColorBudget:
    case ViolationKind::kCountMismatch:
    case ViolationKind::kWeightMismatch:
      return false;
    default:
      return true;
  }
}

SptResult run_pipeline(const ColoredDigraph& g, VertexId source,
                       const ColorConstraint& alpha, const SptOptions& opts,
                       bool minimize) {
  require_valid(g);
  DistanceTable d = sssp(g, source, opts.sssp_mode);
  const SpgGraph spg = build_spg(g, source, d);
  SptResult r = solve_arborescence(spg, alpha, minimize, opts.solver);
  r.distances = std::move(d);
#ifndef NDEBUG
  if (r.tree) {
    const auto violations = verify_spt(g, source, *r.tree, alpha);
    if (!violations.empty()) {
      throw Error(ErrorKind::kInternal,
                  "pipeline produced an invalid tree: " +
                      std::string(violation_kind_name(violations[0].kind)));
    }
  }
#endif
  return r;
}

}  // namespace

std::string_view solver_name(SolverUsed s) {
  switch (s) {
    case SolverUsed::kFlow: return "flow";
    case SolverUsed::kMatch: return "match";
    case SolverUsed::kRedBlue: return "rb";
    case SolverUsed::kMinFlow: return "min_flow";
    case SolverUsed::kMinRedBlue: return "min_rb";
  }
  return "unknown";
}

SptResult solve_arborescence(const SpgGraph& spg, const ColorConstraint& alpha,
                             bool minimize, SolverChoice solver) {
  if (solver == SolverChoice::kAuto) {
    solver = spg.base.color_count() == 2 ? SolverChoice::kRedBlue
                                         : SolverChoice::kFlow;
  }
  SptResult r;
  r.spg_edge_count = spg.base.edge_count();
  ArbOutcome out;
  switch (solver) {
    case SolverChoice::kMatch:
      if (minimize) {
        throw Error(ErrorKind::kPrecondition,
                    "the matching solver has no minimum-weight variant");
      }
      out = cc_arb_match(spg, alpha);
      r.solver_used = SolverUsed::kMatch;
      break;
    case SolverChoice::kRedBlue:
      out = minimize ? min_cc_rb_arb(spg, alpha) : cc_rb_arb(spg, alpha);
      r.solver_used = minimize ? SolverUsed::kMinRedBlue : SolverUsed::kRedBlue;
      break;
    case SolverChoice::kFlow:
    case SolverChoice::kAuto:
      out = minimize ? min_cc_arb_flow(spg, alpha) : cc_arb_flow(spg, alpha);
      r.solver_used = minimize ? SolverUsed::kMinFlow : SolverUsed::kFlow;
      break;
  }
  r.tree = std::move(out.tree);
  r.unrooted_witness = out.unrooted_witness;
  if (out.flow) r.phase_stats = out.flow->stats;
  r.distances.source = spg.root;
  r.distances.dist.assign(spg.base.vertex_count(), 0);
  return r;
}

SptResult cc_spt(const ColoredDigraph& g, VertexId source,
                 const ColorConstraint& alpha, const SptOptions& opts) {
  return run_pipeline(g, source, alpha, opts, /*minimize=*/false);
}

SptResult min_cc_spt(const ColoredDigraph& g, VertexId source,
                     const ColorConstraint& alpha, const SptOptions& opts) {
  return run_pipeline(g, source, alpha, opts, /*minimize=*/true);
}

std::vector<Violation> verify_spt(const ColoredDigraph& g, VertexId s,
                                  const Arborescence& t,
                                  const ColorConstraint& alpha) {
  std::vector<Violation> v = verify_arborescence(g, s, t, alpha);
  for (const Violation& x : v) {
    if (is_structural(x.kind)) return v;
  }

  DistanceTable d;
  try {
    d = sssp(g, s, SsspMode::kBellmanFord);
  } catch (const Error& e) {
    v.push_back({ViolationKind::kNegativeCycle, s, e.what()});
    return v;
  }

  std::unordered_map<EdgeId, std::size_t> position;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    position.emplace(g.edge(i).original_index, i);
  }
  const int n = g.vertex_count();
  std::vector<Weight> tree_dist(n, 0);
  std::vector<std::uint8_t> known(n, 0);
  known[s] = 1;
  std::vector<VertexId> chain;
  for (VertexId x = 0; x < n; ++x) {
    chain.clear();
    VertexId y = x;
    while (!known[y]) {
      chain.push_back(y);
      y = g.edge(position.at(t.parent_edge[y])).tail;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const EdgeRecord& e = g.edge(position.at(t.parent_edge[*it]));
      tree_dist[*it] = tree_dist[e.tail] + e.weight;
      known[*it] = 1;
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (!d.reachable(x) || tree_dist[x] != d.at(x)) {
      v.push_back({ViolationKind::kNotShortest, x,
                   "tree path weight " + std::to_string(tree_dist[x]) +
                       " differs from the shortest distance"});
    }
  }
  return v;
}

AtLeastInstance at_least_transform(const ColoredDigraph& g,
                                   const ColorConstraint& lower) {
  const int q = g.color_count();
  const std::int64_t n = g.vertex_count();
  if (static_cast<int>(lower.size()) != q) {
    throw Error(ErrorKind::kWrongColorCount,
                "lower-bound vector length does not match the color count");
  }
  for (std::int64_t a : lower.values()) {
    if (a < 0) throw Error(ErrorKind::kPrecondition, "negative lower bound");
  }
  if (lower.sum() > n - 1) {
    throw Error(ErrorKind::kLowerBoundTooLarge,
                "lower bounds sum to " + std::to_string(lower.sum()) +
                    " but a tree has only " + std::to_string(n - 1) +
                    " edges");
  }
  const auto m = static_cast<EdgeId>(g.edge_count());
  std::vector<EdgeRecord> edges;
  edges.reserve(2 * g.edge_count());
  for (EdgeId i = 0; i < m; ++i) {
    EdgeRecord e = g.edge(i);
    e.original_index = i;
    edges.push_back(e);
  }
  for (EdgeId i = 0; i < m; ++i) {
    EdgeRecord e = g.edge(i);
    e.color = q + 1;
    e.original_index = m + i;
    edges.push_back(e);
  }
  std::vector<std::int64_t> alpha(lower.values().begin(), lower.values().end());
  alpha.push_back(n - 1 - lower.sum());
  return {ColoredDigraph(g.vertex_count(), q + 1, std::move(edges)),
          ColorConstraint(std::move(alpha))};
}

SptResult cc_spt_at_least(const ColoredDigraph& g, VertexId source,
                          const ColorConstraint& lower,
                          const SptOptions& opts) {
  require_valid(g);
  const AtLeastInstance inst = at_least_transform(g, lower);
  SptResult r = cc_spt(inst.graph, source, inst.alpha, opts);
  if (!r.tree) return r;
  const auto m = static_cast<EdgeId>(g.edge_count());
  Arborescence& t = *r.tree;
  t.color_counts.assign(g.color_count(), 0);
  for (EdgeId& id : t.parent_edge) {
    if (id == kNoEdge) continue;
    if (id >= m) id -= m;
    ++t.color_counts[g.edge(id).color - 1];
  }
  return r;
}

}  // namespace ccspt
