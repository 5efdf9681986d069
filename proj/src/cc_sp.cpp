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

#include "ccspt/cc_sp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccspt/error.hpp"
#include "ccspt/sssp.hpp"

namespace ccspt {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max();

void check_endpoints(int n, VertexId s, VertexId t) {
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw Error(ErrorKind::kBadVertexId, "source or target out of range");
  }
}

void check_alpha(const ColorConstraint& alpha, int q) {
  if (static_cast<int>(alpha.size()) != q) {
    throw Error(ErrorKind::kWrongColorCount,
                "alpha has " + std::to_string(alpha.size()) +
                    " entries for " + std::to_string(q) + " colors");
  }
}

// Arc position of (u, v) in a vertex-colored graph; -1 when absent.
EdgeId find_arc(const VertexColoredDigraph& g, VertexId u, VertexId v) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].tail == u && g.edges[i].head == v) {
      return static_cast<EdgeId>(i);
    }
  }
  return kNoEdge;
}

// Cuts closed sub-walks out of a walk, leaving a simple path.
Path strip_cycles(const Path& walk, int n) {
  Path p;
  std::vector<std::int32_t> at(n, -1);
  p.vertices.push_back(walk.vertices[0]);
  at[walk.vertices[0]] = 0;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const VertexId v = walk.vertices[i + 1];
    if (at[v] >= 0) {
      const std::size_t keep = at[v];
      for (std::size_t j = keep + 1; j < p.vertices.size(); ++j) {
        at[p.vertices[j]] = -1;
      }
      p.vertices.resize(keep + 1);
      p.edges.resize(keep);
    } else {
      at[v] = static_cast<std::int32_t>(p.vertices.size());
      p.vertices.push_back(v);
      p.edges.push_back(walk.edges[i]);
    }
  }
  return p;
}

}  // namespace

void require_valid(const VertexColoredDigraph& g) {
  if (static_cast<int>(g.vertex_color.size()) != g.vertex_count) {
    throw Error(ErrorKind::kPrecondition, "vertex color table has wrong size");
  }
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (g.vertex_color[v] < 1 || g.vertex_color[v] > g.color_count) {
      Error e(ErrorKind::kBadColorId,
              "vertex " + std::to_string(v) + " has color " +
                  std::to_string(g.vertex_color[v]));
      e.vertex = v;
      throw e;
    }
  }
  for (const VcEdge& e : g.edges) {
    if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 ||
        e.head >= g.vertex_count) {
      throw Error(ErrorKind::kBadVertexId, "edge endpoint out of range");
    }
    if (e.tail == e.head) {
      throw Error(ErrorKind::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.tail));
    }
  }
}

Weight path_weight(const ColoredDigraph& g, const Path& p) {
  Weight w = 0;
  for (EdgeId e : p.edges) w += g.edge(e).weight;
  return w;
}

Weight path_weight(const VertexColoredDigraph& g, const Path& p) {
  Weight w = 0;
  for (EdgeId e : p.edges) w += g.edges[e].weight;
  return w;
}

std::vector<std::int64_t> path_color_counts(const ColoredDigraph& g,
                                            const Path& p) {
  std::vector<std::int64_t> c(g.color_count(), 0);
  for (EdgeId e : p.edges) ++c[g.edge(e).color - 1];
  return c;
}

std::vector<std::int64_t> path_color_counts(const VertexColoredDigraph& g,
                                            const Path& p) {
  std::vector<std::int64_t> c(g.color_count, 0);
  for (VertexId v : p.vertices) ++c[g.vertex_color[v] - 1];
  return c;
}

std::pair<CcSpInstance, ReductionCertificate> vcc_to_cc(
    const VccSpInstance& inst) {
  const VertexColoredDigraph& g = inst.graph;
  require_valid(g);
  check_endpoints(g.vertex_count, inst.source, inst.target);
  check_alpha(inst.alpha, g.color_count);
  const int n = g.vertex_count;
  const auto m = static_cast<EdgeId>(g.edges.size());

  std::vector<EdgeSpec> specs;
  specs.reserve(m + 1);
  for (const VcEdge& e : g.edges) {
    specs.push_back({e.tail, e.head, g.vertex_color[e.head], e.weight});
  }
  specs.push_back({n, inst.source, g.vertex_color[inst.source], 0});

  ReductionCertificate cert;
  cert.direction = ReductionDirection::kVccToCc;
  cert.weight_scale = 1;
  cert.vertex_map.resize(n + 1);
  for (VertexId v = 0; v < n; ++v) cert.vertex_map[v] = v;
  cert.vertex_map[n] = kNoVertex;
  cert.edge_map.resize(m + 1);
  for (EdgeId e = 0; e < m; ++e) cert.edge_map[e] = e;
  cert.edge_map[m] = kNoEdge;

  CcSpInstance out{make_graph(n + 1, g.color_count, specs), n, inst.target,
                   inst.alpha};
  return {std::move(out), std::move(cert)};
}

std::pair<VccSpInstance, ReductionCertificate> cc_to_vcc(
    const CcSpInstance& inst) {
  const ColoredDigraph& g = inst.graph;
  require_valid(g);
  check_endpoints(g.vertex_count(), inst.source, inst.target);
  check_alpha(inst.alpha, g.color_count());
  const auto m = static_cast<EdgeId>(g.edge_count());
  const VertexId s2 = m;
  const VertexId t2 = m + 1;

  VccSpInstance out;
  VertexColoredDigraph& h = out.graph;
  h.vertex_count = m + 2;
  h.color_count = std::max(g.color_count(), 1);
  h.vertex_color.resize(m + 2);
  for (EdgeId e = 0; e < m; ++e) h.vertex_color[e] = g.edge(e).color;
  h.vertex_color[s2] = 1;
  h.vertex_color[t2] = 1;

  const Adjacency out_adj = out_adjacency(g);
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeRecord& ee = g.edge(e);
    for (std::int32_t f : out_adj.of(ee.head)) {
      h.edges.push_back({e, f, ee.weight + g.edge(f).weight});
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (g.edge(e).tail == inst.source) {
      h.edges.push_back({s2, e, g.edge(e).weight});
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (g.edge(e).head == inst.target) {
      h.edges.push_back({e, t2, g.edge(e).weight});
    }
  }
  if (inst.source == inst.target) h.edges.push_back({s2, t2, 0});

  std::vector<std::int64_t> alpha(inst.alpha.values().begin(),
                                  inst.alpha.values().end());
  if (alpha.empty()) alpha.push_back(0);
  alpha[0] += 2;
  out.alpha = ColorConstraint(std::move(alpha));
  out.source = s2;
  out.target = t2;

  ReductionCertificate cert;
  cert.direction = ReductionDirection::kCcToVcc;
  cert.weight_scale = 2;
  cert.vertex_map.resize(m + 2);
  for (EdgeId e = 0; e < m; ++e) cert.vertex_map[e] = e;
  cert.vertex_map[s2] = kNoEdge;
  cert.vertex_map[t2] = kNoEdge;
  return {std::move(out), std::move(cert)};
}

Path push_forward(const ReductionCertificate& cert, const CcSpInstance& cc,
                  const VccSpInstance& vcc, const Path& p) {
  Path out;
  if (cert.direction == ReductionDirection::kVccToCc) {
    // p lives in vcc; prepend the new source and its edge.
    const auto n = static_cast<VertexId>(vcc.graph.vertex_count);
    out.vertices.push_back(n);
    out.vertices.insert(out.vertices.end(), p.vertices.begin(),
                        p.vertices.end());
    out.edges.push_back(static_cast<EdgeId>(vcc.graph.edges.size()));
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
    return out;
  }
  // p lives in cc; walk the line graph.
  const auto m = static_cast<VertexId>(cc.graph.edge_count());
  out.vertices.push_back(m);
  for (EdgeId e : p.edges) out.vertices.push_back(e);
  out.vertices.push_back(m + 1);
  for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
    const EdgeId a = find_arc(vcc.graph, out.vertices[i], out.vertices[i + 1]);
    if (a == kNoEdge) {
      throw Error(ErrorKind::kPrecondition, "path has no image arc");
    }
    out.edges.push_back(a);
  }
  return out;
}

Path pull_back(const ReductionCertificate& cert, const CcSpInstance& cc,
               const VccSpInstance& vcc, const Path& p) {
  (void)vcc;
  Path out;
  if (cert.direction == ReductionDirection::kVccToCc) {
    // p lives in cc and starts at the new source.
    if (p.edges.empty()) {
      throw Error(ErrorKind::kPrecondition, "path does not leave the source");
    }
    out.vertices.assign(p.vertices.begin() + 1, p.vertices.end());
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      out.edges.push_back(cert.edge_map[p.edges[i]]);
    }
    return out;
  }
  // p lives in vcc: s', v_e1, ..., v_ek, t'.
  if (p.vertices.size() < 2) {
    throw Error(ErrorKind::kPrecondition, "path misses a terminal");
  }
  out.vertices.push_back(cc.source);
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    const EdgeId e = cert.vertex_map[p.vertices[i]];
    out.edges.push_back(e);
    out.vertices.push_back(cc.graph.edge(e).head);
  }
  return out;
}

CcSpAnswer cc_sp_decide(const CcSpInstance& inst, const CcSpOptions& opts) {
  const ColoredDigraph& g = inst.graph;
  require_valid(g);
  const int n = g.vertex_count();
  const int q = g.color_count();
  check_endpoints(n, inst.source, inst.target);
  check_alpha(inst.alpha, q);
  for (std::int64_t a : inst.alpha.values()) {
    if (a < 0) throw Error(ErrorKind::kPrecondition, "negative budget");
  }

  CcSpAnswer ans;
  const DistanceTable d = sssp(g, inst.source, SsspMode::kAuto);
  if (!d.reachable(inst.target)) return ans;
  ans.reachable = true;
  ans.shortest = d.at(inst.target);

  // Mixed-radix state index; adding an edge of color c adds radix[c-1], so
  // increasing index order is a topological order of the state graph.
  std::vector<std::int64_t> bound(q), radix(q);
  std::int64_t states = 1;
  for (int c = 0; c < q; ++c) {
    bound[c] = std::min<std::int64_t>(inst.alpha.values()[c], n - 1);
    radix[c] = states;
    if (states > opts.state_cap / (bound[c] + 1)) {
      throw Error(ErrorKind::kBudgetStateOverflow,
                  "more than " + std::to_string(opts.state_cap) +
                      " budget states per vertex");
    }
    states *= bound[c] + 1;
  }
  if (states > opts.state_cap || states > opts.total_state_cap / n) {
    throw Error(ErrorKind::kBudgetStateOverflow,
                std::to_string(states) + " budget states per vertex over " +
                    std::to_string(n) + " vertices exceed the cap");
  }

  const auto slot = [n](std::int64_t k, VertexId v) {
    return static_cast<std::size_t>(k) * n + v;
  };
  std::vector<Weight> dist(static_cast<std::size_t>(states) * n, kInf);
  std::vector<EdgeId> pred(dist.size(), kNoEdge);
  dist[slot(0, inst.source)] = 0;
  std::vector<std::int64_t> digit(q, 0);
  for (std::int64_t k = 0; k < states; ++k) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const EdgeRecord& e = g.edge(i);
      const Weight du = dist[slot(k, e.tail)];
      if (du == kInf || digit[e.color - 1] == bound[e.color - 1]) continue;
      const std::size_t to = slot(k + radix[e.color - 1], e.head);
      if (du + e.weight < dist[to]) {
        dist[to] = du + e.weight;
        pred[to] = static_cast<EdgeId>(i);
      }
    }
    for (int c = 0; c < q; ++c) {  // advance the digit vector
      if (++digit[c] <= bound[c]) break;
      digit[c] = 0;
    }
  }

  std::int64_t best = -1;
  for (std::int64_t k = 0; k < states; ++k) {
    const Weight w = dist[slot(k, inst.target)];
    if (w != kInf && (best < 0 || w < dist[slot(best, inst.target)])) best = k;
  }
  if (best < 0 || dist[slot(best, inst.target)] != ans.shortest) return ans;

  ans.yes = true;
  Path walk;
  VertexId v = inst.target;
  std::int64_t k = best;
  walk.vertices.push_back(v);
  while (!(v == inst.source && k == 0)) {
    const EdgeId e = pred[slot(k, v)];
    if (e == kNoEdge) throw Error(ErrorKind::kInternal, "broken predecessor");
    walk.edges.push_back(e);
    k -= radix[g.edge(e).color - 1];
    v = g.edge(e).tail;
    walk.vertices.push_back(v);
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  ans.witness = strip_cycles(walk, n);
  return ans;
}

CcSpAnswer vcc_sp_decide(const VccSpInstance& inst, const CcSpOptions& opts) {
  auto [cc, cert] = vcc_to_cc(inst);
  CcSpAnswer a = cc_sp_decide(cc, opts);
  if (a.witness) a.witness = pull_back(cert, cc, inst, *a.witness);
  return a;
}

}  // namespace ccspt
