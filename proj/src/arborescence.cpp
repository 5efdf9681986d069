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

#include "ccspt/arborescence.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ccspt/matching.hpp"

namespace ccspt {

namespace {

std::atomic<std::uint64_t> g_solver_invocations{0};

// Representative in-edges per (vertex, color), as positions in spg.base.
class InEdgeTable {
 public:
  explicit InEdgeTable(const ColoredDigraph& g)
      : q_(g.color_count()),
        first_(static_cast<std::size_t>(g.vertex_count()) * q_, -1),
        lightest_(first_.size(), -1) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const EdgeRecord& e = g.edge(i);
      const std::size_t k = slot(e.head, e.color);
      const auto pos = static_cast<std::int32_t>(i);
      if (first_[k] < 0 || e.original_index < g.edge(first_[k]).original_index) {
        first_[k] = pos;
      }
      if (lightest_[k] < 0) {
        lightest_[k] = pos;
      } else {
        const EdgeRecord& cur = g.edge(lightest_[k]);
        if (e.weight < cur.weight ||
            (e.weight == cur.weight && e.original_index < cur.original_index)) {
          lightest_[k] = pos;
        }
      }
    }
  }

  // Smallest original_index; -1 if none.
  std::int32_t first(VertexId v, ColorId c) const { return first_[slot(v, c)]; }
  // Minimum weight, ties by smallest original_index; -1 if none.
  std::int32_t lightest(VertexId v, ColorId c) const {
    return lightest_[slot(v, c)];
  }

 private:
  std::size_t slot(VertexId v, ColorId c) const {
    return static_cast<std::size_t>(v) * q_ + (c - 1);
  }

  int q_;
  std::vector<std::int32_t> first_;
  std::vector<std::int32_t> lightest_;
};

void check_alpha(const SpgGraph& spg, const ColorConstraint& alpha) {
  if (static_cast<int>(alpha.size()) != spg.base.color_count()) {
    throw Error(ErrorKind::kWrongColorCount,
                "color constraint has " + std::to_string(alpha.size()) +
                    " entries for " +
                    std::to_string(spg.base.color_count()) + " colors");
  }
}

void require_two_colors(const SpgGraph& spg) {
  if (spg.base.color_count() != 2) {
    throw Error(ErrorKind::kWrongColorCount,
                "red-blue solvers need exactly 2 colors, got " +
                    std::to_string(spg.base.color_count()));
  }
}

std::optional<VertexId> find_unrooted(const SpgGraph& spg,
                                      const InDegreeByColor& pi) {
  for (VertexId v = 0; v < spg.base.vertex_count(); ++v) {
    if (v == spg.root) continue;
    bool any = false;
    for (ColorId c = 1; c <= pi.color_count() && !any; ++c) {
      any = pi.count(v, c) > 0;
    }
    if (!any) return v;
  }
  return std::nullopt;
}

// `chosen[v]` is a position in spg.base for every non-root v.
Arborescence assemble(const SpgGraph& spg,
                      const std::vector<std::int32_t>& chosen) {
  const ColoredDigraph& g = spg.base;
  Arborescence t;
  t.root = spg.root;
  t.parent_edge.assign(g.vertex_count(), kNoEdge);
  t.color_counts.assign(g.color_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == spg.root) continue;
    const EdgeRecord& e = g.edge(chosen[v]);
    t.parent_edge[v] = e.original_index;
    ++t.color_counts[e.color - 1];
    t.total_weight += e.weight;
  }
  return t;
}

std::int64_t clamped_budget_sum(const ColorConstraint& alpha,
                                std::int64_t limit) {
  std::int64_t sum = 0;
  for (std::int64_t a : alpha.values()) sum += std::clamp<std::int64_t>(a, 0, limit);
  return sum;
}

// Shared by the two flow solvers: run `solve` on the network, then read one
// color per vertex off the saturated color->vertex arcs.
template <typename Solve, typename Pick>
ArbOutcome solve_by_flow(const SpgGraph& spg, const ColorConstraint& alpha,
                         bool with_costs, Solve solve, Pick pick) {
  ++g_solver_invocations;
  check_alpha(spg, alpha);
  const ColoredDigraph& g = spg.base;
  const int n = g.vertex_count();
  const InDegreeByColor pi = in_degree_by_color(g);
  ArbOutcome out;
  if ((out.unrooted_witness = find_unrooted(spg, pi))) return out;
  if (n <= 1) {
    out.tree = assemble(spg, {});
    return out;
  }
  if (clamped_budget_sum(alpha, n - 1) < n - 1) return out;

  const FlowNetwork net = build_arb_network(spg, alpha, pi, with_costs);
  out.flow = solve(net);
  if (out.flow->value < n - 1) return out;

  const InEdgeTable table(g);
  std::vector<std::int32_t> chosen(n, -1);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (out.flow->flow[i] == 0 || net.role[a.from] != NodeRole::kColor ||
        net.role[a.to] != NodeRole::kVertex) {
      continue;
    }
    const VertexId v = net.label[a.to];
    chosen[v] = pick(table, v, net.label[a.from]);
  }
  out.tree = assemble(spg, chosen);
  return out;
}

}  // namespace

std::uint64_t solver_invocations() { return g_solver_invocations.load(); }

ArbOutcome cc_arb_flow(const SpgGraph& spg, const ColorConstraint& alpha) {
  return solve_by_flow(
      spg, alpha, /*with_costs=*/false,
      [](const FlowNetwork& net) { return dinitz_max_flow(net); },
      [](const InEdgeTable& t, VertexId v, ColorId c) { return t.first(v, c); });
}

ArbOutcome min_cc_arb_flow(const SpgGraph& spg, const ColorConstraint& alpha) {
  ArbOutcome out = solve_by_flow(
      spg, alpha, /*with_costs=*/true,
      [](const FlowNetwork& net) { return min_cost_max_flow(net); },
      [](const InEdgeTable& t, VertexId v, ColorId c) {
        return t.lightest(v, c);
      });
  if (out.tree && out.flow && out.tree->total_weight != out.flow->total_cost) {
    throw Error(ErrorKind::kInternal,
                "tree weight differs from the minimum flow cost");
  }
  return out;
}

ArbOutcome cc_arb_match(const SpgGraph& spg, const ColorConstraint& alpha) {
  ++g_solver_invocations;
  check_alpha(spg, alpha);
  const ColoredDigraph& g = spg.base;
  const int n = g.vertex_count();
  const int q = g.color_count();
  const InDegreeByColor pi = in_degree_by_color(g);
  ArbOutcome out;
  if ((out.unrooted_witness = find_unrooted(spg, pi))) return out;
  if (n <= 1) {
    out.tree = assemble(spg, {});
    return out;
  }
  if (clamped_budget_sum(alpha, n - 1) < n - 1) return out;

  // Right side: non-root vertices in id order. Left side: slots c_{i,j}.
  std::vector<VertexId> vertex_of_right;
  for (VertexId v = 0; v < n; ++v) {
    if (v != spg.root) vertex_of_right.push_back(v);
  }
  BipartiteGraph b;
  b.right_count = static_cast<std::int32_t>(vertex_of_right.size());
  std::vector<ColorId> color_of_left;
  for (ColorId c = 1; c <= q; ++c) {
    std::vector<std::int32_t> neighbours;
    for (std::int32_t r = 0; r < b.right_count; ++r) {
      if (pi.count(vertex_of_right[r], c) > 0) neighbours.push_back(r);
    }
    const std::int64_t slots = std::clamp<std::int64_t>(alpha.bound(c), 0, n - 1);
    for (std::int64_t j = 0; j < slots; ++j) {
      b.adjacency.push_back(neighbours);
      color_of_left.push_back(c);
    }
  }
  b.left_count = static_cast<std::int32_t>(b.adjacency.size());

  const Matching m = hopcroft_karp(b);
  if (m.size < b.right_count) return out;

  const InEdgeTable table(g);
  std::vector<std::int32_t> chosen(n, -1);
  for (std::int32_t r = 0; r < b.right_count; ++r) {
    const VertexId v = vertex_of_right[r];
    chosen[v] = table.first(v, color_of_left[m.left_of_right[r]]);
  }
  out.tree = assemble(spg, chosen);
  return out;
}

RbPartition partition_red_blue(const SpgGraph& spg) {
  require_two_colors(spg);
  const ColoredDigraph& g = spg.base;
  const int n = g.vertex_count();
  RbPartition p;
  p.r_min.assign(n, std::numeric_limits<Weight>::max());
  p.b_min.assign(n, std::numeric_limits<Weight>::max());
  std::vector<std::uint8_t> has_red(n, 0), has_blue(n, 0);
  for (const EdgeRecord& e : g.edges()) {
    if (e.color == 1) {
      has_red[e.head] = 1;
      p.r_min[e.head] = std::min(p.r_min[e.head], e.weight);
    } else {
      has_blue[e.head] = 1;
      p.b_min[e.head] = std::min(p.b_min[e.head], e.weight);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v == spg.root) continue;
    if (has_red[v] && has_blue[v]) {
      p.v_rb.push_back(v);
    } else if (has_red[v]) {
      p.v_r.push_back(v);
    } else if (has_blue[v]) {
      p.v_b.push_back(v);
    } else {
      p.unrooted.push_back(v);
    }
  }
  return p;
}

ArbOutcome cc_rb_arb(const SpgGraph& spg, const ColorConstraint& alpha) {
  ++g_solver_invocations;
  require_two_colors(spg);
  check_alpha(spg, alpha);
  const RbPartition p = partition_red_blue(spg);
  ArbOutcome out;
  if (!p.unrooted.empty()) {
    out.unrooted_witness = p.unrooted.front();
    return out;
  }
  const auto n_r = static_cast<std::int64_t>(p.v_r.size());
  const auto n_b = static_cast<std::int64_t>(p.v_b.size());
  const auto n_rb = static_cast<std::int64_t>(p.v_rb.size());
  if (n_r > alpha.bound(1) || n_b > alpha.bound(2)) return out;
  const std::int64_t red_slack = alpha.bound(1) - n_r;
  const std::int64_t blue_slack = alpha.bound(2) - n_b;
  if (n_rb > red_slack + blue_slack) return out;

  // X takes the first vertices of V_RB (id order) up to the red slack.
  const std::int64_t x_size = std::max<std::int64_t>(0, std::min(n_rb, red_slack));
  const InEdgeTable table(spg.base);
  std::vector<std::int32_t> chosen(spg.base.vertex_count(), -1);
  for (VertexId v : p.v_r) chosen[v] = table.first(v, 1);
  for (VertexId v : p.v_b) chosen[v] = table.first(v, 2);
  for (std::int64_t k = 0; k < n_rb; ++k) {
    const VertexId v = p.v_rb[k];
    chosen[v] = table.first(v, k < x_size ? 1 : 2);
  }
  out.tree = assemble(spg, chosen);
  return out;
}

ArbOutcome min_cc_rb_arb(const SpgGraph& spg, const ColorConstraint& alpha) {
  ++g_solver_invocations;
  require_two_colors(spg);
  check_alpha(spg, alpha);
  const RbPartition p = partition_red_blue(spg);
  ArbOutcome out;
  if (!p.unrooted.empty()) {
    out.unrooted_witness = p.unrooted.front();
    return out;
  }
  const std::int64_t n = spg.base.vertex_count();
  const std::int64_t a1 = alpha.bound(1);
  const std::int64_t a2 = alpha.bound(2);
  if (a1 + a2 < n - 1 || static_cast<std::int64_t>(p.v_r.size()) > a1 ||
      static_cast<std::int64_t>(p.v_b.size()) > a2) {
    return out;
  }

  std::vector<VertexId> red_prime;
  std::vector<VertexId> blue_prime;
  for (VertexId v : p.v_rb) {
    (p.r_min[v] <= p.b_min[v] ? red_prime : blue_prime).push_back(v);
  }

  // Vertices of the over-full side that switch color, cheapest switch
  // first. After the checks above, swap_count never exceeds the side's size.
  std::vector<VertexId> swapped;
  auto pick_swaps = [&](std::vector<VertexId>& side, std::int64_t over,
                        const std::vector<Weight>& stay,
                        const std::vector<Weight>& move) {
    std::sort(side.begin(), side.end(), [&](VertexId x, VertexId y) {
      const Weight dx = move[x] - stay[x];
      const Weight dy = move[y] - stay[y];
      return dx != dy ? dx < dy : x < y;
    });
    swapped.assign(side.begin(), side.begin() + over);
    side.erase(side.begin(), side.begin() + over);
  };
  const auto red_total = static_cast<std::int64_t>(p.v_r.size() + red_prime.size());
  const auto blue_total =
      static_cast<std::int64_t>(p.v_b.size() + blue_prime.size());
  bool swap_to_blue = false;
  if (red_total > a1) {
    if (red_total - a1 > static_cast<std::int64_t>(red_prime.size())) return out;
    pick_swaps(red_prime, red_total - a1, p.r_min, p.b_min);
    swap_to_blue = true;
  } else if (blue_total > a2) {
    if (blue_total - a2 > static_cast<std::int64_t>(blue_prime.size())) return out;
    pick_swaps(blue_prime, blue_total - a2, p.b_min, p.r_min);
  }

  const InEdgeTable table(spg.base);
  std::vector<std::int32_t> chosen(n, -1);
  for (VertexId v : p.v_r) chosen[v] = table.lightest(v, 1);
  for (VertexId v : red_prime) chosen[v] = table.lightest(v, 1);
  for (VertexId v : p.v_b) chosen[v] = table.lightest(v, 2);
  for (VertexId v : blue_prime) chosen[v] = table.lightest(v, 2);
  for (VertexId v : swapped) chosen[v] = table.lightest(v, swap_to_blue ? 2 : 1);
  out.tree = assemble(spg, chosen);
  return out;
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadRoot: return "BadRoot";
    case ViolationKind::kMalformed: return "Malformed";
    case ViolationKind::kRootHasParent: return "RootHasParent";
    case ViolationKind::kMissingParent: return "MissingParent";
    case ViolationKind::kUnknownEdge: return "UnknownEdge";
    case ViolationKind::kWrongHead: return "WrongHead";
    case ViolationKind::kInDegree: return "InDegree";
    case ViolationKind::kNotSpanning: return "NotSpanning";
    case ViolationKind::kColorBudget: return "ColorBudget";
    case ViolationKind::kCountMismatch: return "CountMismatch";
    case ViolationKind::kWeightMismatch: return "WeightMismatch";
    case ViolationKind::kNotShortest: return "NotShortest";
    case ViolationKind::kNegativeCycle: return "NegativeCycle";
  }
  return "Unknown";
}

std::vector<Violation> verify_arborescence(const ColoredDigraph& g,
                                           VertexId s, const Arborescence& t,
                                           const ColorConstraint& alpha) {
  std::vector<Violation> v;
  const int n = g.vertex_count();
  const int q = g.color_count();
  if (s < 0 || s >= n || t.root != s) {
    v.push_back({ViolationKind::kBadRoot, t.root, "tree root differs from source"});
    return v;
  }
  if (static_cast<int>(t.parent_edge.size()) != n ||
      static_cast<int>(t.color_counts.size()) != q ||
      static_cast<int>(alpha.size()) != q) {
    v.push_back({ViolationKind::kMalformed, kNoVertex,
                 "parent, count or budget vector has the wrong length"});
    return v;
  }

  std::unordered_map<EdgeId, std::size_t> position;
  position.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    position.emplace(g.edge(i).original_index, i);
  }

  std::vector<std::int64_t> counts(q, 0);
  Weight weight = 0;
  std::vector<std::int32_t> entering(n, 0);
  std::vector<VertexId> parent(n, kNoVertex);
  bool structure_ok = true;
  for (VertexId x = 0; x < n; ++x) {
    const EdgeId id = t.parent_edge[x];
    if (x == s) {
      if (id != kNoEdge) {
        v.push_back({ViolationKind::kRootHasParent, x, "root has a parent edge"});
        structure_ok = false;
      }
      continue;
    }
    if (id == kNoEdge) {
      v.push_back({ViolationKind::kMissingParent, x, "no parent edge"});
      structure_ok = false;
      continue;
    }
    const auto it = position.find(id);
    if (it == position.end()) {
      v.push_back({ViolationKind::kUnknownEdge, x,
                   "edge " + std::to_string(id) + " not in graph"});
      structure_ok = false;
      continue;
    }
    const EdgeRecord& e = g.edge(it->second);
    if (e.head != x) {
      v.push_back({ViolationKind::kWrongHead, x,
                   "edge " + std::to_string(id) + " enters " +
                       std::to_string(e.head)});
      structure_ok = false;
    }
    if (++entering[e.head] > 1) {
      v.push_back({ViolationKind::kInDegree, e.head,
                   "more than one tree edge enters the vertex"});
      structure_ok = false;
    }
    parent[x] = e.tail;
    ++counts[e.color - 1];
    weight += e.weight;
  }

  if (structure_ok) {
    // 0 = unknown, 1 = on current walk, 2 = reaches the root.
    std::vector<std::uint8_t> state(n, 0);
    state[s] = 2;
    std::vector<VertexId> walk;
    for (VertexId x = 0; x < n; ++x) {
      walk.clear();
      VertexId y = x;
      while (state[y] == 0) {
        state[y] = 1;
        walk.push_back(y);
        y = parent[y];
      }
      if (state[y] == 1) {
        v.push_back({ViolationKind::kNotSpanning, x,
                     "vertex does not reach the root"});
        for (VertexId w : walk) state[w] = 3;
      } else {
        const std::uint8_t result = state[y] == 2 ? 2 : 3;
        if (result == 3) {
          v.push_back({ViolationKind::kNotSpanning, x,
                       "vertex does not reach the root"});
        }
        for (VertexId w : walk) state[w] = result;
      }
    }
  }

  for (ColorId c = 1; c <= q; ++c) {
    if (counts[c - 1] != t.color_counts[c - 1]) {
      v.push_back({ViolationKind::kCountMismatch, kNoVertex,
                   "color " + std::to_string(c) + " count recorded as " +
                       std::to_string(t.color_counts[c - 1]) + ", actual " +
                       std::to_string(counts[c - 1])});
    }
    if (counts[c - 1] > alpha.bound(c)) {
      v.push_back({ViolationKind::kColorBudget, kNoVertex,
                   "color " + std::to_string(c) + " used " +
                       std::to_string(counts[c - 1]) + " times, budget " +
                       std::to_string(alpha.bound(c))});
    }
  }
  if (weight != t.total_weight) {
    v.push_back({ViolationKind::kWeightMismatch, kNoVertex,
                 "total weight recorded as " + std::to_string(t.total_weight) +
                     ", actual " + std::to_string(weight)});
  }
  return v;
}

}  // namespace ccspt
