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

#include "ccspt/testkit.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccspt/error.hpp"

namespace ccspt::testkit {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max();

// In-edge positions per vertex, in edge-list order.
std::vector<std::vector<std::size_t>> in_lists(const ColoredDigraph& g) {
  std::vector<std::vector<std::size_t>> in(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    in[g.edge(i).head].push_back(i);
  }
  return in;
}

Arborescence tree_from_choice(const ColoredDigraph& g, VertexId root,
                              const std::vector<std::size_t>& pos_of_vertex) {
  Arborescence t;
  t.root = root;
  t.parent_edge.assign(g.vertex_count(), kNoEdge);
  t.color_counts.assign(g.color_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    const EdgeRecord& e = g.edge(pos_of_vertex[v]);
    t.parent_edge[v] = e.original_index;
    t.color_counts[e.color - 1] += 1;
    t.total_weight += e.weight;
  }
  return t;
}

void check_size(int n, int max_n) {
  if (n > max_n) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "brute force limited to " + std::to_string(max_n) +
                    " vertices, got " + std::to_string(n));
  }
}

template <typename Graph, typename TailHead>
std::vector<Path> simple_paths(const Graph& g, int n, std::size_t m,
                               VertexId s, VertexId t, int max_n,
                               TailHead endpoints) {
  check_size(n, max_n);
  std::vector<std::vector<EdgeId>> out(n);
  for (std::size_t i = 0; i < m; ++i) {
    out[endpoints(g, i).first].push_back(static_cast<EdgeId>(i));
  }
  std::vector<Path> paths;
  std::vector<bool> on_path(n, false);
  Path cur;
  cur.vertices.push_back(s);
  on_path[s] = true;
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    if (u == t) {
      paths.push_back(cur);
      return;
    }
    for (EdgeId e : out[u]) {
      const VertexId v = endpoints(g, e).second;
      if (on_path[v]) continue;
      on_path[v] = true;
      cur.vertices.push_back(v);
      cur.edges.push_back(e);
      dfs(v);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      on_path[v] = false;
    }
  };
  dfs(s);
  return paths;
}

bool fits(const std::vector<std::int64_t>& counts,
          const ColorConstraint& alpha) {
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > alpha.values()[c]) return false;
  }
  return true;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void for_each_spg_arborescence(const SpgGraph& spg,
                               const std::function<void(const Arborescence&)>& f,
                               std::int64_t cap) {
  const ColoredDigraph& g = spg.base;
  const int n = g.vertex_count();
  const auto in = in_lists(g);
  std::int64_t product = 1;
  for (VertexId v = 0; v < n; ++v) {
    if (v == spg.root) continue;
    if (in[v].empty()) return;
    product *= static_cast<std::int64_t>(in[v].size());
    if (product > cap) {
      throw Error(ErrorKind::kTooManyArborescences,
                  "more than " + std::to_string(cap) + " arborescences");
    }
  }
  // Odometer over the in-edge choices, last vertex fastest.
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      if (v != spg.root) pos[v] = in[v][digit[v]];
    }
    f(tree_from_choice(g, spg.root, pos));
    VertexId v = n - 1;
    for (; v >= 0; --v) {
      if (v == spg.root) continue;
      if (++digit[v] < in[v].size()) break;
      digit[v] = 0;
    }
    if (v < 0) return;
  }
}

std::vector<Arborescence> enumerate_spg_arborescences(const SpgGraph& spg,
                                                      std::int64_t cap) {
  std::vector<Arborescence> all;
  for_each_spg_arborescence(
      spg, [&](const Arborescence& t) { all.push_back(t); }, cap);
  return all;
}

bool within_budget(const std::vector<std::int64_t>& counts,
                   const ColorConstraint& alpha) {
  return fits(counts, alpha);
}

std::optional<Arborescence> brute_cc_arb_spg(const SpgGraph& spg,
                                             const ColorConstraint& alpha) {
  std::optional<Arborescence> found;
  for_each_spg_arborescence(spg, [&](const Arborescence& t) {
    if (!found && fits(t.color_counts, alpha)) found = t;
  });
  return found;
}

std::optional<Weight> brute_min_cc_arb(const SpgGraph& spg,
                                       const ColorConstraint& alpha) {
  std::optional<Weight> best;
  for_each_spg_arborescence(spg, [&](const Arborescence& t) {
    if (fits(t.color_counts, alpha) && (!best || t.total_weight < *best)) {
      best = t.total_weight;
    }
  });
  return best;
}

std::optional<Arborescence> brute_at_least(const SpgGraph& spg,
                                           const ColorConstraint& lower) {
  std::optional<Arborescence> found;
  for_each_spg_arborescence(spg, [&](const Arborescence& t) {
    if (found) return;
    for (std::size_t c = 0; c < t.color_counts.size(); ++c) {
      if (t.color_counts[c] < lower.values()[c]) return;
    }
    found = t;
  });
  return found;
}

std::optional<Arborescence> brute_cc_arb_general(const ColoredDigraph& g,
                                                 VertexId s,
                                                 const ColorConstraint& alpha,
                                                 int max_n) {
  const int n = g.vertex_count();
  check_size(n, max_n);
  auto in = in_lists(g);
  for (auto& list : in) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return g.edge(a).original_index < g.edge(b).original_index;
    });
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<std::int64_t> used(g.color_count(), 0);

  // Vertices in id order, in-edges by original_index: the first complete
  // selection is the lexicographically least.
  std::function<bool(VertexId)> choose = [&](VertexId v) -> bool {
    if (v == n) return true;
    if (v == s) return choose(v + 1);
    for (std::size_t p : in[v]) {
      const EdgeRecord& e = g.edge(p);
      if (used[e.color - 1] + 1 > alpha.values()[e.color - 1]) continue;
      bool cycle = false;
      for (VertexId x = e.tail; x != kNoVertex; x = parent[x]) {
        if (x == v) {
          cycle = true;
          break;
        }
      }
      if (cycle) continue;
      parent[v] = e.tail;
      pos[v] = p;
      ++used[e.color - 1];
      if (choose(v + 1)) return true;
      --used[e.color - 1];
      parent[v] = kNoVertex;
    }
    return false;
  };
  if (!choose(0)) return std::nullopt;
  return tree_from_choice(g, s, pos);
}

SpgGraph naive_spg(const ColoredDigraph& g, VertexId s) {
  const int n = g.vertex_count();
  std::vector<Weight> d(n, kInf);
  d[s] = 0;
  for (int round = 0; round < n; ++round) {
    for (const EdgeRecord& e : g.edges()) {
      if (d[e.tail] != kInf && d[e.tail] + e.weight < d[e.head]) {
        d[e.head] = d[e.tail] + e.weight;
      }
    }
  }
  std::vector<EdgeRecord> tight;
  for (const EdgeRecord& e : g.edges()) {
    if (d[e.tail] != kInf && d[e.tail] + e.weight == d[e.head]) {
      tight.push_back(e);
    }
  }
  SpgGraph spg{ColoredDigraph(n, g.color_count(), tight), s, {}};
  // Quadratic Kahn.
  std::vector<bool> placed(n, false);
  while (static_cast<int>(spg.topo_order.size()) < n) {
    bool progress = false;
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (const EdgeRecord& e : tight) {
        if (e.head == v && !placed[e.tail]) ready = false;
      }
      if (ready) {
        placed[v] = true;
        spg.topo_order.push_back(v);
        progress = true;
      }
    }
    if (!progress) {
      throw Error(ErrorKind::kNonPositiveCycle, "tight edges form a cycle");
    }
  }
  return spg;
}

std::vector<Path> enumerate_st_paths(const ColoredDigraph& g, VertexId s,
                                     VertexId t, int max_n) {
  return simple_paths(g, g.vertex_count(), g.edge_count(), s, t, max_n,
                      [](const ColoredDigraph& h, std::size_t i) {
                        return std::pair(h.edge(i).tail, h.edge(i).head);
                      });
}

std::vector<Path> enumerate_st_paths(const VertexColoredDigraph& g, VertexId s,
                                     VertexId t, int max_n) {
  return simple_paths(g, g.vertex_count, g.edges.size(), s, t, max_n,
                      [](const VertexColoredDigraph& h, std::size_t i) {
                        return std::pair(h.edges[i].tail, h.edges[i].head);
                      });
}

BrutePathAnswer brute_cc_sp(const CcSpInstance& inst, int max_n) {
  const ColoredDigraph& g = inst.graph;
  BrutePathAnswer a;
  const auto paths = enumerate_st_paths(g, inst.source, inst.target, max_n);
  for (const Path& p : paths) {
    Weight w = 0;
    for (EdgeId e : p.edges) w += g.edge(e).weight;
    if (!a.shortest || w < *a.shortest) a.shortest = w;
  }
  for (const Path& p : paths) {
    Weight w = 0;
    std::vector<std::int64_t> counts(g.color_count(), 0);
    for (EdgeId e : p.edges) {
      w += g.edge(e).weight;
      ++counts[g.edge(e).color - 1];
    }
    if (w == *a.shortest && fits(counts, inst.alpha)) a.yes = true;
  }
  return a;
}

BrutePathAnswer brute_vcc_sp(const VccSpInstance& inst, int max_n) {
  const VertexColoredDigraph& g = inst.graph;
  BrutePathAnswer a;
  const auto paths = enumerate_st_paths(g, inst.source, inst.target, max_n);
  for (const Path& p : paths) {
    Weight w = 0;
    for (EdgeId e : p.edges) w += g.edges[e].weight;
    if (!a.shortest || w < *a.shortest) a.shortest = w;
  }
  for (const Path& p : paths) {
    Weight w = 0;
    for (EdgeId e : p.edges) w += g.edges[e].weight;
    std::vector<std::int64_t> counts(g.color_count, 0);
    for (VertexId v : p.vertices) ++counts[g.vertex_color[v] - 1];
    if (w == *a.shortest && fits(counts, inst.alpha)) a.yes = true;
  }
  return a;
}

bool has_hamiltonian_path_from(const SimpleDigraph& d, VertexId s) {
  std::vector<std::vector<VertexId>> out(d.n);
  for (const auto& [u, v] : d.arcs) out[u].push_back(v);
  std::vector<bool> seen(d.n, false);
  std::function<bool(VertexId, int)> extend = [&](VertexId u, int depth) {
    if (depth == d.n) return true;
    for (VertexId v : out[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      if (extend(v, depth + 1)) return true;
      seen[v] = false;
    }
    return false;
  };
  seen[s] = true;
  return extend(s, 1);
}

GadgetInstance gen_hamiltonian_gadget(const SimpleDigraph& d, VertexId s) {
  const int n = d.n;
  std::vector<ColorId> rank(n);
  rank[s] = 1;
  ColorId next = 2;
  for (VertexId v = 0; v < n; ++v) {
    if (v != s) rank[v] = next++;
  }
  std::vector<EdgeSpec> specs;
  for (const auto& [u, v] : d.arcs) specs.push_back({u, v, rank[u], 1});
  for (VertexId v = 0; v < n; ++v) specs.push_back({v, n, rank[v], 1});
  return {make_graph(n + 1, n, specs), s,
          ColorConstraint(std::vector<std::int64_t>(n, 1))};
}

SimpleDigraph gen_random_simple_digraph(int n, double density,
                                        std::uint64_t seed) {
  Rng rng(seed);
  SimpleDigraph d;
  d.n = n;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(density)) d.arcs.emplace_back(u, v);
    }
  }
  return d;
}

ColoredDigraph gen_random_dag(int n, int q, double density, WeightRange w,
                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<EdgeSpec> specs;
  std::vector<bool> has_in(n, false);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (!rng.bernoulli(density)) continue;
      specs.push_back({i, j, static_cast<ColorId>(rng.uniform(1, q)),
                       rng.uniform(w.lo, w.hi)});
      has_in[j] = true;
    }
  }
  for (VertexId j = 1; j < n; ++j) {
    if (has_in[j]) continue;
    specs.push_back({0, j, static_cast<ColorId>(rng.uniform(1, q)),
                     rng.uniform(w.lo, w.hi)});
  }
  return make_graph(n, q, specs);
}

ColoredDigraph gen_random_positive_cycle_digraph(int n, int q, double density,
                                                 std::uint64_t seed,
                                                 WeightRange w) {
  if (w.lo < 1) {
    throw Error(ErrorKind::kPrecondition, "weights must be positive");
  }
  Rng rng(seed);
  std::vector<EdgeSpec> specs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || !rng.bernoulli(density)) continue;
      specs.push_back({u, v, static_cast<ColorId>(rng.uniform(1, q)),
                       rng.uniform(w.lo, w.hi)});
    }
  }
  // Grow the reachable set from 0, linking in the smallest missing vertex.
  std::vector<bool> reached(n, false);
  std::vector<VertexId> order;
  const auto spread = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const EdgeSpec& e : specs) {
        if (reached[e.tail] && !reached[e.head]) {
          reached[e.head] = true;
          order.push_back(e.head);
          grew = true;
        }
      }
    }
  };
  if (n > 0) {
    reached[0] = true;
    order.push_back(0);
  }
  spread();
  for (VertexId v = 0; v < n; ++v) {
    if (reached[v]) continue;
    const auto pick = rng.uniform(0, static_cast<std::int64_t>(order.size()) - 1);
    specs.push_back({order[pick], v, static_cast<ColorId>(rng.uniform(1, q)),
                     rng.uniform(w.lo, w.hi)});
    reached[v] = true;
    order.push_back(v);
    spread();
  }
  return make_graph(n, q, specs);
}

ColoredDigraph gen_layered_dag(int n, std::int64_t m, int q, int layer_width,
                               WeightRange w, std::uint64_t seed) {
  if (n < 2 || m < n - 1 || layer_width < 1) {
    throw Error(ErrorKind::kPrecondition, "layered DAG needs m >= n-1 >= 1");
  }
  Rng rng(seed);
  std::vector<EdgeRecord> edges;
  edges.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto v = static_cast<VertexId>(1 + i % (n - 1));
    const int layer = (v - 1) / layer_width;  // layer 0 is fed by the root
    VertexId tail = 0;
    if (layer > 0) {
      const std::int64_t lo = static_cast<std::int64_t>(layer - 1) * layer_width + 1;
      tail = static_cast<VertexId>(rng.uniform(lo, lo + layer_width - 1));
    }
    edges.push_back({tail, v, static_cast<ColorId>(rng.uniform(1, q)),
                     rng.uniform(w.lo, w.hi), static_cast<EdgeId>(i)});
  }
  return ColoredDigraph(n, q, std::move(edges));
}

ColorConstraint gen_alpha(int q, std::int64_t total, Rng& rng) {
  std::vector<std::int64_t> a(q, 0);
  if (q == 0) return ColorConstraint(std::move(a));
  for (std::int64_t i = 0; i < total; ++i) ++a[rng.uniform(0, q - 1)];
  return ColorConstraint(std::move(a));
}

CorpusInstance gen_corpus_instance(std::uint64_t instance_seed,
                                   const CorpusParams& params) {
  Rng rng(instance_seed);
  const int n = static_cast<int>(rng.uniform(params.min_n, params.max_n));
  const int q = static_cast<int>(rng.uniform(params.min_q, params.max_q));
  const double density = static_cast<double>(rng.uniform(15, 85)) / 100.0;
  const std::uint64_t graph_seed = rng.next();
  CorpusInstance inst;
  inst.seed = instance_seed;
  inst.source = 0;
  inst.graph = params.kind == CorpusKind::kDag
                   ? gen_random_dag(n, q, density, params.weights, graph_seed)
                   : gen_random_positive_cycle_digraph(n, q, density,
                                                       graph_seed,
                                                       params.weights);
  const std::int64_t total = rng.uniform(std::max(0, n - 2), 2 * n);
  inst.alpha = gen_alpha(q, total, rng);
  return inst;
}

Corpus gen_corpus(std::uint64_t seed, const CorpusParams& params) {
  Corpus c;
  c.seed = seed;
  c.instances.resize(params.count);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < params.count; ++i) {
    c.instances[i] = gen_corpus_instance(derive_seed(seed, i), params);
  }
  return c;
}

}  // namespace ccspt::testkit
