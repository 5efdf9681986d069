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

#include "ccspt/sssp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace ccspt {

namespace {

constexpr std::int64_t kParallelEdgeThreshold = 1 << 15;

void require_source(const ColoredDigraph& g, VertexId source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw Error(ErrorKind::kBadVertexId,
                "source vertex " + std::to_string(source) + " out of range");
  }
}

DistanceTable run_bfs(const ColoredDigraph& g, VertexId source, Weight w) {
  DistanceTable d{source, std::vector<Weight>(g.vertex_count(), kUnreachable),
                  SsspMode::kBfs};
  const Adjacency out = out_adjacency(g);
  std::vector<std::int64_t> hops(g.vertex_count(), -1);
  std::deque<VertexId> queue{source};
  hops[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (std::int32_t pos : out.of(u)) {
      const VertexId v = g.edge(pos).head;
      if (hops[v] < 0) {
        hops[v] = hops[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (hops[v] >= 0) d.dist[v] = hops[v] * w;
  }
  return d;
}

DistanceTable run_dijkstra(const ColoredDigraph& g, VertexId source) {
  DistanceTable d{source, std::vector<Weight>(g.vertex_count(), kUnreachable),
                  SsspMode::kDijkstra};
  const Adjacency out = out_adjacency(g);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  d.dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du != d.dist[u]) continue;
    for (std::int32_t pos : out.of(u)) {
      const EdgeRecord& e = g.edge(pos);
      const Weight cand = du + e.weight;
      if (cand < d.dist[e.head]) {
        d.dist[e.head] = cand;
        heap.emplace(cand, e.head);
      }
    }
  }
  return d;
}

DistanceTable run_bellman_ford(const ColoredDigraph& g, VertexId source) {
  const int n = g.vertex_count();
  DistanceTable d{source, std::vector<Weight>(n, kUnreachable),
                  SsspMode::kBellmanFord};
  d.dist[source] = 0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const EdgeRecord& e : g.edges()) {
      if (d.dist[e.tail] == kUnreachable) continue;
      const Weight cand = d.dist[e.tail] + e.weight;
      if (cand < d.dist[e.head]) {
        d.dist[e.head] = cand;
        changed = true;
      }
    }
    if (!changed) return d;
  }
  // Still relaxing after n rounds.
  throw Error(ErrorKind::kNegativeCycleReachable,
              "negative-weight cycle reachable from vertex " +
                  std::to_string(source));
}

}  // namespace

std::string_view sssp_mode_name(SsspMode mode) {
  switch (mode) {
    case SsspMode::kAuto: return "auto";
    case SsspMode::kBfs: return "bfs";
    case SsspMode::kDijkstra: return "dijkstra";
    case SsspMode::kBellmanFord: return "bellman-ford";
  }
  return "unknown";
}

SsspMode select_sssp_mode(const ColoredDigraph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return SsspMode::kBfs;
  const Weight first = edges.front().weight;
  const bool uniform = std::all_of(edges.begin(), edges.end(),
                                   [&](const auto& e) { return e.weight == first; });
  if (uniform && first >= 0) return SsspMode::kBfs;
  const bool nonneg = std::all_of(edges.begin(), edges.end(),
                                  [](const auto& e) { return e.weight >= 0; });
  return nonneg ? SsspMode::kDijkstra : SsspMode::kBellmanFord;
}

DistanceTable sssp(const ColoredDigraph& g, VertexId source, SsspMode mode) {
  require_source(g, source);
  if (mode == SsspMode::kAuto) mode = select_sssp_mode(g);
  const auto edges = g.edges();
  switch (mode) {
    case SsspMode::kBfs: {
      const Weight w = edges.empty() ? 0 : edges.front().weight;
      for (const EdgeRecord& e : edges) {
        if (e.weight != w || w < 0) {
          throw Error(ErrorKind::kPrecondition,
                      "bfs mode needs one common non-negative weight");
        }
      }
      return run_bfs(g, source, w);
    }
    case SsspMode::kDijkstra:
      for (const EdgeRecord& e : edges) {
        if (e.weight < 0) {
          throw Error(ErrorKind::kPrecondition,
                      "dijkstra mode needs non-negative weights");
        }
      }
      return run_dijkstra(g, source);
    case SsspMode::kBellmanFord:
    case SsspMode::kAuto:
      break;
  }
  return run_bellman_ford(g, source);
}

AcyclicityResult is_acyclic(const ColoredDigraph& g) {
  const int n = g.vertex_count();
  const Adjacency out = out_adjacency(g);
  AcyclicityResult r;
  std::vector<std::int32_t> indeg(n, 0);
  for (const EdgeRecord& e : g.edges()) ++indeg[e.head];

  // Kahn's algorithm with a FIFO seeded in id order.
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  r.topo_order.reserve(n);
  while (!ready.empty()) {
    const VertexId u = ready.front();
    ready.pop_front();
    r.topo_order.push_back(u);
    for (std::int32_t pos : out.of(u)) {
      if (--indeg[g.edge(pos).head] == 0) ready.push_back(g.edge(pos).head);
    }
  }
  if (static_cast<int>(r.topo_order.size()) == n) return r;

  // Every leftover vertex keeps an in-edge from another leftover vertex, so
  // walking backwards along such edges must revisit a vertex.
  r.acyclic = false;
  std::vector<std::uint8_t> done(n, 0);
  for (VertexId v : r.topo_order) done[v] = 1;
  r.topo_order.clear();
  const Adjacency in = in_adjacency(g);
  VertexId start = 0;
  while (done[start]) ++start;

  std::vector<std::int32_t> seen_at(n, -1);
  std::vector<VertexId> walk;
  std::vector<std::int32_t> walk_edges;  // walk_edges[k] enters walk[k]
  VertexId v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<std::int32_t>(walk.size());
    walk.push_back(v);
    std::int32_t chosen = -1;
    for (std::int32_t pos : in.of(v)) {
      if (!done[g.edge(pos).tail]) {
        chosen = pos;
        break;
      }
    }
    walk_edges.push_back(chosen);
    v = g.edge(chosen).tail;
  }
  // walk[k+1] -> walk[k] via walk_edges[k]; the cycle is the suffix from v.
  const std::int32_t first = seen_at[v];
  for (std::int32_t k = static_cast<std::int32_t>(walk.size()) - 1; k >= first;
       --k) {
    r.cycle_vertices.push_back(walk[k]);
  }
  // Now cycle_vertices[j] -> cycle_vertices[j+1] for every j (cyclically).
  for (std::size_t j = 0; j < r.cycle_vertices.size(); ++j) {
    const VertexId head =
        r.cycle_vertices[(j + 1) % r.cycle_vertices.size()];
    r.cycle_edges.push_back(
        g.edge(walk_edges[seen_at[head]]).original_index);
  }
  return r;
}

std::vector<std::uint8_t> tight_edge_mask_serial(const ColoredDigraph& g,
                                                 const DistanceTable& d) {
  std::vector<std::uint8_t> mask(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeRecord& e = g.edge(i);
    mask[i] = d.reachable(e.tail) && d.reachable(e.head) &&
              d.at(e.head) == d.at(e.tail) + e.weight;
  }
  return mask;
}

std::vector<std::uint8_t> tight_edge_mask(const ColoredDigraph& g,
                                          const DistanceTable& d) {
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
  std::vector<std::uint8_t> mask(edges.size(), 0);
  const Weight* dist = d.dist.data();
#pragma omp parallel for schedule(static) if (m >= kParallelEdgeThreshold)
  for (std::int64_t i = 0; i < m; ++i) {
    const EdgeRecord& e = edges[i];
    const Weight du = dist[e.tail];
    const Weight dv = dist[e.head];
    mask[i] = du != kUnreachable && dv != kUnreachable && dv == du + e.weight;
  }
  return mask;
}

namespace {

SpgGraph finish_spg(ColoredDigraph base, VertexId root, ErrorKind on_cycle) {
  AcyclicityResult acyc = is_acyclic(base);
  if (!acyc.acyclic) {
    Error err(on_cycle,
              on_cycle == ErrorKind::kNonPositiveCycle
                  ? "zero-weight cycle on shortest paths"
                  : "input graph is not acyclic");
    err.cycle_vertices = std::move(acyc.cycle_vertices);
    err.cycle_edges = std::move(acyc.cycle_edges);
    throw err;
  }
  return SpgGraph{std::move(base), root, std::move(acyc.topo_order)};
}

}  // namespace

SpgGraph build_spg(const ColoredDigraph& g, VertexId source,
                   const DistanceTable& d) {
  require_source(g, source);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!d.reachable(v)) {
      Error err(ErrorKind::kUnreachableVertex,
                "vertex " + std::to_string(v) + " is unreachable from " +
                    std::to_string(source));
      err.vertex = v;
      throw err;
    }
  }
  const std::vector<std::uint8_t> mask = tight_edge_mask(g, d);
  std::vector<EdgeRecord> kept;
  kept.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (mask[i]) kept.push_back(g.edge(i));
  }
  return finish_spg(
      ColoredDigraph(g.vertex_count(), g.color_count(), std::move(kept)),
      source, ErrorKind::kNonPositiveCycle);
}

SpgGraph spg_from_dag(const ColoredDigraph& g, VertexId root) {
  require_source(g, root);
  return finish_spg(g, root, ErrorKind::kNotAcyclic);
}

std::vector<VertexId> reachable_from(const ColoredDigraph& g,
                                     VertexId source) {
  require_source(g, source);
  const Adjacency out = out_adjacency(g);
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (std::int32_t pos : out.of(u)) {
      const VertexId v = g.edge(pos).head;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<VertexId> result;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) result.push_back(v);
  }
  return result;
}

}  // namespace ccspt
