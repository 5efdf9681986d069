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

// Single-source shortest paths and the shortest paths graph.
//
// The shortest paths graph of (G, s) keeps exactly the tight edges, those
// (u, v) with dist(v) == dist(u) + w(u, v). When every cycle of G has
// positive weight it is acyclic, and its s-arborescences are exactly the
// shortest path trees of G. A cycle among tight edges always has weight
// zero; build_spg reports it instead of handing a cyclic graph onward.

#ifndef CCSPT_SSSP_HPP_
#define CCSPT_SSSP_HPP_

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "ccspt/graph.hpp"

namespace ccspt {

enum class SsspMode { kAuto, kBfs, kDijkstra, kBellmanFord };

std::string_view sssp_mode_name(SsspMode mode);

inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

struct DistanceTable {
  VertexId source = 0;
  std::vector<Weight> dist;
  SsspMode mode_used = SsspMode::kAuto;

  bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
  Weight at(VertexId v) const { return dist[v]; }
};

// mode kBfs requires one common non-negative weight, kDijkstra requires
// non-negative weights; kAuto picks the cheapest applicable mode. Throws
// kNegativeCycleReachable when Bellman-Ford finds a negative cycle.
DistanceTable sssp(const ColoredDigraph& g, VertexId source,
                   SsspMode mode = SsspMode::kAuto);

SsspMode select_sssp_mode(const ColoredDigraph& g);

struct AcyclicityResult {
  bool acyclic = true;
  std::vector<VertexId> topo_order;
  // Closed walk v0 -> v1 -> ... -> v0 (v0 not repeated) and the
  // original_index of each edge along it.
  std::vector<VertexId> cycle_vertices;
  std::vector<EdgeId> cycle_edges;
};

AcyclicityResult is_acyclic(const ColoredDigraph& g);

struct SpgGraph {
  ColoredDigraph base;  // edges keep the original_index of the input graph
  VertexId root = 0;
  std::vector<VertexId> topo_order;
};

// mask[i] != 0 iff edge i is tight under d. OpenMP kernel plus the serial
// reference it is tested against.
std::vector<std::uint8_t> tight_edge_mask(const ColoredDigraph& g,
                                          const DistanceTable& d);
std::vector<std::uint8_t> tight_edge_mask_serial(const ColoredDigraph& g,
                                                 const DistanceTable& d);

// Throws kUnreachableVertex if some vertex is unreachable from `source` and
// kNonPositiveCycle (with a witness cycle) if the tight edges are cyclic.
SpgGraph build_spg(const ColoredDigraph& g, VertexId source,
                   const DistanceTable& d);

// Treats an acyclic input as its own shortest paths graph (all distances
// zero). Throws kNotAcyclic with a witness cycle otherwise.
SpgGraph spg_from_dag(const ColoredDigraph& g, VertexId root);

// Vertices reachable from `source`, ascending.
std::vector<VertexId> reachable_from(const ColoredDigraph& g,
                                     VertexId source);

}  // namespace ccspt

#endif  // CCSPT_SSSP_HPP_
