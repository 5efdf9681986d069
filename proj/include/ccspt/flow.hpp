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

// Flow networks for color-constrained arborescences.
//
// The arborescence network has a source, a sink, one node per color and one
// node per non-root vertex:
//
//   source --(alpha_c)--> color c --(1)--> vertex v --(1)--> sink
//
// with a color->vertex arc whenever v has an in-edge of color c. A flow of
// value n-1 picks one color per vertex without exceeding any budget.

#ifndef CCSPT_FLOW_HPP_
#define CCSPT_FLOW_HPP_

#include <cstdint>
#include <vector>

#include "ccspt/graph.hpp"
#include "ccspt/sssp.hpp"

namespace ccspt {

struct FlowArc {
  std::int32_t from = 0;
  std::int32_t to = 0;
  std::int64_t capacity = 0;
  std::int64_t cost = 0;

  bool operator==(const FlowArc&) const = default;
};

enum class NodeRole : std::uint8_t { kSource, kSink, kColor, kVertex };

struct FlowNetwork {
  std::int32_t node_count = 0;
  std::int32_t source = 0;
  std::int32_t sink = 1;
  std::vector<FlowArc> arcs;

  // Layout of arborescence networks; empty for ad-hoc networks.
  std::vector<NodeRole> role;
  std::vector<std::int32_t> label;  // color id or vertex id per node
  std::vector<std::int32_t> node_of_vertex;  // -1 for the root

  std::int32_t add_node(NodeRole r = NodeRole::kVertex, std::int32_t l = -1);
  std::int32_t add_arc(std::int32_t from, std::int32_t to,
                       std::int64_t capacity, std::int64_t cost = 0);
  static std::int32_t color_node(ColorId c) { return 1 + c; }
};

// Network for the spg's root and alpha. Budgets are clamped to n-1. When
// `with_costs` is set, each color->vertex arc costs the minimum weight of
// an in-edge of that color.
FlowNetwork build_arb_network(const SpgGraph& spg, const ColorConstraint& alpha,
                              const InDegreeByColor& pi,
                              bool with_costs = false);

struct DinitzStats {
  std::int64_t phases = 0;
  std::int64_t advances = 0;
  std::int64_t retreats = 0;
  std::int64_t augments = 0;
};

struct FlowAssignment {
  std::vector<std::int64_t> flow;  // per arc of the network
  std::int64_t value = 0;
  std::int64_t phases_executed = 0;
  std::int64_t total_cost = 0;
  DinitzStats stats;
};

// Blocking-flow maximum flow. Each phase builds the BFS level graph, then
// walks it depth first from the source: advance along an admissible arc,
// retreat (and delete the node) on a dead end, augment on reaching the
// sink. Arcs are scanned in insertion order through current-arc pointers.
FlowAssignment dinitz_max_flow(const FlowNetwork& net);

// Successive shortest augmenting paths with node potentials. Initial
// potentials come from Bellman-Ford so negative arc costs are allowed, as
// long as the network has no negative-cost cycle.
FlowAssignment min_cost_max_flow(const FlowNetwork& net);

// Capacity of the cut (reachable-from-source in the residual graph, rest).
std::int64_t residual_cut_capacity(const FlowNetwork& net,
                                   const FlowAssignment& f);

// Capacity, conservation and value checks; returns false on any breach.
bool is_feasible_flow(const FlowNetwork& net, const FlowAssignment& f);

}  // namespace ccspt

#endif  // CCSPT_FLOW_HPP_
