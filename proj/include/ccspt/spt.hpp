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

// Color-constrained shortest path trees.
//
// Pipeline: distances from the source, the shortest paths graph of tight
// edges, then an arborescence solver on that DAG. Inputs with a zero-weight
// cycle among tight edges are refused (kNonPositiveCycle) before any solver
// runs.

#ifndef CCSPT_SPT_HPP_
#define CCSPT_SPT_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ccspt/arborescence.hpp"
#include "ccspt/graph.hpp"
#include "ccspt/sssp.hpp"

namespace ccspt {

enum class SolverChoice { kAuto, kFlow, kMatch, kRedBlue };
enum class SolverUsed { kFlow, kMatch, kRedBlue, kMinFlow, kMinRedBlue };

std::string_view solver_name(SolverUsed s);

struct SptOptions {
  SolverChoice solver = SolverChoice::kAuto;
  SsspMode sssp_mode = SsspMode::kAuto;
};

struct SptResult {
  std::optional<Arborescence> tree;  // nullopt: no alpha-colored SPT
  std::optional<VertexId> unrooted_witness;
  DistanceTable distances;
  std::size_t spg_edge_count = 0;
  SolverUsed solver_used = SolverUsed::kFlow;
  std::optional<DinitzStats> phase_stats;

  bool feasible() const noexcept { return tree.has_value(); }
};

// kAuto uses the red-blue solver when q == 2 and the flow solver otherwise.
SptResult cc_spt(const ColoredDigraph& g, VertexId source,
                 const ColorConstraint& alpha, const SptOptions& opts = {});

// kMatch is rejected (kPrecondition): there is no minimum-weight matching
// solver.
SptResult min_cc_spt(const ColoredDigraph& g, VertexId source,
                     const ColorConstraint& alpha, const SptOptions& opts = {});

// The arborescence stage alone, on an acyclic rooted graph.
SptResult solve_arborescence(const SpgGraph& spg, const ColorConstraint& alpha,
                             bool minimize, SolverChoice solver);

// Arborescence checks, then tree-path weights against independently
// recomputed Bellman-Ford distances. Never throws.
std::vector<Violation> verify_spt(const ColoredDigraph& g, VertexId s,
                                  const Arborescence& t,
                                  const ColorConstraint& alpha);

struct AtLeastInstance {
  ColoredDigraph graph;  // q+1 colors; edge m+i duplicates edge i
  ColorConstraint alpha;
};

// Lower bounds -> upper bounds: every edge gets a duplicate of a fresh color
// q+1 with budget n-1-sum(lower); the original colors keep budget lower_i.
// Throws kLowerBoundTooLarge when sum(lower) > n-1.
AtLeastInstance at_least_transform(const ColoredDigraph& g,
                                   const ColorConstraint& lower);

// Solves the at-least variant on g and maps the tree back onto g's edges.
SptResult cc_spt_at_least(const ColoredDigraph& g, VertexId source,
                          const ColorConstraint& lower,
                          const SptOptions& opts = {});

}  // namespace ccspt

#endif  // CCSPT_SPT_HPP_
