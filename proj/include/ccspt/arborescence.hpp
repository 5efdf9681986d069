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

// Color-constrained arborescences of an acyclic, rooted graph.
//
// On a DAG any choice of one in-edge per non-root vertex is an
// arborescence, so every solver here only decides which color enters each
// vertex and then picks a representative edge of that color: the smallest
// original_index for the decision solvers, the minimum weight (then the
// smallest original_index) for the minimum-weight solvers.
//
// All solvers take budgets alpha of length q; bounds above n-1 are treated
// as n-1.

#ifndef CCSPT_ARBORESCENCE_HPP_
#define CCSPT_ARBORESCENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccspt/flow.hpp"
#include "ccspt/graph.hpp"
#include "ccspt/sssp.hpp"

namespace ccspt {

struct Arborescence {
  VertexId root = 0;
  // Per vertex: original_index of the tree edge entering it, kNoEdge for
  // the root.
  std::vector<EdgeId> parent_edge;
  std::vector<std::int64_t> color_counts;  // index c-1
  Weight total_weight = 0;

  bool operator==(const Arborescence&) const = default;
};

struct ArbOutcome {
  std::optional<Arborescence> tree;
  // Set when some non-root vertex has no in-edge at all.
  std::optional<VertexId> unrooted_witness;
  std::optional<FlowAssignment> flow;

  bool feasible() const noexcept { return tree.has_value(); }
};

ArbOutcome cc_arb_flow(const SpgGraph& spg, const ColorConstraint& alpha);
ArbOutcome cc_arb_match(const SpgGraph& spg, const ColorConstraint& alpha);
// q must be 2 (throws kWrongColorCount). Linear time.
ArbOutcome cc_rb_arb(const SpgGraph& spg, const ColorConstraint& alpha);
ArbOutcome min_cc_arb_flow(const SpgGraph& spg, const ColorConstraint& alpha);
// q must be 2. Linear time plus one sort of the both-colored vertices.
ArbOutcome min_cc_rb_arb(const SpgGraph& spg, const ColorConstraint& alpha);

// Red = color 1, blue = color 2.
struct RbPartition {
  std::vector<VertexId> v_r;   // only red in-edges
  std::vector<VertexId> v_b;   // only blue in-edges
  std::vector<VertexId> v_rb;  // both
  std::vector<VertexId> unrooted;
  // Minimum in-edge weight per color, indexed by vertex (v_rb only).
  std::vector<Weight> r_min;
  std::vector<Weight> b_min;
};

RbPartition partition_red_blue(const SpgGraph& spg);

// Process-wide count of solver entries. The pipeline tests use it to show
// that refused inputs never reach a solver.
std::uint64_t solver_invocations();

enum class ViolationKind {
  kBadRoot,
  kMalformed,
  kRootHasParent,
  kMissingParent,
  kUnknownEdge,
  kWrongHead,
  kInDegree,
  kNotSpanning,
  kColorBudget,
  kCountMismatch,
  kWeightMismatch,
  kNotShortest,
  kNegativeCycle,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  VertexId vertex = kNoVertex;
  std::string detail;
};

// Checks `t` against g, s and alpha; parent_edge entries index g's edges
// by original_index. Never throws.
std::vector<Violation> verify_arborescence(const ColoredDigraph& g,
                                           VertexId s, const Arborescence& t,
                                           const ColorConstraint& alpha);

}  // namespace ccspt

#endif  // CCSPT_ARBORESCENCE_HPP_
