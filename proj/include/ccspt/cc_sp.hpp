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

// Color-constrained shortest s-t paths, edge-colored (CC-SP) and
// vertex-colored (VCC-SP), the two reductions between them, and a
// color-budget dynamic program deciding CC-SP.

#ifndef CCSPT_CC_SP_HPP_
#define CCSPT_CC_SP_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ccspt/graph.hpp"

namespace ccspt {

struct VcEdge {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 0;

  bool operator==(const VcEdge&) const = default;
};

struct VertexColoredDigraph {
  int vertex_count = 0;
  int color_count = 0;
  std::vector<ColorId> vertex_color;  // 1-based colors
  std::vector<VcEdge> edges;

  bool operator==(const VertexColoredDigraph&) const = default;
};

// Throws kBadVertexId / kBadColorId / kSelfLoop.
void require_valid(const VertexColoredDigraph& g);

struct CcSpInstance {
  ColoredDigraph graph;
  VertexId source = 0;
  VertexId target = 0;
  ColorConstraint alpha;
};

struct VccSpInstance {
  VertexColoredDigraph graph;
  VertexId source = 0;
  VertexId target = 0;
  ColorConstraint alpha;
};

// A walk given by its vertices and by the positions of its edges in the
// graph's edge list; vertices.size() == edges.size() + 1.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool operator==(const Path&) const = default;
};

Weight path_weight(const ColoredDigraph& g, const Path& p);
Weight path_weight(const VertexColoredDigraph& g, const Path& p);
// Edge colors for CC, vertex colors (all path vertices) for VCC. Index c-1.
std::vector<std::int64_t> path_color_counts(const ColoredDigraph& g,
                                            const Path& p);
std::vector<std::int64_t> path_color_counts(const VertexColoredDigraph& g,
                                            const Path& p);

enum class ReductionDirection { kVccToCc, kCcToVcc };

struct ReductionCertificate {
  ReductionDirection direction = ReductionDirection::kVccToCc;
  // vcc -> cc: image vertex -> source vertex (kNoVertex for the new source),
  //            image edge -> source edge (kNoEdge for the new edge).
  // cc -> vcc: image vertex -> source edge it stands for (kNoEdge for the
  //            new terminals); edge_map is empty.
  std::vector<std::int32_t> vertex_map;
  std::vector<std::int32_t> edge_map;
  int weight_scale = 1;
};

// New vertex n becomes the source with a weight-0 edge into the old source;
// every edge takes the color of its head. Edge m is the new edge.
std::pair<CcSpInstance, ReductionCertificate> vcc_to_cc(
    const VccSpInstance& inst);

// Directed line graph: vertex e per edge e, s' = m, t' = m+1. Arcs in order:
// e -> f for head(e) == tail(f) (e ascending, f in edge order), s' -> e for
// edges leaving s, e -> t' for edges entering t, and s' -> t' with weight 0
// when s == t so that the empty path keeps an image. Weights are doubled:
// w(e)+w(f) inside the line graph, w(e) on terminal arcs. Budgets become
// (alpha_1 + 2, alpha_2, ...); with q == 0 the image has one color.
std::pair<VccSpInstance, ReductionCertificate> cc_to_vcc(
    const CcSpInstance& inst);

// Image of a source-instance path under the reduction.
Path push_forward(const ReductionCertificate& cert, const CcSpInstance& cc,
                  const VccSpInstance& vcc, const Path& p);
// Preimage of an image-instance path. Inverse of push_forward.
Path pull_back(const ReductionCertificate& cert, const CcSpInstance& cc,
               const VccSpInstance& vcc, const Path& p);

struct CcSpOptions {
  // Budget states per vertex, prod_i (min(alpha_i, n-1) + 1).
  std::int64_t state_cap = 1'000'000;
  // Vertex-state pairs overall; bounds memory.
  std::int64_t total_state_cap = std::int64_t{1} << 24;
};

struct CcSpAnswer {
  bool yes = false;
  std::optional<Path> witness;  // a simple path when yes
  Weight shortest = 0;          // delta(s,t); meaningless when unreachable
  bool reachable = false;
};

// YES iff some s-t path of weight delta(s,t) uses at most alpha_i edges of
// color i. Throws kNegativeCycleReachable, kBudgetStateOverflow, and
// kPrecondition for negative budgets.
CcSpAnswer cc_sp_decide(const CcSpInstance& inst, const CcSpOptions& opts = {});

// Through vcc_to_cc; the witness is pulled back to the vertex-colored graph.
CcSpAnswer vcc_sp_decide(const VccSpInstance& inst,
                         const CcSpOptions& opts = {});

}  // namespace ccspt

#endif  // CCSPT_CC_SP_HPP_
