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

// Edge-colored, integer-weighted directed multigraphs.
//
// Vertices are dense ids 0..n-1, colors are 1..q. Weights are exact signed
// 64-bit integers; decimal inputs are scaled to integers when parsed. A
// graph is immutable once constructed and may be shared freely across
// threads.

#ifndef CCSPT_GRAPH_HPP_
#define CCSPT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccspt/error.hpp"

namespace ccspt {

using VertexId = std::int32_t;
using ColorId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct EdgeRecord {
  VertexId tail = 0;
  VertexId head = 0;
  ColorId color = 1;
  Weight weight = 0;
  // Ordinal of this edge in the graph it originates from. For a graph built
  // directly from edge specs this equals the edge's position; subgraphs
  // (e.g. a shortest paths graph) keep the ordinal of the parent graph.
  EdgeId original_index = 0;

  bool operator==(const EdgeRecord&) const = default;
};

struct EdgeSpec {
  VertexId tail = 0;
  VertexId head = 0;
  ColorId color = 1;
  Weight weight = 0;
};

class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(int vertex_count, int color_count,
                 std::vector<EdgeRecord> edges);

  // Assigns original_index = position.
  static ColoredDigraph from_specs(int vertex_count, int color_count,
                                   std::span<const EdgeSpec> specs);

  int vertex_count() const noexcept { return vertex_count_; }
  int color_count() const noexcept { return color_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const EdgeRecord> edges() const noexcept { return edges_; }
  const EdgeRecord& edge(std::size_t pos) const { return edges_[pos]; }

  bool operator==(const ColoredDigraph&) const = default;

 private:
  int vertex_count_ = 0;
  int color_count_ = 0;
  std::vector<EdgeRecord> edges_;
};

inline ColoredDigraph make_graph(int vertex_count, int color_count,
                                 const std::vector<EdgeSpec>& specs) {
  return ColoredDigraph::from_specs(vertex_count, color_count, specs);
}

// Per-color upper bounds. bound(c) takes a 1-based color.
class ColorConstraint {
 public:
  ColorConstraint() = default;
  explicit ColorConstraint(std::vector<std::int64_t> alpha)
      : alpha_(std::move(alpha)) {}

  std::size_t size() const noexcept { return alpha_.size(); }
  std::int64_t bound(ColorId c) const { return alpha_[c - 1]; }
  std::span<const std::int64_t> values() const noexcept { return alpha_; }
  std::int64_t sum() const;

  bool operator==(const ColorConstraint&) const = default;

 private:
  std::vector<std::int64_t> alpha_;
};

struct ValidationError {
  ErrorKind kind;
  std::size_t edge_ordinal;
};

// Reports the first edge (by position) that breaks a graph invariant.
std::optional<ValidationError> validate(const ColoredDigraph& g);

// Throws Error with the matching kind when validate() fails.
void require_valid(const ColoredDigraph& g);

// pi(v, c): number of in-edges of v carrying color c.
class InDegreeByColor {
 public:
  InDegreeByColor(int vertex_count, int color_count)
      : vertex_count_(vertex_count),
        color_count_(color_count),
        counts_(static_cast<std::size_t>(vertex_count) * color_count, 0) {}

  std::int32_t count(VertexId v, ColorId c) const {
    return counts_[index(v, c)];
  }
  std::int32_t& at(VertexId v, ColorId c) { return counts_[index(v, c)]; }
  std::int64_t total() const;
  int vertex_count() const noexcept { return vertex_count_; }
  int color_count() const noexcept { return color_count_; }

  bool operator==(const InDegreeByColor&) const = default;

 private:
  std::size_t index(VertexId v, ColorId c) const {
    return static_cast<std::size_t>(v) * color_count_ + (c - 1);
  }

  int vertex_count_;
  int color_count_;
  std::vector<std::int32_t> counts_;
};

// OpenMP kernel; in_degree_by_color_serial is the single-pass reference.
InDegreeByColor in_degree_by_color(const ColoredDigraph& g);
InDegreeByColor in_degree_by_color_serial(const ColoredDigraph& g);

// Compressed adjacency: positions into g.edges(), grouped by vertex in
// edge-position order.
struct Adjacency {
  std::vector<std::int32_t> offsets;
  std::vector<std::int32_t> edge_positions;

  std::span<const std::int32_t> of(VertexId v) const {
    return std::span<const std::int32_t>(edge_positions)
        .subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

Adjacency out_adjacency(const ColoredDigraph& g);
Adjacency in_adjacency(const ColoredDigraph& g);

struct Restriction {
  ColoredDigraph graph;
  std::vector<VertexId> new_of_old;  // kNoVertex for dropped vertices
  std::vector<VertexId> old_of_new;
  std::vector<EdgeId> old_edge_of_new;
};

// Induced subgraph on `vertices`, renumbered densely in ascending old-id
// order. Surviving edges are renumbered densely as well.
Restriction restrict_to(const ColoredDigraph& g,
                        std::span<const VertexId> vertices);

}  // namespace ccspt

#endif  // CCSPT_GRAPH_HPP_
