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

#include "ccspt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ccspt {

namespace {

// Below this many edges the OpenMP kernels fall back to one thread.
constexpr std::int64_t kParallelEdgeThreshold = 1 << 15;

Adjacency build_adjacency(const ColoredDigraph& g, bool by_head) {
  const int n = g.vertex_count();
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const EdgeRecord& e : g.edges()) {
    ++adj.offsets[(by_head ? e.head : e.tail) + 1];
  }
  std::partial_sum(adj.offsets.begin(), adj.offsets.end(),
                   adj.offsets.begin());
  adj.edge_positions.resize(g.edge_count());
  std::vector<std::int32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeRecord& e = g.edge(i);
    adj.edge_positions[cursor[by_head ? e.head : e.tail]++] =
        static_cast<std::int32_t>(i);
  }
  return adj;
}

}  // namespace

ColoredDigraph::ColoredDigraph(int vertex_count, int color_count,
                               std::vector<EdgeRecord> edges)
    : vertex_count_(vertex_count),
      color_count_(color_count),
      edges_(std::move(edges)) {}

ColoredDigraph ColoredDigraph::from_specs(int vertex_count, int color_count,
                                          std::span<const EdgeSpec> specs) {
  std::vector<EdgeRecord> edges;
  edges.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const EdgeSpec& s = specs[i];
    edges.push_back({s.tail, s.head, s.color, s.weight,
                     static_cast<EdgeId>(i)});
  }
  return ColoredDigraph(vertex_count, color_count, std::move(edges));
}

std::int64_t ColorConstraint::sum() const {
  return std::accumulate(alpha_.begin(), alpha_.end(), std::int64_t{0});
}

std::optional<ValidationError> validate(const ColoredDigraph& g) {
  const int n = g.vertex_count();
  const int q = g.color_count();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeRecord& e = g.edge(i);
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      return ValidationError{ErrorKind::kBadVertexId, i};
    }
    if (e.color < 1 || e.color > q) {
      return ValidationError{ErrorKind::kBadColorId, i};
    }
    if (e.tail == e.head) {
      return ValidationError{ErrorKind::kSelfLoop, i};
    }
  }
  return std::nullopt;
}

void require_valid(const ColoredDigraph& g) {
  if (auto err = validate(g)) {
    throw Error(err->kind, std::string(error_kind_name(err->kind)) +
                               " at edge " + std::to_string(err->edge_ordinal));
  }
}

std::int64_t InDegreeByColor::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

InDegreeByColor in_degree_by_color_serial(const ColoredDigraph& g) {
  InDegreeByColor pi(g.vertex_count(), g.color_count());
  for (const EdgeRecord& e : g.edges()) {
    ++pi.at(e.head, e.color);
  }
  return pi;
}

InDegreeByColor in_degree_by_color(const ColoredDigraph& g) {
  InDegreeByColor pi(g.vertex_count(), g.color_count());
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(static) if (m >= kParallelEdgeThreshold)
  for (std::int64_t i = 0; i < m; ++i) {
    std::int32_t& slot = pi.at(edges[i].head, edges[i].color);
#pragma omp atomic
    ++slot;
  }
  return pi;
}

Adjacency out_adjacency(const ColoredDigraph& g) {
  return build_adjacency(g, /*by_head=*/false);
}

Adjacency in_adjacency(const ColoredDigraph& g) {
  return build_adjacency(g, /*by_head=*/true);
}

Restriction restrict_to(const ColoredDigraph& g,
                        std::span<const VertexId> vertices) {
  Restriction r;
  r.new_of_old.assign(g.vertex_count(), kNoVertex);
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    r.new_of_old[v] = static_cast<VertexId>(r.old_of_new.size());
    r.old_of_new.push_back(v);
  }
  std::vector<EdgeRecord> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeRecord& e = g.edge(i);
    const VertexId t = r.new_of_old[e.tail];
    const VertexId h = r.new_of_old[e.head];
    if (t == kNoVertex || h == kNoVertex) continue;
    kept.push_back({t, h, e.color, e.weight,
                    static_cast<EdgeId>(kept.size())});
    r.old_edge_of_new.push_back(static_cast<EdgeId>(i));
  }
  r.graph = ColoredDigraph(static_cast<int>(r.old_of_new.size()),
                           g.color_count(), std::move(kept));
  return r;
}

}  // namespace ccspt
