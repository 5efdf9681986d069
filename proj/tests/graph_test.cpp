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

#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "ccspt/testkit.hpp"
#include "fixtures.hpp"

namespace ccspt {
namespace {

using fixtures::diamond;
using fixtures::kA;
using fixtures::kB;
using fixtures::kS;
using fixtures::kT;

TEST(Validate, MinimalGraphIsValid) {
  EXPECT_FALSE(validate(make_graph(2, 1, {{0, 1, 1, 0}})).has_value());
}

TEST(Validate, SelfLoop) {
  const auto err = validate(make_graph(2, 1, {{0, 1, 1, 0}, {0, 0, 1, 0}}));
  ASSERT_TRUE(err.has_value());
  EXPECT_EQ(err->kind, ErrorKind::kSelfLoop);
  EXPECT_EQ(err->edge_ordinal, 1u);
}

TEST(Validate, ColorOutOfRange) {
  const auto err = validate(make_graph(2, 2, {{0, 1, 3, 0}}));
  ASSERT_TRUE(err.has_value());
  EXPECT_EQ(err->kind, ErrorKind::kBadColorId);
}

TEST(Validate, VertexOutOfRange) {
  const auto err = validate(make_graph(2, 1, {{0, 2, 1, 0}}));
  ASSERT_TRUE(err.has_value());
  EXPECT_EQ(err->kind, ErrorKind::kBadVertexId);
  EXPECT_TRUE(fixtures::throws_kind(
      [] { require_valid(make_graph(2, 1, {{-1, 1, 1, 0}})); },
      ErrorKind::kBadVertexId));
}

TEST(Validate, ParallelEdgesAndUnusedColorsAreAllowed) {
  EXPECT_FALSE(
      validate(make_graph(2, 5, {{0, 1, 1, 0}, {0, 1, 1, 0}})).has_value());
}

TEST(Validate, RepeatedCallsAgree) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 0}, {2, 2, 1, 0}});
  const auto a = validate(g);
  const auto b = validate(g);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->kind, b->kind);
  EXPECT_EQ(a->edge_ordinal, b->edge_ordinal);
}

TEST(InDegreeByColor, EmptyEdgeSet) {
  const auto pi = in_degree_by_color(make_graph(3, 2, {}));
  for (VertexId v = 0; v < 3; ++v) {
    for (ColorId c = 1; c <= 2; ++c) EXPECT_EQ(pi.count(v, c), 0);
  }
}

TEST(InDegreeByColor, DirectCount) {
  const auto pi =
      in_degree_by_color(make_graph(3, 2, {{0, 1, 1, 0}, {2, 1, 1, 0}, {0, 2, 2, 0}}));
  EXPECT_EQ(pi.count(1, 1), 2);
  EXPECT_EQ(pi.count(2, 2), 1);
  EXPECT_EQ(pi.total(), 3);
  EXPECT_EQ(pi.count(0, 1) + pi.count(0, 2) + pi.count(1, 2) + pi.count(2, 1), 0);
}

TEST(InDegreeByColor, DiamondMatchesIndependentCount) {
  const auto g = diamond();
  std::map<std::pair<VertexId, ColorId>, int> counted;
  for (const EdgeRecord& e : g.edges()) ++counted[{e.head, e.color}];
  const auto pi = in_degree_by_color(g);
  for (VertexId v = 0; v < 4; ++v) {
    for (ColorId c = 1; c <= 2; ++c) EXPECT_EQ(pi.count(v, c), (counted[{v, c}]));
  }
  EXPECT_EQ(pi.count(kA, 1), 1);
  EXPECT_EQ(pi.count(kB, 2), 1);
  EXPECT_EQ(pi.count(kT, 1), 1);
  EXPECT_EQ(pi.count(kT, 2), 1);
}

TEST(InDegreeByColor, TotalsEqualEdgeCountOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(
        12, 4, 0.3, seed, {1, 5});
    EXPECT_EQ(in_degree_by_color(g).total(),
              static_cast<std::int64_t>(g.edge_count()));
  }
}

TEST(InDegreeByColor, ParallelKernelMatchesSerialReference) {
  // Large enough to take the OpenMP path.
  const auto g = testkit::gen_layered_dag(20000, 200000, 7, 500, {1, 3}, 42);
  EXPECT_EQ(in_degree_by_color(g), in_degree_by_color_serial(g));
}

TEST(Adjacency, ListsEveryEdgeOnce) {
  const auto g = diamond();
  const auto out = out_adjacency(g);
  const auto in = in_adjacency(g);
  ASSERT_EQ(out.of(kS).size(), 2u);
  ASSERT_EQ(in.of(kT).size(), 2u);
  EXPECT_EQ(out.edge_positions.size(), g.edge_count());
  EXPECT_EQ(in.edge_positions.size(), g.edge_count());
}

TEST(RestrictTo, AllVerticesIsIdentity) {
  const auto g = diamond();
  const std::vector<VertexId> all{0, 1, 2, 3};
  const Restriction r = restrict_to(g, all);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.old_of_new, all);
  EXPECT_EQ(r.new_of_old, all);
}

TEST(RestrictTo, EmptySet) {
  const Restriction r = restrict_to(diamond(), {});
  EXPECT_EQ(r.graph.vertex_count(), 0);
  EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(RestrictTo, DiamondWithoutB) {
  const auto g = diamond();
  const std::vector<VertexId> keep{kS, kA, kT};
  const Restriction r = restrict_to(g, keep);
  // Surviving edges by membership test on the input.
  std::vector<EdgeId> expected;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto in_set = [&](VertexId v) {
      return std::find(keep.begin(), keep.end(), v) != keep.end();
    };
    if (in_set(g.edge(i).tail) && in_set(g.edge(i).head)) {
      expected.push_back(static_cast<EdgeId>(i));
    }
  }
  ASSERT_EQ(expected.size(), 2u);
  EXPECT_EQ(r.old_edge_of_new, expected);
  EXPECT_EQ(r.graph.edge(0).tail, r.new_of_old[kS]);
  EXPECT_EQ(r.graph.edge(1).head, r.new_of_old[kT]);
}

TEST(RestrictTo, FullRestrictionTwiceIsIdentity) {
  const auto g = testkit::gen_random_dag(9, 3, 0.5, {1, 4}, 7);
  std::vector<VertexId> half{0, 2, 3, 5, 8};
  const Restriction once = restrict_to(g, half);
  std::vector<VertexId> all(once.graph.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(restrict_to(once.graph, all).graph, once.graph);
}

}  // namespace
}  // namespace ccspt
