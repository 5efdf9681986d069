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

#include "ccspt/spt.hpp"

#include <gtest/gtest.h>

#include "ccspt/testkit.hpp"
#include "fixtures.hpp"

namespace ccspt {
namespace {

using fixtures::alpha;
using fixtures::diamond;
using fixtures::kS;
using fixtures::kT;
using fixtures::throws_kind;

// Weight of the tree path from the root to v.
Weight tree_depth(const ColoredDigraph& g, const Arborescence& t, VertexId v) {
  Weight w = 0;
  while (v != t.root) {
    const EdgeRecord& e = g.edge(t.parent_edge[v]);
    w += e.weight;
    v = e.tail;
  }
  return w;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

TEST(CcSpt, DiamondFeasible) {
  const auto g = diamond();
  const auto r = cc_spt(g, kS, alpha({2, 1}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.tree->total_weight, 3);
  EXPECT_EQ(tree_depth(g, *r.tree, kT), 2);
  EXPECT_EQ(r.distances.at(kT), 2);
  EXPECT_EQ(r.solver_used, SolverUsed::kRedBlue);
  EXPECT_EQ(r.spg_edge_count, 4u);
  EXPECT_TRUE(verify_spt(g, kS, *r.tree, alpha({2, 1})).empty());
}

TEST(CcSpt, DiamondInfeasible) {
  EXPECT_FALSE(cc_spt(diamond(), kS, alpha({2, 0})).feasible());
}

TEST(CcSpt, VacuousBudgetsGiveAnyShortestPathTree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(9, 3, 0.3, seed);
    const auto r = cc_spt(g, 0, alpha({8, 8, 8}));
    ASSERT_TRUE(r.feasible());
    EXPECT_TRUE(verify_spt(g, 0, *r.tree, alpha({8, 8, 8})).empty()) << seed;
  }
}

TEST(CcSpt, UnreachableVertexIsAnError) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}});
  EXPECT_TRUE(throws_kind([&] { cc_spt(g, 0, alpha({2})); },
                          ErrorKind::kUnreachableVertex));
}

TEST(CcSpt, ZeroCycleOnShortestPathsIsRefused) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, 0}, {2, 1, 1, 0}});
  EXPECT_TRUE(throws_kind([&] { cc_spt(g, 0, alpha({2})); },
                          ErrorKind::kNonPositiveCycle));
}

TEST(CcSpt, NegativeCycleIsRefused) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, -2}, {2, 1, 1, 1}});
  EXPECT_TRUE(throws_kind([&] { cc_spt(g, 0, alpha({2})); },
                          ErrorKind::kNegativeCycleReachable));
}

TEST(CcSpt, SolverChoiceDoesNotChangeFeasibility) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(8, 2, 0.35, seed);
    testkit::Rng rng(seed);
    const auto a = testkit::gen_alpha(2, rng.uniform(5, 9), rng);
    bool first = true;
    bool expected = false;
    for (SolverChoice s : {SolverChoice::kFlow, SolverChoice::kMatch,
                           SolverChoice::kRedBlue, SolverChoice::kAuto}) {
      const auto r = cc_spt(g, 0, a, {s, SsspMode::kAuto});
      if (first) expected = r.feasible();
      first = false;
      EXPECT_EQ(r.feasible(), expected) << seed;
      if (r.tree) {
        EXPECT_TRUE(verify_spt(g, 0, *r.tree, a).empty());
      }
    }
  }
}

TEST(MinCcSpt, WeightedDiamond) {
  const auto g = fixtures::weighted_diamond();
  // Only the a-branch is shortest to t, so b keeps its own edge.
  const auto r = min_cc_spt(g, kS, alpha({2, 1}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.tree->total_weight, 3);
  EXPECT_EQ(r.distances.at(kT), 2);
}

TEST(MinCcSpt, MatchesEnumerationOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(7, 3, 0.4, seed, {1, 2});
    testkit::Rng rng(seed);
    const auto a = testkit::gen_alpha(3, rng.uniform(4, 10), rng);
    const auto expected = testkit::brute_min_cc_arb(testkit::naive_spg(g, 0), a);
    const auto r = min_cc_spt(g, 0, a);
    ASSERT_EQ(r.feasible(), expected.has_value()) << seed;
    if (expected) {
      EXPECT_EQ(r.tree->total_weight, *expected) << seed;
    }
  }
}

TEST(MinCcSpt, MatchingSolverRejected) {
  EXPECT_TRUE(throws_kind(
      [] { min_cc_spt(diamond(), kS, alpha({2, 1}), {SolverChoice::kMatch}); },
      ErrorKind::kPrecondition));
}

TEST(VerifySpt, NonShortestTreeFlagged) {
  // s->a 1, s->b 1, a->b 5: a tree hanging b under a is not shortest.
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 5}});
  Arborescence t{0, {kNoEdge, 0, 2}, {2}, 6};
  EXPECT_TRUE(has_kind(verify_spt(g, 0, t, alpha({2})), ViolationKind::kNotShortest));
  Arborescence good{0, {kNoEdge, 0, 1}, {2}, 2};
  EXPECT_TRUE(verify_spt(g, 0, good, alpha({2})).empty());
}

TEST(VerifySpt, WrongRootFlagged) {
  const auto g = diamond();
  Arborescence t{fixtures::kA, {kNoEdge, 0, 1, 2}, {2, 1}, 3};
  EXPECT_TRUE(has_kind(verify_spt(g, kS, t, alpha({3, 3})), ViolationKind::kBadRoot));
}

TEST(VerifySpt, NegativeCycleReported) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, -2}, {2, 1, 1, 1}});
  Arborescence t{0, {kNoEdge, 0, 1}, {2}, -1};
  EXPECT_TRUE(has_kind(verify_spt(g, 0, t, alpha({2})), ViolationKind::kNegativeCycle));
}

TEST(AtLeast, TransformShape) {
  const auto g = diamond();
  const auto inst = at_least_transform(g, alpha({2, 1}));
  EXPECT_EQ(inst.graph.color_count(), 3);
  EXPECT_EQ(inst.graph.edge_count(), 8u);
  EXPECT_EQ(inst.alpha, alpha({2, 1, 0}));
  for (std::size_t i = 0; i < 4; ++i) {
    const EdgeRecord& copy = inst.graph.edge(4 + i);
    EXPECT_EQ(copy.tail, g.edge(i).tail);
    EXPECT_EQ(copy.head, g.edge(i).head);
    EXPECT_EQ(copy.weight, g.edge(i).weight);
    EXPECT_EQ(copy.color, 3);
  }
}

TEST(AtLeast, SingleColorNoLowerBound) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, 1}});
  const auto inst = at_least_transform(g, alpha({0}));
  EXPECT_EQ(inst.alpha, alpha({0, 2}));
  const auto r = cc_spt_at_least(g, 0, alpha({0}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.tree->parent_edge, (std::vector<EdgeId>{kNoEdge, 0, 1}));
  EXPECT_EQ(r.tree->color_counts, (std::vector<std::int64_t>{2}));
}

TEST(AtLeast, DiamondLowerBounds) {
  const auto g = diamond();
  const auto r = cc_spt_at_least(g, kS, alpha({2, 1}));
  ASSERT_TRUE(r.feasible());
  EXPECT_GE(r.tree->color_counts[0], 2);
  EXPECT_GE(r.tree->color_counts[1], 1);
  EXPECT_TRUE(verify_spt(g, kS, *r.tree, alpha({3, 3})).empty());
  EXPECT_TRUE(cc_spt_at_least(g, kS, alpha({1, 2})).feasible());
  EXPECT_FALSE(cc_spt_at_least(g, kS, alpha({3, 0})).feasible());
}

TEST(AtLeast, Errors) {
  EXPECT_TRUE(throws_kind([] { at_least_transform(diamond(), alpha({2, 2})); },
                          ErrorKind::kLowerBoundTooLarge));
  EXPECT_TRUE(throws_kind([] { at_least_transform(diamond(), alpha({1})); },
                          ErrorKind::kWrongColorCount));
}

TEST(AtLeast, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(7, 2, 0.4, seed, {1, 2});
    testkit::Rng rng(seed + 1000);
    const auto lower = testkit::gen_alpha(2, rng.uniform(0, 6), rng);
    const auto expected = testkit::brute_at_least(testkit::naive_spg(g, 0), lower);
    const auto r = cc_spt_at_least(g, 0, lower);
    ASSERT_EQ(r.feasible(), expected.has_value()) << seed;
    if (r.tree) {
      for (int c = 0; c < 2; ++c) {
        EXPECT_GE(r.tree->color_counts[c], lower.values()[c]);
      }
      EXPECT_TRUE(verify_spt(g, 0, *r.tree, alpha({6, 6})).empty());
    }
  }
}

}  // namespace
}  // namespace ccspt
