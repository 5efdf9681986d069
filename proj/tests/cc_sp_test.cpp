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

#include "ccspt/cc_sp.hpp"

#include <gtest/gtest.h>

#include <set>

#include "ccspt/testkit.hpp"
#include "fixtures.hpp"

namespace ccspt {
namespace {

using fixtures::alpha;
using fixtures::diamond;
using fixtures::kA;
using fixtures::kS;
using fixtures::kT;
using fixtures::throws_kind;

CcSpInstance diamond_instance(std::vector<std::int64_t> a) {
  return {diamond(), kS, kT, alpha(std::move(a))};
}

// Path 0 -> 1 -> 2 with colors 1, 2, 1 and a shortcut 0 -> 2 of weight 3.
VccSpInstance small_vcc(std::vector<std::int64_t> a) {
  VertexColoredDigraph g{3, 2, {1, 2, 1}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}}};
  return {g, 0, 2, alpha(std::move(a))};
}

bool is_simple_walk(const ColoredDigraph& g, VertexId s, VertexId t,
                    const Path& p) {
  if (p.vertices.empty() || p.vertices.front() != s || p.vertices.back() != t) {
    return false;
  }
  if (p.edges.size() + 1 != p.vertices.size()) return false;
  std::set<VertexId> seen(p.vertices.begin(), p.vertices.end());
  if (seen.size() != p.vertices.size()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeRecord& e = g.edge(p.edges[i]);
    if (e.tail != p.vertices[i] || e.head != p.vertices[i + 1]) return false;
  }
  return true;
}

TEST(CcSpDecide, DiamondOneColorPath) {
  const auto ans = cc_sp_decide(diamond_instance({2, 0}));
  ASSERT_TRUE(ans.yes);
  EXPECT_EQ(ans.shortest, 2);
  ASSERT_TRUE(ans.witness.has_value());
  EXPECT_EQ(ans.witness->vertices, (std::vector<VertexId>{kS, kA, kT}));
  EXPECT_EQ(path_color_counts(diamond(), *ans.witness),
            (std::vector<std::int64_t>{2, 0}));
}

TEST(CcSpDecide, DiamondSplitBudgetFails) {
  EXPECT_FALSE(cc_sp_decide(diamond_instance({1, 1})).yes);
  EXPECT_FALSE(cc_sp_decide(diamond_instance({0, 0})).yes);
  EXPECT_FALSE(testkit::brute_cc_sp(diamond_instance({1, 1})).yes);
}

TEST(CcSpDecide, SourceIsTarget) {
  const auto ans = cc_sp_decide({diamond(), kA, kA, alpha({0, 0})});
  ASSERT_TRUE(ans.yes);
  EXPECT_EQ(ans.shortest, 0);
  EXPECT_TRUE(ans.witness->edges.empty());
}

TEST(CcSpDecide, UnreachableTarget) {
  const auto ans = cc_sp_decide({diamond(), kT, kS, alpha({4, 4})});
  EXPECT_FALSE(ans.yes);
  EXPECT_FALSE(ans.reachable);
}

TEST(CcSpDecide, OnlyShortestPathsCount) {
  // Cheap path needs two red edges, the long one needs none.
  const auto g = make_graph(3, 2, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 2, 5}});
  EXPECT_FALSE(cc_sp_decide({g, 0, 2, alpha({1, 5})}).yes);
  EXPECT_TRUE(cc_sp_decide({g, 0, 2, alpha({2, 0})}).yes);
}

TEST(CcSpDecide, ZeroCycleIsStrippedFromWitness) {
  // 1 <-> 3 is a zero cycle the walk could wander through.
  const auto g = make_graph(4, 1, {{0, 1, 1, 1}, {1, 3, 1, 0}, {3, 1, 1, 0},
                                   {1, 2, 1, 1}});
  const auto ans = cc_sp_decide({g, 0, 2, alpha({3})});
  ASSERT_TRUE(ans.yes);
  EXPECT_TRUE(is_simple_walk(g, 0, 2, *ans.witness));
  EXPECT_EQ(path_weight(g, *ans.witness), 2);
}

TEST(CcSpDecide, Errors) {
  EXPECT_TRUE(throws_kind([] { cc_sp_decide(diamond_instance({-1, 2})); },
                          ErrorKind::kPrecondition));
  EXPECT_TRUE(throws_kind([] { cc_sp_decide(diamond_instance({2})); },
                          ErrorKind::kWrongColorCount));
  const auto neg = make_graph(3, 1, {{0, 1, 1, 1}, {1, 2, 1, -2}, {2, 1, 1, 1}});
  EXPECT_TRUE(throws_kind([&] { cc_sp_decide({neg, 0, 2, alpha({2})}); },
                          ErrorKind::kNegativeCycleReachable));
  CcSpOptions tight;
  tight.state_cap = 2;
  EXPECT_TRUE(throws_kind([&] { cc_sp_decide(diamond_instance({2, 2}), tight); },
                          ErrorKind::kBudgetStateOverflow));
}

TEST(CcSpDecide, AgreesWithPathEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testkit::Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(2, 7));
    const int q = static_cast<int>(rng.uniform(1, 3));
    const auto g = testkit::gen_random_positive_cycle_digraph(n, q, 0.4, seed, {1, 3});
    std::vector<std::int64_t> a(q);
    for (auto& x : a) x = rng.uniform(0, 3);
    const CcSpInstance inst{g, 0, static_cast<VertexId>(n - 1), alpha(a)};
    const auto ans = cc_sp_decide(inst);
    const auto brute = testkit::brute_cc_sp(inst);
    ASSERT_EQ(ans.yes, brute.yes) << seed;
    if (ans.yes) {
      EXPECT_TRUE(is_simple_walk(g, inst.source, inst.target, *ans.witness));
      EXPECT_EQ(path_weight(g, *ans.witness), *brute.shortest);
      EXPECT_TRUE(testkit::within_budget(path_color_counts(g, *ans.witness), inst.alpha));
    }
  }
}

TEST(VccSpDecide, SmallInstance) {
  // Shortest is 0->1->2 (weight 2) with colors 1, 2, 1.
  EXPECT_TRUE(vcc_sp_decide(small_vcc({2, 1})).yes);
  EXPECT_FALSE(vcc_sp_decide(small_vcc({2, 0})).yes);
  EXPECT_FALSE(vcc_sp_decide(small_vcc({1, 1})).yes);
  const auto ans = vcc_sp_decide(small_vcc({2, 1}));
  EXPECT_EQ(ans.witness->vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(path_weight(small_vcc({}).graph, *ans.witness), 2);
}

TEST(VccToCc, Shape) {
  const auto [cc, cert] = vcc_to_cc(small_vcc({2, 1}));
  EXPECT_EQ(cc.graph.vertex_count(), 4);
  EXPECT_EQ(cc.graph.edge_count(), 4u);
  EXPECT_EQ(cc.source, 3);
  EXPECT_EQ(cc.target, 2);
  EXPECT_EQ(cc.alpha, alpha({2, 1}));
  // Every edge takes the color of its head.
  const auto& vc = small_vcc({}).graph.vertex_color;
  for (const EdgeRecord& e : cc.graph.edges()) {
    EXPECT_EQ(e.color, vc[e.head]);
  }
  const EdgeRecord& fresh = cc.graph.edge(3);
  EXPECT_EQ(fresh.tail, 3);
  EXPECT_EQ(fresh.head, 0);
  EXPECT_EQ(fresh.weight, 0);
  EXPECT_EQ(cert.vertex_map[3], kNoVertex);
  EXPECT_EQ(cert.edge_map[3], kNoEdge);
  EXPECT_EQ(cert.weight_scale, 1);
}

TEST(CcToVcc, DiamondShape) {
  const auto [vcc, cert] = cc_to_vcc(diamond_instance({2, 1}));
  EXPECT_EQ(vcc.graph.vertex_count, 6);
  EXPECT_EQ(vcc.source, 4);
  EXPECT_EQ(vcc.target, 5);
  EXPECT_EQ(vcc.alpha, alpha({4, 1}));
  // Line-graph arcs: s->a then a->t, s->b then b->t; two source and two
  // sink arcs.
  EXPECT_EQ(vcc.graph.edges.size(), 6u);
  EXPECT_EQ(vcc.graph.edges[0], (VcEdge{0, 2, 2}));
  EXPECT_EQ(vcc.graph.edges[1], (VcEdge{1, 3, 2}));
  EXPECT_EQ(cert.weight_scale, 2);
}

TEST(CcToVcc, NoColorsGetsOne) {
  const auto g = make_graph(2, 0, {});
  const auto [vcc, cert] = cc_to_vcc({g, 0, 0, alpha({})});
  EXPECT_EQ(vcc.graph.color_count, 1);
  EXPECT_EQ(vcc.alpha, alpha({2}));
  EXPECT_EQ(vcc.graph.edges.size(), 1u);
  EXPECT_TRUE(vcc_sp_decide(vcc).yes);
}

TEST(Reductions, PathsMapBothWaysWithScaledWeights) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = testkit::gen_random_positive_cycle_digraph(6, 2, 0.4, seed, {1, 4});
    const CcSpInstance inst{g, 0, 5, alpha({2, 2})};
    const auto [vcc, cert] = cc_to_vcc(inst);
    for (const Path& p : testkit::enumerate_st_paths(g, 0, 5)) {
      const Path image = push_forward(cert, inst, vcc, p);
      EXPECT_EQ(path_weight(vcc.graph, image), 2 * path_weight(g, p));
      EXPECT_EQ(pull_back(cert, inst, vcc, image), p);
    }
    EXPECT_EQ(cc_sp_decide(inst).yes, vcc_sp_decide(vcc).yes) << seed;
  }
}

TEST(Reductions, VertexColoredAnswerPreserved) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    testkit::Rng rng(seed);
    const auto base = testkit::gen_random_positive_cycle_digraph(6, 1, 0.4, seed, {1, 4});
    VertexColoredDigraph g{6, 2, {}, {}};
    for (int v = 0; v < 6; ++v) g.vertex_color.push_back(rng.uniform(1, 2));
    for (const EdgeRecord& e : base.edges()) g.edges.push_back({e.tail, e.head, e.weight});
    std::vector<std::int64_t> a{rng.uniform(0, 4), rng.uniform(0, 4)};
    const VccSpInstance inst{g, 0, 5, alpha(a)};
    EXPECT_EQ(vcc_sp_decide(inst).yes, testkit::brute_vcc_sp(inst).yes) << seed;
    const auto [cc, cert] = vcc_to_cc(inst);
    for (const Path& p : testkit::enumerate_st_paths(g, 0, 5)) {
      const Path image = push_forward(cert, cc, inst, p);
      EXPECT_EQ(path_weight(cc.graph, image), path_weight(g, p));
      EXPECT_EQ(path_color_counts(cc.graph, image), path_color_counts(g, p));
      EXPECT_EQ(pull_back(cert, cc, inst, image), p);
    }
  }
}

}  // namespace
}  // namespace ccspt
