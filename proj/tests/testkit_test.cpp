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

#include "ccspt/testkit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ccspt/sssp.hpp"
#include "fixtures.hpp"

namespace ccspt::testkit {
namespace {

using fixtures::alpha;
using fixtures::diamond;
using fixtures::throws_kind;

std::set<EdgeId> original_ids(const ColoredDigraph& g) {
  std::set<EdgeId> ids;
  for (const EdgeRecord& e : g.edges()) ids.insert(e.original_index);
  return ids;
}

TEST(Rng, Deterministic) {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, UniformStaysInRange) {
  Rng r(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = r.uniform(-2, 3);
    EXPECT_GE(x, -2);
    EXPECT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(r.uniform(5, 5), 5);
}

TEST(Rng, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(1, i));
  EXPECT_EQ(seeds.size(), 1000u);
}

TEST(Enumeration, DiamondHasTwoTrees) {
  const auto all = enumerate_spg_arborescences(spg_from_dag(diamond(), 0));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NE(all[0].parent_edge, all[1].parent_edge);
}

TEST(Enumeration, InDegreeProduct) {
  // In-degrees 1, 2, 3 give six trees.
  const auto g = make_graph(4, 1, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 1, 0},
                                   {0, 3, 1, 0}, {1, 3, 1, 0}, {2, 3, 1, 0}});
  EXPECT_EQ(enumerate_spg_arborescences(spg_from_dag(g, 0)).size(), 6u);
  EXPECT_TRUE(throws_kind([&] { enumerate_spg_arborescences(spg_from_dag(g, 0), 5); },
                          ErrorKind::kTooManyArborescences));
}

TEST(Enumeration, OrphanMakesStreamEmpty) {
  const auto g = make_graph(3, 1, {{0, 1, 1, 0}});
  EXPECT_TRUE(enumerate_spg_arborescences(spg_from_dag(g, 0)).empty());
}

TEST(BruteGeneral, AgreesWithDagEnumeration) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto g = gen_random_dag(7, 2, 0.4, {1, 1}, seed);
    const auto a = gen_alpha(2, rng.uniform(4, 8), rng);
    const auto spg = spg_from_dag(g, 0);
    EXPECT_EQ(brute_cc_arb_general(g, 0, a).has_value(),
              brute_cc_arb_spg(spg, a).has_value())
        << seed;
  }
}

TEST(BruteGeneral, HandlesCycles) {
  // 0 -> 2 red, 1 -> 2 blue, 2 -> 1 blue: 1 must hang below 2.
  const auto g = make_graph(3, 2, {{0, 2, 1, 0}, {1, 2, 2, 0}, {2, 1, 2, 0}});
  const auto t = brute_cc_arb_general(g, 0, alpha({1, 1}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->parent_edge, (std::vector<EdgeId>{kNoEdge, 2, 0}));
  EXPECT_FALSE(brute_cc_arb_general(g, 0, alpha({2, 0})).has_value());
}

TEST(BruteGeneral, SizeLimit) {
  EXPECT_TRUE(throws_kind(
      [] { brute_cc_arb_general(make_graph(11, 1, {}), 0, alpha({10})); },
      ErrorKind::kInstanceTooLarge));
}

TEST(NaiveSpg, MatchesPipelineSpg) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_random_positive_cycle_digraph(9, 3, 0.35, seed, {1, 3});
    const auto fast = build_spg(g, 0, sssp(g, 0));
    EXPECT_EQ(original_ids(naive_spg(g, 0).base), original_ids(fast.base)) << seed;
  }
}

TEST(Paths, DiamondHasTwo) {
  EXPECT_EQ(enumerate_st_paths(diamond(), 0, 3).size(), 2u);
  const auto same = enumerate_st_paths(diamond(), 1, 1);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_TRUE(same[0].edges.empty());
}

TEST(Gadget, SingleVertexHasPath) {
  const SimpleDigraph d{1, {}};
  EXPECT_TRUE(has_hamiltonian_path_from(d, 0));
  const auto gi = gen_hamiltonian_gadget(d, 0);
  EXPECT_EQ(gi.graph.vertex_count(), 2);
  EXPECT_TRUE(brute_cc_arb_general(gi.graph, gi.source, gi.alpha).has_value());
}

TEST(Gadget, DirectedTriangle) {
  const SimpleDigraph d{3, {{0, 1}, {1, 2}, {2, 0}}};
  EXPECT_TRUE(has_hamiltonian_path_from(d, 0));
  const auto gi = gen_hamiltonian_gadget(d, 0);
  EXPECT_EQ(gi.graph.color_count(), 3);
  EXPECT_EQ(gi.alpha, alpha({1, 1, 1}));
  EXPECT_TRUE(brute_cc_arb_general(gi.graph, gi.source, gi.alpha).has_value());
}

TEST(Gadget, TwoIsolatedVertices) {
  const SimpleDigraph d{2, {}};
  EXPECT_FALSE(has_hamiltonian_path_from(d, 0));
  const auto gi = gen_hamiltonian_gadget(d, 0);
  EXPECT_FALSE(brute_cc_arb_general(gi.graph, gi.source, gi.alpha).has_value());
}

TEST(Gadget, OutStarHasNoPath) {
  const SimpleDigraph d{3, {{0, 1}, {0, 2}}};
  EXPECT_FALSE(has_hamiltonian_path_from(d, 0));
  const auto gi = gen_hamiltonian_gadget(d, 0);
  EXPECT_FALSE(brute_cc_arb_general(gi.graph, gi.source, gi.alpha).has_value());
}

TEST(Generators, CompleteDag) {
  const auto g = gen_random_dag(4, 2, 1.0, {1, 1}, 0);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(is_acyclic(g).acyclic);
}

TEST(Generators, EmptyDensityStillRooted) {
  const auto g = gen_random_dag(6, 2, 0.0, {1, 1}, 0);
  EXPECT_EQ(reachable_from(g, 0).size(), 6u);
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_random_dag(8, 3, 0.5, {-5, 20}, 11),
            gen_random_dag(8, 3, 0.5, {-5, 20}, 11));
  EXPECT_EQ(gen_random_positive_cycle_digraph(8, 3, 0.5, 11),
            gen_random_positive_cycle_digraph(8, 3, 0.5, 11));
}

TEST(Generators, PositiveCycleGraphIsReachableAndPositive) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = gen_random_positive_cycle_digraph(10, 2, 0.1, seed, {2, 5});
    EXPECT_EQ(reachable_from(g, 0).size(), 10u);
    for (const EdgeRecord& e : g.edges()) {
      EXPECT_GE(e.weight, 2);
      EXPECT_LE(e.weight, 5);
    }
  }
  EXPECT_TRUE(throws_kind(
      [] { gen_random_positive_cycle_digraph(4, 1, 0.5, 0, {0, 3}); },
      ErrorKind::kPrecondition));
}

TEST(Generators, LayeredDagSize) {
  const auto g = gen_layered_dag(1000, 5000, 4, 50, {1, 3}, 2);
  EXPECT_EQ(g.edge_count(), 5000u);
  EXPECT_TRUE(is_acyclic(g).acyclic);
  EXPECT_EQ(reachable_from(g, 0).size(), 1000u);
}

TEST(Generators, AlphaSums) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen_alpha(4, i, rng);
    EXPECT_EQ(a.size(), 4u);
    EXPECT_EQ(a.sum(), i);
  }
}

TEST(Corpus, ParallelGenerationMatchesSerial) {
  CorpusParams p;
  p.count = 200;
  const Corpus c = gen_corpus(77, p);
  ASSERT_EQ(c.instances.size(), 200u);
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const auto one = gen_corpus_instance(derive_seed(77, i), p);
    EXPECT_EQ(one.graph, c.instances[i].graph);
    EXPECT_EQ(one.alpha, c.instances[i].alpha);
  }
}

TEST(Corpus, RespectsBounds) {
  CorpusParams p;
  p.count = 300;
  for (const auto& ci : gen_corpus(5, p).instances) {
    const int n = ci.graph.vertex_count();
    EXPECT_GE(n, p.min_n);
    EXPECT_LE(n, p.max_n);
    EXPECT_GE(ci.graph.color_count(), p.min_q);
    EXPECT_LE(ci.graph.color_count(), p.max_q);
    EXPECT_GE(ci.alpha.sum(), std::max(0, n - 2));
    EXPECT_LE(ci.alpha.sum(), 2 * n);
  }
}

}  // namespace
}  // namespace ccspt::testkit
