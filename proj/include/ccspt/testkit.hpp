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

// Brute-force oracles and seeded instance generators.
//
// The oracles only use the graph types; they share no algorithmic code with
// the solvers they check. Every enumeration has a cap and throws when the
// cap is hit instead of returning a partial answer.

#ifndef CCSPT_TESTKIT_HPP_
#define CCSPT_TESTKIT_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ccspt/arborescence.hpp"
#include "ccspt/cc_sp.hpp"
#include "ccspt/graph.hpp"
#include "ccspt/sssp.hpp"

namespace ccspt::testkit {

inline constexpr std::int64_t kArborescenceCap = 1'000'000;
inline constexpr int kBruteMaxVertices = 10;

// Deterministic across platforms: mt19937_64 with our own bounded draws
// (the std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // True with probability p.
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

// Seed of item `index` in a stream seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// ---- arborescence oracles -------------------------------------------------

// Calls f once per arborescence of the rooted DAG: one in-edge per non-root
// vertex, every combination. Vertices with no in-edge make the stream empty.
// Throws kTooManyArborescences when the in-degree product exceeds cap.
void for_each_spg_arborescence(const SpgGraph& spg,
                               const std::function<void(const Arborescence&)>& f,
                               std::int64_t cap = kArborescenceCap);
std::vector<Arborescence> enumerate_spg_arborescences(
    const SpgGraph& spg, std::int64_t cap = kArborescenceCap);

bool within_budget(const std::vector<std::int64_t>& counts,
                   const ColorConstraint& alpha);

// Some alpha-colored arborescence, the first in enumeration order.
std::optional<Arborescence> brute_cc_arb_spg(const SpgGraph& spg,
                                             const ColorConstraint& alpha);
std::optional<Weight> brute_min_cc_arb(const SpgGraph& spg,
                                       const ColorConstraint& alpha);
// An arborescence with at least lower_i edges of color i.
std::optional<Arborescence> brute_at_least(const SpgGraph& spg,
                                           const ColorConstraint& lower);

// Any digraph (cycles allowed), n <= max_n else kInstanceTooLarge. Returns
// the lexicographically least feasible parent-edge vector, comparing
// original_index per vertex in vertex order.
std::optional<Arborescence> brute_cc_arb_general(
    const ColoredDigraph& g, VertexId s, const ColorConstraint& alpha,
    int max_n = kBruteMaxVertices);

// Tight-edge subgraph from a plain n-round Bellman-Ford. Unreachable
// vertices keep no in-edges. For inputs without non-positive cycles.
SpgGraph naive_spg(const ColoredDigraph& g, VertexId s);

// ---- path oracles ---------------------------------------------------------

// All simple s-t paths by DFS; s == t gives the single empty path.
std::vector<Path> enumerate_st_paths(const ColoredDigraph& g, VertexId s,
                                     VertexId t,
                                     int max_n = kBruteMaxVertices);
std::vector<Path> enumerate_st_paths(const VertexColoredDigraph& g,
                                     VertexId s, VertexId t,
                                     int max_n = kBruteMaxVertices);

struct BrutePathAnswer {
  bool yes = false;
  std::optional<Weight> shortest;  // nullopt: t unreachable
};

// Inputs must have no negative cycle; then the lightest simple path is a
// shortest path.
BrutePathAnswer brute_cc_sp(const CcSpInstance& inst,
                            int max_n = kBruteMaxVertices);
BrutePathAnswer brute_vcc_sp(const VccSpInstance& inst,
                             int max_n = kBruteMaxVertices);

// ---- hardness gadget ------------------------------------------------------

struct SimpleDigraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> arcs;
};

bool has_hamiltonian_path_from(const SimpleDigraph& d, VertexId s);

struct GadgetInstance {
  ColoredDigraph graph;
  VertexId source = 0;
  ColorConstraint alpha;
};

// Ranks s first and the other vertices by id; every arc leaving the vertex
// of rank i gets color i. Adds t = n with an arc from every vertex, q = n,
// alpha = (1, ..., 1).
GadgetInstance gen_hamiltonian_gadget(const SimpleDigraph& d, VertexId s);

SimpleDigraph gen_random_simple_digraph(int n, double density,
                                        std::uint64_t seed);

// ---- generators -----------------------------------------------------------

struct WeightRange {
  Weight lo = 1;
  Weight hi = 1;
};

// Edges i -> j for i < j with probability `density`; any vertex left without
// an in-edge gets one from vertex 0.
ColoredDigraph gen_random_dag(int n, int q, double density, WeightRange w,
                              std::uint64_t seed);

// Arbitrary digraph with weights in [w.lo, w.hi], w.lo >= 1. Vertices not
// reachable from 0 get an in-edge from a reachable vertex.
ColoredDigraph gen_random_positive_cycle_digraph(int n, int q, double density,
                                                 std::uint64_t seed,
                                                 WeightRange w = {1, 3});

// Layered DAG rooted at 0 with exactly m edges, each non-root vertex fed
// from the previous layer. For scaling runs.
ColoredDigraph gen_layered_dag(int n, std::int64_t m, int q, int layer_width,
                               WeightRange w, std::uint64_t seed);

// Random budgets of length q summing to `total`.
ColorConstraint gen_alpha(int q, std::int64_t total, Rng& rng);

struct CorpusInstance {
  ColoredDigraph graph;
  VertexId source = 0;
  ColorConstraint alpha;
  std::uint64_t seed = 0;
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<CorpusInstance> instances;
};

enum class CorpusKind { kDag, kPositiveCycle };

struct CorpusParams {
  CorpusKind kind = CorpusKind::kDag;
  int count = 100;
  int min_n = 2;
  int max_n = 8;
  int min_q = 1;
  int max_q = 4;
  WeightRange weights{1, 1};
  // Sum of alpha drawn uniformly from [n - 2, 2n].
};

// Instance i depends only on derive_seed(seed, i); generated in parallel.
Corpus gen_corpus(std::uint64_t seed, const CorpusParams& params);
CorpusInstance gen_corpus_instance(std::uint64_t instance_seed,
                                   const CorpusParams& params);

}  // namespace ccspt::testkit

#endif  // CCSPT_TESTKIT_HPP_
