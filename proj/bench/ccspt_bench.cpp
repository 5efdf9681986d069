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

// Serial reference kernels against their OpenMP counterparts, plus the
// solver stages on layered DAGs. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "ccspt/arborescence.hpp"
#include "ccspt/flow.hpp"
#include "ccspt/graph.hpp"
#include "ccspt/sssp.hpp"
#include "ccspt/testkit.hpp"

namespace ccspt {
namespace {

ColoredDigraph layered(std::int64_t n, int q) {
  return testkit::gen_layered_dag(static_cast<int>(n), 3 * n, q, 1000, {1, 4}, 1);
}

void BM_InDegreeSerial(benchmark::State& state) {
  const auto g = layered(state.range(0), 8);
  for (auto _ : state) benchmark::DoNotOptimize(in_degree_by_color_serial(g));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}

void BM_InDegreeParallel(benchmark::State& state) {
  const auto g = layered(state.range(0), 8);
  for (auto _ : state) benchmark::DoNotOptimize(in_degree_by_color(g));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}

void BM_TightMaskSerial(benchmark::State& state) {
  const auto g = layered(state.range(0), 4);
  const auto d = sssp(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(tight_edge_mask_serial(g, d));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}

void BM_TightMaskParallel(benchmark::State& state) {
  const auto g = layered(state.range(0), 4);
  const auto d = sssp(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(tight_edge_mask(g, d));
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}

void BM_CorpusGeneration(benchmark::State& state) {
  testkit::CorpusParams p;
  p.count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(testkit::gen_corpus(7, p));
}

void BM_DinitzFlowStage(benchmark::State& state) {
  const auto n = state.range(0);
  const auto g = layered(n, 8);
  const SpgGraph spg = spg_from_dag(g, 0);
  testkit::Rng rng(3);
  const ColorConstraint alpha = testkit::gen_alpha(8, n - 1, rng);
  const InDegreeByColor pi = in_degree_by_color(spg.base);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dinitz_max_flow(build_arb_network(spg, alpha, pi)));
  }
  state.SetComplexityN(n);
}

void BM_RedBlue(benchmark::State& state) {
  const auto n = state.range(0);
  const SpgGraph spg = spg_from_dag(layered(n, 2), 0);
  const ColorConstraint alpha({n * 6 / 10, n * 6 / 10});
  for (auto _ : state) benchmark::DoNotOptimize(cc_rb_arb(spg, alpha));
  state.SetComplexityN(n);
}

BENCHMARK(BM_InDegreeSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_InDegreeParallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_TightMaskSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_TightMaskParallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_CorpusGeneration)->Arg(1000);
BENCHMARK(BM_DinitzFlowStage)->RangeMultiplier(4)->Range(10000, 160000)->Complexity();
BENCHMARK(BM_RedBlue)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Complexity(benchmark::oN);

}  // namespace
}  // namespace ccspt

BENCHMARK_MAIN();
