// Copyright 2026 The qmaxcut Authors
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

#include <benchmark/benchmark.h>

#include "qmaxcut/bench.hpp"
#include "qmaxcut/classical.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/qaoa.hpp"

using namespace qmaxcut;

namespace {

// Default schedule cell by index.
Graph schedule_graph(std::int64_t i) {
  const auto size = default_schedule().at(static_cast<std::size_t>(i));
  return generate_random_graph(size.n, size.m, 1);
}

} // namespace

static void BM_BruteForce(benchmark::State &state) {
  const auto g = schedule_graph(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_maxcut(g).assignment.cut_value());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_BruteForce)->DenseRange(0, 6);

static void BM_Greedy(benchmark::State &state) {
  const auto g = schedule_graph(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(greedy_maxcut(g).assignment.cut_value());
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_Greedy)->DenseRange(0, 6);

static void BM_GenerateGraph(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_random_graph(n, 4 * n, seed++).num_edges());
}
BENCHMARK(BM_GenerateGraph)->RangeMultiplier(4)->Range(16, 4096);

static void BM_RunQaoaDepth2(benchmark::State &state) {
  const auto g = schedule_graph(state.range(0));
  QaoaConfig cfg;
  cfg.depth = 2;
  cfg.budget = 200;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_qaoa(g, cfg).best_expectation);
  state.counters["n"] = static_cast<double>(g.num_vertices());
}
BENCHMARK(BM_RunQaoaDepth2)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
