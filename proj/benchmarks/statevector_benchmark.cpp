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

#include "qmaxcut/graph.hpp"
#include "qmaxcut/qaoa.hpp"
#include "qmaxcut/statevector.hpp"

using namespace qmaxcut;

namespace {

Graph bench_graph(std::size_t n) { return generate_random_graph(n, 2 * n, 7); }

} // namespace

static void BM_CostDiagonal(benchmark::State &state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    CostDiagonal cost(g);
    benchmark::DoNotOptimize(cost.values().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CostDiagonal)->DenseRange(10, 20, 2);

static void BM_CostLayer(benchmark::State &state) {
  const auto g = bench_graph(static_cast<std::size_t>(state.range(0)));
  const CostDiagonal cost(g);
  auto psi = init_uniform(g.num_vertices());
  for (auto _ : state) {
    apply_cost_layer(psi, cost, 0.37);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_CostLayer)->DenseRange(10, 20, 2);

static void BM_MixerLayer(benchmark::State &state) {
  auto psi = init_uniform(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    apply_mixer_layer(psi, 0.21);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_MixerLayer)->DenseRange(10, 20, 2);

// One optimizer objective call at depth p on a 16-vertex graph.
static void BM_EvaluateParams(benchmark::State &state) {
  const auto g = generate_random_graph(16, 30, 1);
  const auto p = static_cast<std::size_t>(state.range(0));
  const QaoaParams params(std::vector<double>(p, 0.4), std::vector<double>(p, 0.3));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_params(g, params));
}
BENCHMARK(BM_EvaluateParams)->DenseRange(1, 3);
