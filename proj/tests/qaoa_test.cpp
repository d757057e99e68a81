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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qmaxcut/classical.hpp"
#include "qmaxcut/errors.hpp"
#include "qmaxcut/qaoa.hpp"

using namespace qmaxcut;

namespace {

const Graph kEdge(2, {{0, 1}});
Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

QaoaConfig small_config(std::size_t depth, std::size_t budget = 300) {
  QaoaConfig cfg;
  cfg.depth = depth;
  cfg.budget = budget;
  cfg.restarts = 3;
  cfg.seed = 7;
  return cfg;
}

} // namespace

TEST_CASE("evaluate_params examples") {
  CHECK(evaluate_params(triangle(), QaoaParams::zeros(1)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(evaluate_params(kEdge, QaoaParams::zeros(2)) == doctest::Approx(0.5).epsilon(1e-12));

  // Single edge, p = 1: oracle values at two reference points.
  const double at_half_pi = evaluate_params(kEdge, QaoaParams({M_PI / 2}, {M_PI / 8}));
  const double at_quarter_pi = evaluate_params(kEdge, QaoaParams({M_PI / 4}, {M_PI / 8}));
  CHECK(std::abs(at_half_pi - oracle::expectation(kEdge, oracle::qaoa_state(kEdge, {M_PI / 2},
                                                                           {M_PI / 8}))) < 1e-12);
  CHECK(std::abs(at_quarter_pi - oracle::expectation(kEdge, oracle::qaoa_state(
                                                                kEdge, {M_PI / 4}, {M_PI / 8}))) <
        1e-12);
  CHECK(at_half_pi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at_quarter_pi == doctest::Approx(0.5 + 0.5 * std::sin(M_PI / 4)).epsilon(1e-12));
}

TEST_CASE("evaluate_params agrees with the dense oracle on random inputs") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> angle(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = oracle::coin_flip_graph(n, 0.5, rng);
    const std::size_t p = 1 + rng() % 3;
    std::vector<double> gammas(p), betas(p);
    for (std::size_t l = 0; l < p; ++l) {
      gammas[l] = angle(rng);
      betas[l] = angle(rng);
    }
    const double got = evaluate_params(g, QaoaParams(gammas, betas));
    CHECK(std::abs(got - oracle::expectation(g, oracle::qaoa_state(g, gammas, betas))) < 1e-9);
  }
}

TEST_CASE("wrap_to_box") {
  const auto w = wrap_to_box(QaoaParams({-0.5, 7.0}, {3.5, -0.1}));
  CHECK(w.gammas()[0] == doctest::Approx(2 * M_PI - 0.5));
  CHECK(w.gammas()[1] == doctest::Approx(7.0 - 2 * M_PI));
  CHECK(w.betas()[0] == doctest::Approx(3.5 - M_PI));
  CHECK(w.betas()[1] == doctest::Approx(M_PI - 0.1));
  for (double g : w.gammas())
    CHECK((g >= 0.0 && g < 2 * M_PI));
  for (double b : w.betas())
    CHECK((b >= 0.0 && b < M_PI));
}

TEST_CASE("optimize_params reaches the single-edge optimum") {
  const auto r = optimize_params(kEdge, small_config(1, 500));
  CHECK(r.value >= 0.99);
  CHECK(r.n_evaluations <= 500);
  CHECK(std::abs(evaluate_params(kEdge, r.params) - r.value) < 1e-12);
}

TEST_CASE("optimize_params respects the floor, the budget and is deterministic") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto g = oracle::coin_flip_graph(n, 0.5, rng);
    const auto cfg = small_config(1 + trial % 3, 40 + 20 * (trial % 4));
    const auto a = optimize_params(g, cfg);
    CHECK(a.value >= static_cast<double>(g.num_edges()) / 2.0 - 1e-9);
    CHECK(a.n_evaluations <= cfg.budget);
    CHECK(a.value <= static_cast<double>(oracle::exhaustive_maxcut(g)) + 1e-9);
    const auto b = optimize_params(g, cfg);
    CHECK(a.params == b.params);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("warm start is never worse than its seed") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::coin_flip_graph(6, 0.5, rng);
    const auto p1 = optimize_params(g, small_config(1));
    const auto p2 = optimize_params(g, small_config(2), p1.params.padded());
    CHECK(p2.value >= p1.value);
  }
  CHECK_THROWS_AS((void)optimize_params(kEdge, small_config(2), QaoaParams::zeros(1)),
                  std::invalid_argument);
}

TEST_CASE("config validation") {
  QaoaConfig cfg;
  cfg.depth = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.budget = 2;
  cfg.restarts = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_NOTHROW(QaoaConfig{}.validate());
}

TEST_CASE("run_qaoa examples") {
  const auto edge = run_qaoa(kEdge, small_config(1, 500));
  CHECK(edge.best_cut.cut_value() == 1);
  CHECK(edge.best_expectation >= 0.99);

  const auto empty = run_qaoa(Graph(3, {}), small_config(1));
  CHECK(empty.best_cut.cut_value() == 0);
  CHECK(empty.best_expectation == 0.0);

  const auto tri = run_qaoa(triangle(), small_config(2));
  CHECK(tri.best_cut.cut_value() == 2);
  CHECK(tri.per_stage_timings.count("optimize") == 1);
  CHECK(tri.per_stage_timings.count("extract") == 1);
  CHECK(tri.per_stage_timings.count("warm_start") == 1);
  CHECK(tri.warm_start_evaluations > 0);
  CHECK(tri.total_evaluations() == tri.n_evaluations + tri.warm_start_evaluations);

  auto cold = small_config(2);
  cold.warm_start = false;
  CHECK(run_qaoa(triangle(), cold).warm_start_evaluations == 0);

  CHECK_THROWS_AS((void)run_qaoa(Graph(6, {}), [] {
    auto c = small_config(1);
    c.budget = 2;
    return c;
  }()),
                  std::invalid_argument);
}

TEST_CASE("sweep matches standalone runs and is monotone") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = oracle::coin_flip_graph(6, 0.5, rng);
    const std::vector<std::size_t> depths{3, 1, 2, 2};
    const auto sweep = run_qaoa_sweep(g, small_config(1, 150), depths);
    REQUIRE(sweep.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(sweep[i].best_params.depth() == i + 1);
      const auto alone = run_qaoa(g, small_config(i + 1, 150));
      CHECK(alone.best_params == sweep[i].best_params);
      CHECK(alone.best_expectation == sweep[i].best_expectation);
      CHECK(alone.best_cut == sweep[i].best_cut);
      CHECK(alone.n_evaluations == sweep[i].n_evaluations);
      CHECK(alone.warm_start_evaluations == sweep[i].warm_start_evaluations);
      CHECK(sweep[i].n_evaluations <= 150);
    }
    CHECK(sweep[0].best_expectation <= sweep[1].best_expectation);
    CHECK(sweep[1].best_expectation <= sweep[2].best_expectation);
  }
  const std::vector<std::size_t> bad{0, 1};
  CHECK_THROWS_AS((void)run_qaoa_sweep(kEdge, small_config(1), bad), std::invalid_argument);
}

TEST_CASE("extract_cut") {
  // A basis state is extracted exactly in both modes.
  const auto basis = StateVector::basis(3, 0b110);
  CHECK(extract_cut(triangle(), basis, 0, 1).labels() == Labels{1, -1, -1});
  CHECK(extract_cut(triangle(), basis, 10, 1).labels() == Labels{1, -1, -1});

  // Uniform superposition: every state qualifies, ties go to the smallest index.
  const auto u = init_uniform(3);
  CHECK(extract_cut(triangle(), u, 0, 1).labels() == Labels{-1, 1, 1});
  CHECK(extract_cut(triangle(), u, 0, 1).cut_value() == 2);
  CHECK(extract_cut(triangle(), u, 200, 3).cut_value() == 2);
  CHECK(extract_cut(triangle(), u, 200, 3) == extract_cut(triangle(), u, 200, 3));

  // States below the 2^-(n+1) threshold are ignored.
  std::vector<Amplitude> amps(4, 0.0);
  amps[0] = std::sqrt(1.0 - 0.01);
  amps[1] = 0.1;
  CHECK(extract_cut(kEdge, StateVector(2, amps), 0, 1).cut_value() == 0);
}

TEST_CASE("sampled extraction on optimized circuits") {
  auto cfg = small_config(2, 400);
  cfg.shots = 256;
  std::mt19937 rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = oracle::coin_flip_graph(7, 0.5, rng);
    const auto a = run_qaoa(g, cfg);
    const auto b = run_qaoa(g, cfg);
    CHECK(a.best_cut == b.best_cut);
    CHECK(a.best_cut.cut_value() <= brute_force_maxcut(g).assignment.cut_value());
  }
}
