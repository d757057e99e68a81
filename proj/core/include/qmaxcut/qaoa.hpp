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

/**
 * @file
 * Variational QAOA loop: angle optimization against the exact expectation,
 * depth ladders with warm starts, and cut extraction.
 *
 * The objective is MAXIMIZED: it is the expected cut value, sum_b p_b cut(b).
 *
 * Optimizer: multi-start Nelder-Mead over x = (gamma_1..gamma_p,
 * beta_1..beta_p). Every vertex is evaluated at its image in the box
 * gamma in [0, 2pi), beta in [0, pi); the cut spectrum is integral, so gamma
 * has period 2pi, and beta -> beta + pi only changes the global phase.
 *
 * Start points, in order: the all-zero point, the warm start (when one is
 * supplied), then seeded uniform draws from the box until `restarts` starts
 * exist. All start points are evaluated first; the remaining budget is then
 * shared out across Nelder-Mead runs from each start in order, unused
 * evaluations rolling over to later starts. The best value wins, ties going to
 * the earliest start.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmaxcut/graph.hpp"
#include "qmaxcut/statevector.hpp"

namespace qmaxcut {

struct QaoaConfig {
  std::size_t depth = 1;
  /// Objective evaluations allowed per depth (see QaoaResult).
  std::size_t budget = 1000;
  std::size_t restarts = 5;
  /// 0: exact extraction over the whole distribution; otherwise sample.
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  /// Seed depth p with the padded depth-(p-1) optimum.
  bool warm_start = true;
  /// Initial Nelder-Mead simplex edge along gamma and beta axes.
  double gamma_step = 0.25;
  double beta_step = 0.2;

  /// Throws std::invalid_argument on depth == 0, restarts == 0 or
  /// budget < restarts.
  void validate() const;
};

struct OptimizeResult {
  QaoaParams params = QaoaParams::zeros(1);
  double value = 0.0;
  std::size_t n_evaluations = 0;
};

struct QaoaResult {
  QaoaParams best_params = QaoaParams::zeros(1);
  double best_expectation = 0.0;
  CutAssignment best_cut;
  /// Evaluations spent optimizing at this depth; <= QaoaConfig::budget.
  std::size_t n_evaluations = 0;
  /// Evaluations spent on shallower warm-start rungs (0 without warm start).
  std::size_t warm_start_evaluations = 0;
  /// Optimization at this depth plus cut extraction, in seconds.
  double elapsed = 0.0;
  /// "optimize", "extract" and "warm_start" (time spent on shallower rungs).
  std::map<std::string, double> per_stage_timings;

  [[nodiscard]] std::size_t total_evaluations() const noexcept {
    return n_evaluations + warm_start_evaluations;
  }
};

/// Maps angles into gamma in [0, 2pi), beta in [0, pi).
[[nodiscard]] QaoaParams wrap_to_box(const QaoaParams &params);

/// Expected cut value of the depth-p QAOA state.
[[nodiscard]] double evaluate_params(const Graph &g, const QaoaParams &params);

/// Multi-start Nelder-Mead maximization of evaluate_params at depth
/// cfg.depth. `warm`, if given, must have depth cfg.depth and is added as a
/// start point.
[[nodiscard]] OptimizeResult optimize_params(const Graph &g, const QaoaConfig &cfg,
                                             const std::optional<QaoaParams> &warm = std::nullopt);

/// Best cut the state supports: with shots == 0 the maximum cut over basis
/// states of probability >= 2^-(n+1); otherwise the maximum cut among `shots`
/// samples drawn with `seed`. Ties go to the smallest basis index.
[[nodiscard]] CutAssignment extract_cut(const Graph &g, const StateVector &state,
                                        std::size_t shots, std::uint64_t seed);

/// Optimize at cfg.depth, prepare the final state and extract a cut. With
/// warm_start and depth > 1 the shallower depths 1..p-1 are optimized first,
/// each seeding the next.
[[nodiscard]] QaoaResult run_qaoa(const Graph &g, const QaoaConfig &cfg);

/// run_qaoa at each depth in `depths` (cfg.depth is ignored), sharing one
/// warm-start ladder. Results come back in ascending depth order, duplicates
/// removed. Each result's angles, expectation, cut and evaluation counts equal
/// those of run_qaoa with cfg.depth set to that depth.
[[nodiscard]] std::vector<QaoaResult> run_qaoa_sweep(const Graph &g, const QaoaConfig &cfg,
                                                     std::span<const std::size_t> depths);

} // namespace qmaxcut
