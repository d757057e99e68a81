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

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qmaxcut::optim {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Converged once the simplex spread in f is <= f_tol AND every vertex is
  /// within x_tol (max-norm) of the best one. Requiring both keeps a simplex
  /// sitting on a flat plateau moving.
  double f_tol = 1e-10;
  double x_tol = 1e-7;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0; ///< calls to f made by this run
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f starting from the axis-aligned simplex {x0, x0 + steps[i] e_i}.
/// `f0`, when given, is f(x0) and is not re-evaluated. Never calls f more than
/// `max_evals` times; when the budget runs out the best vertex so far is
/// returned. Deterministic: ties in f are ordered by vertex index.
[[nodiscard]] NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0,
                                                    std::optional<double> f0,
                                                    std::span<const double> steps,
                                                    std::size_t max_evals,
                                                    const NelderMeadOptions &options = {});

} // namespace qmaxcut::optim
