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

#include "qmaxcut/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmaxcut::optim {

namespace {

using Point = std::vector<double>;

// a + t (b - a)
Point lerp(const Point &a, const Point &b, double t) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

class BudgetedObjective {
public:
  BudgetedObjective(const Objective &f, std::size_t max_evals) : f_(f), max_(max_evals) {}

  std::optional<double> operator()(const Point &x) {
    if (used_ >= max_)
      return std::nullopt;
    ++used_;
    return f_(x);
  }

  [[nodiscard]] std::size_t used() const noexcept { return used_; }

private:
  const Objective &f_;
  std::size_t max_;
  std::size_t used_ = 0;
};

} // namespace

NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0,
                                      std::optional<double> f0, std::span<const double> steps,
                                      std::size_t max_evals, const NelderMeadOptions &options) {
  const std::size_t dim = x0.size();
  if (dim == 0 || steps.size() != dim)
    throw std::invalid_argument("nelder_mead: need one step per coordinate");

  BudgetedObjective eval(f, max_evals);
  std::vector<Point> simplex;
  std::vector<double> values;
  simplex.reserve(dim + 1);
  values.reserve(dim + 1);

  auto finish = [&](bool converged) {
    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    return NelderMeadResult{simplex[best], values[best], eval.used(), converged};
  };

  if (!f0) {
    f0 = eval(x0);
    if (!f0)
      throw std::invalid_argument("nelder_mead: no budget to evaluate the start point");
  }
  simplex.push_back(x0);
  values.push_back(*f0);
  for (std::size_t i = 0; i < dim; ++i) {
    Point x = x0;
    x[i] += steps[i];
    const auto fx = eval(x);
    if (!fx)
      return finish(false);
    simplex.push_back(std::move(x));
    values.push_back(*fx);
  }

  std::vector<std::size_t> order(dim + 1);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> s2;
      std::vector<double> v2;
      s2.reserve(dim + 1);
      v2.reserve(dim + 1);
      for (const auto k : order) {
        s2.push_back(std::move(simplex[k]));
        v2.push_back(values[k]);
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }

    double spread_x = 0.0;
    for (std::size_t k = 1; k <= dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        spread_x = std::max(spread_x, std::abs(simplex[k][i] - simplex[0][i]));
    if (values[dim] - values[0] <= options.f_tol && spread_x <= options.x_tol)
      return finish(true);

    Point centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        centroid[i] += simplex[k][i];
    for (auto &c : centroid)
      c /= static_cast<double>(dim);

    const Point &worst = simplex[dim];
    Point reflected = lerp(centroid, worst, -options.reflection);
    const auto fr = eval(reflected);
    if (!fr)
      return finish(false);

    if (*fr < values[0]) {
      Point expanded = lerp(centroid, worst, -options.reflection * options.expansion);
      const auto fe = eval(expanded);
      if (!fe) {
        simplex[dim] = std::move(reflected);
        values[dim] = *fr;
        return finish(false);
      }
      if (*fe < *fr) {
        simplex[dim] = std::move(expanded);
        values[dim] = *fe;
      } else {
        simplex[dim] = std::move(reflected);
        values[dim] = *fr;
      }
      continue;
    }
    if (*fr < values[dim - 1]) {
      simplex[dim] = std::move(reflected);
      values[dim] = *fr;
      continue;
    }

    const bool outside = *fr < values[dim];
    Point contracted = outside ? lerp(centroid, reflected, options.contraction)
                               : lerp(centroid, worst, options.contraction);
    const auto fc = eval(contracted);
    if (!fc) {
      if (outside) {
        simplex[dim] = std::move(reflected);
        values[dim] = *fr;
      }
      return finish(false);
    }
    if (outside ? *fc <= *fr : *fc < values[dim]) {
      simplex[dim] = std::move(contracted);
      values[dim] = *fc;
      continue;
    }

    for (std::size_t k = 1; k <= dim; ++k) {
      simplex[k] = lerp(simplex[0], simplex[k], options.shrink);
      const auto fk = eval(simplex[k]);
      if (!fk) {
        // Keep the simplex consistent: drop the unevaluated vertices.
        simplex.resize(k);
        values.resize(k);
        return finish(false);
      }
      values[k] = *fk;
    }
  }
}

} // namespace qmaxcut::optim
