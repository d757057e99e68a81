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

#include "qmaxcut/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmaxcut/nelder_mead.hpp"
#include "qmaxcut/random.hpp"

namespace qmaxcut {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

// Seed streams.
constexpr std::uint64_t kStartStream = 0;
constexpr std::uint64_t kSampleStream = 1'000'000;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0)
    r += period;
  // fmod of a tiny negative can round up to exactly `period`.
  return r >= period ? 0.0 : r;
}

QaoaParams params_from_vector(std::span<const double> x) {
  const std::size_t p = x.size() / 2;
  std::vector<double> gammas(p);
  std::vector<double> betas(p);
  for (std::size_t l = 0; l < p; ++l) {
    gammas[l] = wrap(x[l], kTwoPi);
    betas[l] = wrap(x[p + l], kPi);
  }
  return QaoaParams(std::move(gammas), std::move(betas));
}

std::vector<double> vector_from_params(const QaoaParams &params) {
  std::vector<double> x(params.gammas());
  x.insert(x.end(), params.betas().begin(), params.betas().end());
  return x;
}

// Expected cut at given angles, reusing one cost diagonal and one state buffer.
class Evaluator {
public:
  explicit Evaluator(const Graph &g) : cost_(g), state_(init_uniform(cost_.num_qubits())) {}

  double operator()(const QaoaParams &params) {
    apply_qaoa_circuit_into(state_, cost_, params);
    ++count_;
    return expectation_cut(state_, cost_);
  }

  [[nodiscard]] const CostDiagonal &cost() const noexcept { return cost_; }
  [[nodiscard]] std::size_t count() const noexcept { return count_; }

private:
  CostDiagonal cost_;
  StateVector state_;
  std::size_t count_ = 0;
};

OptimizeResult optimize_with(Evaluator &evaluate, const QaoaConfig &cfg,
                             const std::optional<QaoaParams> &warm) {
  cfg.validate();
  const std::size_t p = cfg.depth;
  if (warm && warm->depth() != p)
    throw std::invalid_argument("warm start has depth " + std::to_string(warm->depth()) +
                                ", expected " + std::to_string(p));
  const std::size_t used_before = evaluate.count();
  const auto used = [&] { return evaluate.count() - used_before; };

  std::vector<QaoaParams> starts{QaoaParams::zeros(p)};
  if (warm)
    starts.push_back(wrap_to_box(*warm));
  Rng rng(mix_seed(cfg.seed, kStartStream + p));
  while (starts.size() < cfg.restarts) {
    std::vector<double> gammas(p);
    std::vector<double> betas(p);
    for (auto &g : gammas)
      g = rng.uniform(0.0, kTwoPi);
    for (auto &b : betas)
      b = rng.uniform(0.0, kPi);
    starts.emplace_back(std::move(gammas), std::move(betas));
  }
  if (starts.size() > cfg.budget)
    starts.erase(starts.begin() + static_cast<std::ptrdiff_t>(cfg.budget), starts.end());

  std::vector<double> start_values;
  start_values.reserve(starts.size());
  for (const auto &s : starts)
    start_values.push_back(evaluate(s));

  OptimizeResult best{starts[0], start_values[0], 0};
  for (std::size_t k = 1; k < starts.size(); ++k)
    if (start_values[k] > best.value)
      best = {starts[k], start_values[k], 0};

  std::vector<double> steps(2 * p);
  std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(p), cfg.gamma_step);
  std::fill(steps.begin() + static_cast<std::ptrdiff_t>(p), steps.end(), cfg.beta_step);

  const optim::Objective negated = [&](std::span<const double> x) {
    return -evaluate(params_from_vector(x));
  };

  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::size_t remaining = cfg.budget - used();
    const std::size_t share = remaining / (starts.size() - k);
    if (share == 0)
      continue;
    const auto run = optim::nelder_mead_minimize(negated, vector_from_params(starts[k]),
                                                 -start_values[k], steps, share);
    const double value = -run.value;
    if (value > best.value)
      best = {params_from_vector(run.x), value, 0};
  }
  best.n_evaluations = used();
  return best;
}

CutAssignment extract_from_cost(const Graph &g, const CostDiagonal &cost,
                                const StateVector &state, std::size_t shots, std::uint64_t seed) {
  std::uint64_t best_index = 0;
  std::int64_t best_cut = -1;
  if (shots == 0) {
    const double threshold = std::ldexp(1.0, -static_cast<int>(state.num_qubits()) - 1);
    for (std::uint64_t b = 0; b < state.size(); ++b) {
      if (state.probability(b) >= threshold && static_cast<std::int64_t>(cost[b]) > best_cut) {
        best_cut = cost[b];
        best_index = b;
      }
    }
  } else {
    for (const auto b : sample_bitstrings(state, shots, seed)) {
      const auto c = static_cast<std::int64_t>(cost[b]);
      if (c > best_cut || (c == best_cut && b < best_index)) {
        best_cut = c;
        best_index = b;
      }
    }
  }
  return CutAssignment(g, decode_labels(g.num_vertices(), best_index));
}

} // namespace

void QaoaConfig::validate() const {
  if (depth == 0)
    throw std::invalid_argument("QAOA depth must be >= 1");
  if (restarts == 0)
    throw std::invalid_argument("QAOA restarts must be >= 1");
  if (budget < restarts)
    throw std::invalid_argument("QAOA budget (" + std::to_string(budget) +
                                ") must be >= restarts (" + std::to_string(restarts) + ")");
  if (!(gamma_step > 0.0) || !(beta_step > 0.0))
    throw std::invalid_argument("QAOA simplex steps must be positive");
}

QaoaParams wrap_to_box(const QaoaParams &params) {
  return params_from_vector(vector_from_params(params));
}

double evaluate_params(const Graph &g, const QaoaParams &params) {
  Evaluator evaluate(g);
  return evaluate(params);
}

OptimizeResult optimize_params(const Graph &g, const QaoaConfig &cfg,
                               const std::optional<QaoaParams> &warm) {
  Evaluator evaluate(g);
  return optimize_with(evaluate, cfg, warm);
}

CutAssignment extract_cut(const Graph &g, const StateVector &state, std::size_t shots,
                          std::uint64_t seed) {
  return extract_from_cost(g, CostDiagonal(g, state.num_qubits()), state, shots, seed);
}

QaoaResult run_qaoa(const Graph &g, const QaoaConfig &cfg) {
  const std::size_t depth[] = {cfg.depth};
  return run_qaoa_sweep(g, cfg, depth).front();
}

std::vector<QaoaResult> run_qaoa_sweep(const Graph &g, const QaoaConfig &cfg,
                                       std::span<const std::size_t> depths) {
  std::vector<std::size_t> wanted(depths.begin(), depths.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty() || wanted.front() == 0)
    throw std::invalid_argument("QAOA depths must be >= 1");
  {
    QaoaConfig check = cfg;
    check.depth = wanted.back();
    check.validate();
  }

  Evaluator evaluate(g);
  std::vector<QaoaResult> results;
  results.reserve(wanted.size());

  std::optional<QaoaParams> previous;
  std::size_t ladder_evaluations = 0;
  double ladder_seconds = 0.0;
  const std::size_t first_rung = cfg.warm_start ? 1 : wanted.front();

  for (std::size_t p = first_rung; p <= wanted.back(); ++p) {
    const bool requested = std::binary_search(wanted.begin(), wanted.end(), p);
    if (!cfg.warm_start && !requested)
      continue;

    QaoaConfig rung = cfg;
    rung.depth = p;
    std::optional<QaoaParams> warm;
    if (cfg.warm_start && previous)
      warm = previous->padded();

    const auto t_opt = Clock::now();
    const auto opt = optimize_with(evaluate, rung, warm);
    const double optimize_s = seconds_since(t_opt);

    if (requested) {
      const auto t_extract = Clock::now();
      const auto state = apply_qaoa_circuit(evaluate.cost(), opt.params);
      auto cut = extract_from_cost(g, evaluate.cost(), state, cfg.shots,
                                   mix_seed(cfg.seed, kSampleStream + p));
      const double extract_s = seconds_since(t_extract);

      QaoaResult r;
      r.best_params = opt.params;
      r.best_expectation = opt.value;
      r.best_cut = std::move(cut);
      r.n_evaluations = opt.n_evaluations;
      r.warm_start_evaluations = cfg.warm_start ? ladder_evaluations : 0;
      r.elapsed = optimize_s + extract_s;
      r.per_stage_timings = {{"optimize", optimize_s},
                             {"extract", extract_s},
                             {"warm_start", cfg.warm_start ? ladder_seconds : 0.0}};
      results.push_back(std::move(r));
    }

    previous = opt.params;
    ladder_evaluations += opt.n_evaluations;
    ladder_seconds += optimize_s;
  }
  return results;
}

} // namespace qmaxcut
