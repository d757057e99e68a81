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

#include "qmaxcut/statevector.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qmaxcut/errors.hpp"
#include "qmaxcut/random.hpp"

namespace qmaxcut {

namespace {

// Hard ceiling regardless of QMAXCUT_QUBIT_CAP: basis indices and neighbor
// masks are 64-bit, and 2^40 amplitudes is already 16 TiB.
constexpr std::size_t kAbsoluteQubitLimit = 40;

void check_qubits(std::size_t n, std::size_t cap) {
  if (n == 0)
    throw std::invalid_argument("state needs at least one qubit");
  const auto limit = std::min(cap, kAbsoluteQubitLimit);
  if (n > limit)
    throw ResourceLimitError("statevector with " + std::to_string(n) + " qubits", limit);
}

} // namespace

std::size_t qubit_cap() {
  const char *env = std::getenv("QMAXCUT_QUBIT_CAP");
  if (env == nullptr || *env == '\0')
    return kDefaultQubitCap;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw std::invalid_argument("QMAXCUT_QUBIT_CAP must be a positive integer, got \"" +
                                std::string(text) + "\"");
  return value;
}

// StateVector ---------------------------------------------------------------

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ == 0 || n_qubits_ >= 64 || amps_.size() != (std::uint64_t{1} << n_qubits_))
    throw std::invalid_argument("statevector needs exactly 2^n amplitudes");
  if (std::abs(norm_squared() - 1.0) > 1e-10)
    throw std::invalid_argument("statevector is not normalized");
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  if (n_qubits == 0 || n_qubits >= 64 || index >= (std::uint64_t{1} << n_qubits))
    throw std::invalid_argument("basis index out of range");
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> probs(amps_.size());
  std::transform(amps_.begin(), amps_.end(), probs.begin(),
                 [](const Amplitude &a) { return std::norm(a); });
  return probs;
}

double StateVector::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto &a : amps_)
    total += std::norm(a);
  return total;
}

// CostDiagonal ----------------------------------------------------------------

CostDiagonal::CostDiagonal(const Graph &g, std::size_t cap)
    : n_(g.num_vertices()), m_(g.num_edges()) {
  check_qubits(n_, cap);

  std::vector<std::uint64_t> neighbors(n_, 0);
  for (const auto &e : g.edges()) {
    neighbors[e.u] |= std::uint64_t{1} << e.v;
    neighbors[e.v] |= std::uint64_t{1} << e.u;
  }

  // cut(b) from cut(b without its lowest set bit v): moving v to the -1 side
  // cuts its neighbors still at bit 0 and uncuts those already at bit 1.
  const std::uint64_t dim = std::uint64_t{1} << n_;
  cuts_.assign(dim, 0);
  for (std::uint64_t b = 1; b < dim; ++b) {
    const std::uint64_t rest = b & (b - 1);
    const auto v = static_cast<std::size_t>(std::countr_zero(b));
    const int degree = std::popcount(neighbors[v]);
    const int already = std::popcount(neighbors[v] & rest);
    cuts_[b] = static_cast<std::uint32_t>(static_cast<int>(cuts_[rest]) + degree - 2 * already);
  }
}

// QaoaParams ------------------------------------------------------------------

QaoaParams::QaoaParams(std::vector<double> gammas, std::vector<double> betas)
    : gammas_(std::move(gammas)), betas_(std::move(betas)) {
  if (gammas_.empty() || gammas_.size() != betas_.size())
    throw std::invalid_argument("QAOA parameters need p >= 1 gammas and p betas");
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(gammas_.begin(), gammas_.end(), finite) ||
      !std::all_of(betas_.begin(), betas_.end(), finite))
    throw std::invalid_argument("QAOA angles must be finite");
}

QaoaParams QaoaParams::zeros(std::size_t p) {
  return QaoaParams(std::vector<double>(p, 0.0), std::vector<double>(p, 0.0));
}

QaoaParams QaoaParams::padded() const {
  auto gammas = gammas_;
  auto betas = betas_;
  gammas.push_back(0.0);
  betas.push_back(0.0);
  return QaoaParams(std::move(gammas), std::move(betas));
}

// Layers ----------------------------------------------------------------------

StateVector init_uniform(std::size_t n, std::size_t cap) {
  check_qubits(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  return StateVector(n, std::vector<Amplitude>(dim, Amplitude(amp, 0.0)));
}

void apply_cost_layer(StateVector &state, const CostDiagonal &cost, double gamma) {
  if (state.num_qubits() != cost.num_qubits())
    throw std::invalid_argument("cost layer: state has " + std::to_string(state.num_qubits()) +
                                " qubits, graph has " + std::to_string(cost.num_qubits()) +
                                " vertices");
  // Cut values are integers in [0, m]; one phase per distinct value.
  std::vector<double> re(cost.num_edges() + 1);
  std::vector<double> im(cost.num_edges() + 1);
  for (std::size_t k = 0; k < re.size(); ++k) {
    const double angle = gamma * static_cast<double>(k);
    re[k] = std::cos(angle);
    im[k] = -std::sin(angle);
  }

  auto amps = state.amplitudes();
  const auto cuts = cost.values();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const auto c = cuts[b];
    const double ar = amps[b].real();
    const double ai = amps[b].imag();
    amps[b] = Amplitude(ar * re[c] - ai * im[c], ar * im[c] + ai * re[c]);
  }
}

void apply_cost_layer(StateVector &state, const Graph &g, double gamma) {
  if (state.num_qubits() != g.num_vertices())
    throw std::invalid_argument("cost layer: state has " + std::to_string(state.num_qubits()) +
                                " qubits, graph has " + std::to_string(g.num_vertices()) +
                                " vertices");
  apply_cost_layer(state, CostDiagonal(g, state.num_qubits()), gamma);
}

void apply_mixer_layer(StateVector &state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  // Per qubit: [a, b] -> [c a - i s b, -i s a + c b].
  for (std::size_t q = 0; q < state.num_qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
      for (std::size_t i = block; i < block + stride; ++i) {
        const double ar = amps[i].real();
        const double ai = amps[i].imag();
        const double br = amps[i + stride].real();
        const double bi = amps[i + stride].imag();
        amps[i] = Amplitude(c * ar + s * bi, c * ai - s * br);
        amps[i + stride] = Amplitude(c * br + s * ai, c * bi - s * ar);
      }
    }
  }
}

void apply_qaoa_circuit_into(StateVector &state, const CostDiagonal &cost,
                             const QaoaParams &params) {
  if (state.num_qubits() != cost.num_qubits())
    throw std::invalid_argument("circuit: state and cost diagonal sizes differ");
  auto amps = state.amplitudes();
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(cost.num_qubits()));
  std::fill(amps.begin(), amps.end(), Amplitude(amp, 0.0));
  for (std::size_t l = 0; l < params.depth(); ++l) {
    apply_cost_layer(state, cost, params.gammas()[l]);
    apply_mixer_layer(state, params.betas()[l]);
  }
}

StateVector apply_qaoa_circuit(const CostDiagonal &cost, const QaoaParams &params) {
  auto state = init_uniform(cost.num_qubits(), cost.num_qubits());
  apply_qaoa_circuit_into(state, cost, params);
  return state;
}

StateVector apply_qaoa_circuit(const Graph &g, const QaoaParams &params) {
  return apply_qaoa_circuit(CostDiagonal(g), params);
}

double expectation_cut(const StateVector &state, const CostDiagonal &cost) {
  if (state.num_qubits() != cost.num_qubits())
    throw std::invalid_argument("expectation: state has " + std::to_string(state.num_qubits()) +
                                " qubits, graph has " + std::to_string(cost.num_qubits()) +
                                " vertices");
  const auto amps = state.amplitudes();
  const auto cuts = cost.values();
  double total = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b)
    total += std::norm(amps[b]) * static_cast<double>(cuts[b]);
  return total;
}

double expectation_cut(const StateVector &state, const Graph &g) {
  if (state.num_qubits() != g.num_vertices())
    throw std::invalid_argument("expectation: state has " + std::to_string(state.num_qubits()) +
                                " qubits, graph has " + std::to_string(g.num_vertices()) +
                                " vertices");
  return expectation_cut(state, CostDiagonal(g, state.num_qubits()));
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector &state, std::size_t shots,
                                             std::uint64_t seed) {
  if (shots == 0)
    throw std::invalid_argument("sample_bitstrings: shots must be >= 1");

  std::vector<double> cdf(state.size());
  double running = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t b = 0; b < cdf.size(); ++b) {
    const double p = state.probability(b);
    running += p;
    cdf[b] = running;
    if (p > 0.0)
      last_nonzero = b;
  }

  Rng rng(seed);
  std::vector<std::uint64_t> samples(shots);
  for (auto &s : samples) {
    const double u = rng.uniform01() * running;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    s = std::min(idx, last_nonzero);
  }
  return samples;
}

} // namespace qmaxcut
