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
 * Dense statevector simulation of the QAOA Max-Cut ansatz.
 *
 * Basis index b encodes vertex i in bit i (least significant first); bit 0
 * means label +1, bit 1 means label -1. The cost operator is diagonal with
 * eigenvalue cut(b) on basis state b, so the cost layer is a per-amplitude
 * phase exp(-i gamma cut(b)). The mixer layer applies exp(-i beta X) to every
 * qubit.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmaxcut/graph.hpp"

namespace qmaxcut {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultQubitCap = 24;

/// Simulator qubit cap: QMAXCUT_QUBIT_CAP if set to a positive integer,
/// otherwise kDefaultQubitCap. Throws std::invalid_argument on a malformed
/// value.
[[nodiscard]] std::size_t qubit_cap();

class StateVector {
public:
  /// Takes ownership of `amplitudes`. Throws std::invalid_argument unless the
  /// size is 2^n_qubits and the norm is 1 within 1e-10.
  StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index>.
  [[nodiscard]] static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
  [[nodiscard]] const Amplitude &operator[](std::uint64_t i) const { return amps_[i]; }

  [[nodiscard]] double probability(std::uint64_t i) const { return std::norm(amps_[i]); }
  [[nodiscard]] std::vector<double> probabilities() const;
  [[nodiscard]] double norm_squared() const noexcept;

private:
  std::size_t n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Cut values of every basis index for one graph: the diagonal of the cost
/// operator. Building it costs O(2^n m); reuse it across layers.
class CostDiagonal {
public:
  /// Throws ResourceLimitError if g.num_vertices() > cap.
  explicit CostDiagonal(const Graph &g, std::size_t cap = qubit_cap());

  [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return m_; }
  [[nodiscard]] std::span<const std::uint32_t> values() const noexcept { return cuts_; }
  [[nodiscard]] std::uint32_t operator[](std::uint64_t i) const { return cuts_[i]; }

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::uint32_t> cuts_;
};

/// Depth p and the p cost angles (gammas) and p mixer angles (betas).
class QaoaParams {
public:
  /// Throws std::invalid_argument unless both vectors have the same length
  /// >= 1 and every angle is finite.
  QaoaParams(std::vector<double> gammas, std::vector<double> betas);

  /// All-zero angles at depth p.
  [[nodiscard]] static QaoaParams zeros(std::size_t p);

  [[nodiscard]] std::size_t depth() const noexcept { return gammas_.size(); }
  [[nodiscard]] const std::vector<double> &gammas() const noexcept { return gammas_; }
  [[nodiscard]] const std::vector<double> &betas() const noexcept { return betas_; }

  /// Same angles plus one trailing (gamma = 0, beta = 0) layer, which acts as
  /// the identity.
  [[nodiscard]] QaoaParams padded() const;

  friend bool operator==(const QaoaParams &, const QaoaParams &) = default;

private:
  std::vector<double> gammas_;
  std::vector<double> betas_;
};

/// Uniform superposition: every amplitude 2^(-n/2). Throws ResourceLimitError
/// if n > cap, std::invalid_argument if n == 0.
[[nodiscard]] StateVector init_uniform(std::size_t n, std::size_t cap = qubit_cap());

/// Multiplies amplitude b by exp(-i gamma cut(b)).
void apply_cost_layer(StateVector &state, const CostDiagonal &cost, double gamma);
/// Convenience overload that builds the diagonal for `g` first.
void apply_cost_layer(StateVector &state, const Graph &g, double gamma);

/// Applies exp(-i beta X_q) to every qubit q.
void apply_mixer_layer(StateVector &state, double beta);

/// init_uniform, then for each layer l: cost(gamma_l), mixer(beta_l).
[[nodiscard]] StateVector apply_qaoa_circuit(const CostDiagonal &cost, const QaoaParams &params);
[[nodiscard]] StateVector apply_qaoa_circuit(const Graph &g, const QaoaParams &params);

/// Writes the circuit output into `state`, reusing its storage. `state` must
/// already have cost.num_qubits() qubits.
void apply_qaoa_circuit_into(StateVector &state, const CostDiagonal &cost,
                             const QaoaParams &params);

/// sum_b |amp_b|^2 cut(b).
[[nodiscard]] double expectation_cut(const StateVector &state, const CostDiagonal &cost);
[[nodiscard]] double expectation_cut(const StateVector &state, const Graph &g);

/// `shots` basis indices drawn from |amp_b|^2 with Rng(seed). Each draw maps
/// one uniform01() value through the cumulative distribution.
[[nodiscard]] std::vector<std::uint64_t> sample_bitstrings(const StateVector &state,
                                                           std::size_t shots,
                                                           std::uint64_t seed);

} // namespace qmaxcut
