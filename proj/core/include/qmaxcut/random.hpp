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
 * Portable seeded random numbers.
 *
 * Every random draw in qmaxcut goes through `Rng`. The raw engine is
 * `std::mt19937_64`, whose output sequence is fixed by the C++ standard.
 * The standard `<random>` distributions are NOT used because their
 * algorithms are implementation-defined; the two derived draws are instead:
 *
 *  - `uniform_below(k)`: rejection sampling. Let t = (2^64 - k) mod k. Draw
 *    64-bit words x until x >= t, then return x mod k.
 *  - `uniform01()`: (x >> 11) * 2^-53 for one 64-bit word x, in [0, 1).
 *
 * Sub-streams are derived with `mix_seed`, the SplitMix64 finalizer applied
 * to `seed + 0x9E3779B97F4A7C15 * (stream + 1)`.
 */

#pragma once

#include <cstdint>
#include <random>

namespace qmaxcut {

[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::mt19937_64 engine_;
};

} // namespace qmaxcut
