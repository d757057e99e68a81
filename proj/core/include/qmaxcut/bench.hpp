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
 * Benchmark sweeps over graph sizes and QAOA depths, CSV rows and
 * gnuplot-style plot data.
 *
 * CSV schema (LF line endings, no quoting):
 *
 *     algorithm,n,m,depth,cut,runtime_s,seed,expectation
 *
 * `depth` is 0 and `expectation` is empty for classical rows. A cell that
 * failed (e.g. over the qubit cap) is written with an empty `cut`,
 * runtime 0 and the token `failed` in the `expectation` column.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmaxcut/classical.hpp"
#include "qmaxcut/qaoa.hpp"

namespace qmaxcut {

struct BenchRecord {
  Algorithm algorithm = Algorithm::BruteForce;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t depth = 0;
  std::size_t cut = 0;
  double runtime_s = 0.0;
  std::uint64_t seed = 0;
  std::optional<double> expectation;
  bool failed = false;
};

inline constexpr const char *kCsvHeader = "algorithm,n,m,depth,cut,runtime_s,seed,expectation";

/// One CSV line without the trailing newline. runtime_s is printed with 9
/// decimals, expectation with 10.
[[nodiscard]] std::string to_csv_row(const BenchRecord &r);

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records);

struct GraphSize {
  std::size_t n = 0;
  std::uint64_t m = 0;
};

/// (4,5) (6,9) (8,12) (10,15) (12,20) (14,25) (16,30).
[[nodiscard]] std::vector<GraphSize> default_schedule();

struct BenchConfig {
  std::vector<GraphSize> schedule = default_schedule();
  std::vector<std::size_t> depths = {1, 2, 3};
  bool run_brute_force = true;
  bool run_greedy = true;
  bool run_qaoa = true;
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  /// Trial t of a cell uses seed + t for graph generation and QAOA.
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  /// depth is taken from `depths`.
  QaoaConfig qaoa;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  bool any_failed = false;
};

/// Runs every cell in schedule order: brute force (when n <= cap), greedy,
/// then QAOA at every requested depth.
[[nodiscard]] BenchOutcome run_bench(const BenchConfig &cfg);

/// Runtime vs graph size, one block per algorithm (QAOA one block per depth),
/// runtimes averaged over trials. Blocks are separated by two blank lines and
/// headed by a "# <series>" comment.
void write_runtime_vs_size(std::ostream &out, const std::vector<BenchRecord> &records);

/// QAOA runtime vs depth, one block per graph size.
void write_runtime_vs_depth(std::ostream &out, const std::vector<BenchRecord> &records);

} // namespace qmaxcut
