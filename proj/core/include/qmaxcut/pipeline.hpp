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
 * Three-stage hybrid run: classical pre-processing, QAOA offload, classical
 * post-processing.
 *
 * Communication is accounted, never slept: every objective evaluation is one
 * round trip to the quantum device, and so is the final state preparation
 * used for cut extraction. The simulated overhead is
 * offload_count * offload_latency and is kept apart from measured times.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "qmaxcut/bench.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/qaoa.hpp"

namespace qmaxcut {

struct PipelineConfig {
  QaoaConfig qaoa;
  /// Simulated seconds per quantum round trip; must be >= 0.
  double offload_latency = 0.0;
  /// Single-flip hill climbing on the extracted cut.
  bool postprocess_refine = true;
};

struct PipelineReport {
  /// "preprocess", "quantum" and "postprocess", measured seconds.
  std::map<std::string, double> stage_timings;
  std::size_t offload_count = 0;
  double offload_latency = 0.0;
  double simulated_comm_overhead = 0.0;
  CutAssignment final_cut;
  QaoaResult qaoa_result;
};

/// Throws std::invalid_argument on a negative or non-finite latency;
/// solver errors propagate.
[[nodiscard]] PipelineReport run_pipeline(const Graph &g, const PipelineConfig &cfg);

/// `key=value` lines, one per field, in a fixed order.
[[nodiscard]] std::string to_key_value(const PipelineReport &report);

/// The report as a `qaoa` CSV row. Runtime is the quantum stage time.
[[nodiscard]] BenchRecord to_bench_record(const PipelineReport &report, const Graph &g,
                                          std::uint64_t seed);

} // namespace qmaxcut
