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

#include "qmaxcut/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qmaxcut/classical.hpp"
#include "qmaxcut/errors.hpp"
#include "qmaxcut/statevector.hpp"

namespace qmaxcut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

} // namespace

PipelineReport run_pipeline(const Graph &g, const PipelineConfig &cfg) {
  if (!std::isfinite(cfg.offload_latency) || cfg.offload_latency < 0.0)
    throw std::invalid_argument("offload latency must be a finite value >= 0");
  cfg.qaoa.validate();

  PipelineReport report;
  report.offload_latency = cfg.offload_latency;

  // Stage 1: rebuild through the validating constructor and check the
  // instance fits the simulator before anything is offloaded.
  const auto t_pre = Clock::now();
  const Graph graph(g.num_vertices(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  const auto cap = qubit_cap();
  if (graph.num_vertices() > cap)
    throw ResourceLimitError("QAOA on " + std::to_string(graph.num_vertices()) + " vertices",
                             cap);
  report.stage_timings["preprocess"] = seconds_since(t_pre);

  // Stage 2: variational loop plus one final state preparation.
  const auto t_q = Clock::now();
  report.qaoa_result = run_qaoa(graph, cfg.qaoa);
  report.stage_timings["quantum"] = seconds_since(t_q);
  report.offload_count = report.qaoa_result.total_evaluations() + 1;
  report.simulated_comm_overhead =
      static_cast<double>(report.offload_count) * cfg.offload_latency;

  // Stage 3: refine and verify.
  const auto t_post = Clock::now();
  report.final_cut = cfg.postprocess_refine
                         ? refine_single_flip(graph, report.qaoa_result.best_cut)
                         : report.qaoa_result.best_cut;
  if (cut_value(graph, report.final_cut.labels()) != report.final_cut.cut_value() ||
      report.final_cut.cut_value() < report.qaoa_result.best_cut.cut_value())
    throw std::logic_error("post-processing produced an inconsistent cut");
  report.stage_timings["postprocess"] = seconds_since(t_post);
  return report;
}

std::string to_key_value(const PipelineReport &report) {
  const auto &q = report.qaoa_result;
  std::ostringstream out;
  out << "depth=" << q.best_params.depth() << '\n';
  out << "qaoa.expectation=" << fmt_double(q.best_expectation) << '\n';
  out << "qaoa.cut=" << q.best_cut.cut_value() << '\n';
  out << "qaoa.labels=" << q.best_cut.to_string() << '\n';
  out << "qaoa.evaluations=" << q.n_evaluations << '\n';
  out << "qaoa.warm_start_evaluations=" << q.warm_start_evaluations << '\n';
  out << "qaoa.elapsed_s=" << fmt_double(q.elapsed) << '\n';
  for (const auto &[name, seconds] : q.per_stage_timings)
    out << "qaoa.stage." << name << "_s=" << fmt_double(seconds) << '\n';
  out << "qaoa.gammas=";
  for (std::size_t l = 0; l < q.best_params.depth(); ++l)
    out << (l ? "," : "") << fmt_double(q.best_params.gammas()[l]);
  out << "\nqaoa.betas=";
  for (std::size_t l = 0; l < q.best_params.depth(); ++l)
    out << (l ? "," : "") << fmt_double(q.best_params.betas()[l]);
  out << '\n';
  for (const char *stage : {"preprocess", "quantum", "postprocess"}) {
    const auto it = report.stage_timings.find(stage);
    out << "stage." << stage << "_s=" << fmt_double(it == report.stage_timings.end() ? 0.0 : it->second)
        << '\n';
  }
  out << "offload_count=" << report.offload_count << '\n';
  out << "offload_latency_s=" << fmt_double(report.offload_latency) << '\n';
  out << "simulated_comm_overhead_s=" << fmt_double(report.simulated_comm_overhead) << '\n';
  out << "final.cut=" << report.final_cut.cut_value() << '\n';
  out << "final.labels=" << report.final_cut.to_string() << '\n';
  return out.str();
}

BenchRecord to_bench_record(const PipelineReport &report, const Graph &g, std::uint64_t seed) {
  BenchRecord r;
  r.algorithm = Algorithm::Qaoa;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.depth = report.qaoa_result.best_params.depth();
  r.cut = report.final_cut.cut_value();
  const auto it = report.stage_timings.find("quantum");
  r.runtime_s = it == report.stage_timings.end() ? 0.0 : it->second;
  r.seed = seed;
  r.expectation = report.qaoa_result.best_expectation;
  return r;
}

} // namespace qmaxcut
