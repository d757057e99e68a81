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

#include "qmaxcut/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qmaxcut/errors.hpp"
#include "qmaxcut/graph.hpp"

namespace qmaxcut {

namespace {

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

// Ordered series of (x, sum, count) points.
struct Series {
  std::string name;
  std::vector<std::pair<std::size_t, std::pair<double, std::size_t>>> points;

  void add(std::size_t x, double y) {
    for (auto &[px, acc] : points) {
      if (px == x) {
        acc.first += y;
        acc.second += 1;
        return;
      }
    }
    points.push_back({x, {y, 1}});
  }
};

Series &series_named(std::vector<Series> &all, const std::string &name) {
  for (auto &s : all)
    if (s.name == name)
      return s;
  all.push_back({name, {}});
  return all.back();
}

void write_series(std::ostream &out, const std::vector<Series> &all) {
  bool first = true;
  for (const auto &s : all) {
    if (!first)
      out << "\n\n";
    first = false;
    out << "# " << s.name << '\n';
    for (const auto &[x, acc] : s.points)
      out << x << ' ' << fixed(acc.first / static_cast<double>(acc.second), 9) << '\n';
  }
}

BenchRecord failed_record(Algorithm a, const GraphSize &size, std::size_t depth,
                          std::uint64_t seed) {
  BenchRecord r;
  r.algorithm = a;
  r.n = size.n;
  r.m = static_cast<std::size_t>(size.m);
  r.depth = depth;
  r.seed = seed;
  r.failed = true;
  return r;
}

} // namespace

std::string to_csv_row(const BenchRecord &r) {
  std::string row;
  row += to_string(r.algorithm);
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.m);
  row += ',' + std::to_string(r.depth);
  row += ',';
  if (!r.failed)
    row += std::to_string(r.cut);
  row += ',' + fixed(r.runtime_s, 9);
  row += ',' + std::to_string(r.seed);
  row += ',';
  if (r.failed)
    row += "failed";
  else if (r.expectation)
    row += fixed(*r.expectation, 10);
  return row;
}

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
  out << kCsvHeader << '\n';
  for (const auto &r : records)
    out << to_csv_row(r) << '\n';
}

std::vector<GraphSize> default_schedule() {
  return {{4, 5}, {6, 9}, {8, 12}, {10, 15}, {12, 20}, {14, 25}, {16, 30}};
}

BenchOutcome run_bench(const BenchConfig &cfg) {
  if (cfg.trials == 0)
    throw std::invalid_argument("trials must be >= 1");
  for (const auto &size : cfg.schedule)
    if (size.n == 0 || size.m > max_edges(size.n))
      throw std::invalid_argument("schedule cell (" + std::to_string(size.n) + ", " +
                                  std::to_string(size.m) + ") is not a simple graph size");
  if (cfg.run_qaoa) {
    if (cfg.depths.empty())
      throw std::invalid_argument("at least one QAOA depth is required");
    for (const auto p : cfg.depths)
      if (p == 0)
        throw std::invalid_argument("QAOA depths must be >= 1");
    cfg.qaoa.validate();
  }

  BenchOutcome outcome;
  for (const auto &size : cfg.schedule) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = cfg.seed + t;
      const Graph g = generate_random_graph(size.n, size.m, seed);

      const auto classical_row = [&](const SolveResult &s) {
        BenchRecord r;
        r.algorithm = s.algorithm;
        r.n = g.num_vertices();
        r.m = g.num_edges();
        r.cut = s.assignment.cut_value();
        r.runtime_s = s.elapsed;
        r.seed = seed;
        outcome.records.push_back(r);
      };

      if (cfg.run_brute_force && size.n <= cfg.brute_force_cap)
        classical_row(brute_force_maxcut(g, cfg.brute_force_cap));
      if (cfg.run_greedy)
        classical_row(greedy_maxcut(g));

      if (cfg.run_qaoa) {
        QaoaConfig qc = cfg.qaoa;
        qc.seed = seed;
        try {
          for (const auto &q : run_qaoa_sweep(g, qc, cfg.depths)) {
            BenchRecord r;
            r.algorithm = Algorithm::Qaoa;
            r.n = g.num_vertices();
            r.m = g.num_edges();
            r.depth = q.best_params.depth();
            r.cut = q.best_cut.cut_value();
            r.runtime_s = q.elapsed;
            r.seed = seed;
            r.expectation = q.best_expectation;
            outcome.records.push_back(r);
          }
        } catch (const ResourceLimitError &) {
          std::vector<std::size_t> depths(cfg.depths);
          std::sort(depths.begin(), depths.end());
          depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
          for (const auto p : depths)
            outcome.records.push_back(failed_record(Algorithm::Qaoa, size, p, seed));
          outcome.any_failed = true;
        }
      }
    }
  }
  return outcome;
}

void write_runtime_vs_size(std::ostream &out, const std::vector<BenchRecord> &records) {
  std::vector<Series> all;
  for (const auto &r : records) {
    if (r.failed)
      continue;
    std::string name(to_string(r.algorithm));
    if (r.algorithm == Algorithm::Qaoa)
      name += "_p" + std::to_string(r.depth);
    series_named(all, name).add(r.n, r.runtime_s);
  }
  write_series(out, all);
}

void write_runtime_vs_depth(std::ostream &out, const std::vector<BenchRecord> &records) {
  std::vector<Series> all;
  for (const auto &r : records) {
    if (r.failed || r.algorithm != Algorithm::Qaoa)
      continue;
    series_named(all, "qaoa n=" + std::to_string(r.n) + " m=" + std::to_string(r.m))
        .add(r.depth, r.runtime_s);
  }
  write_series(out, all);
}

} // namespace qmaxcut
