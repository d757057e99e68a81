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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qmaxcut/bench.hpp"
#include "qmaxcut/classical.hpp"
#include "qmaxcut/errors.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/pipeline.hpp"

namespace qmaxcut::cli {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_uint_list(const std::string &text, const std::string &flag) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw UsageError(flag + ": expected comma-separated non-negative integers, got \"" + text +
                       "\"");
    values.push_back(v);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return values;
}

GraphSize parse_size(const std::string &text) {
  const auto v = parse_uint_list(text, "--gen");
  if (v.size() != 2)
    throw UsageError("--gen: expected \"n,m\", got \"" + text + "\"");
  return {static_cast<std::size_t>(v[0]), v[1]};
}

std::vector<std::size_t> parse_depths(const std::string &text) {
  std::vector<std::size_t> depths;
  for (const auto d : parse_uint_list(text, "--depth")) {
    if (d == 0)
      throw UsageError("--depth: depths must be >= 1");
    depths.push_back(static_cast<std::size_t>(d));
  }
  return depths;
}

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

// Flags shared by solve and bench.
struct QaoaFlags {
  std::string depth;
  std::size_t budget = QaoaConfig{}.budget;
  std::size_t restarts = QaoaConfig{}.restarts;
  std::size_t shots = 0;
  bool no_warm_start = false;

  void add_to(CLI::App &app, const std::string &default_depth) {
    depth = default_depth;
    app.add_option("--depth", depth, "QAOA depth or comma-separated depths")
        ->capture_default_str();
    app.add_option("--budget", budget, "Objective evaluations per QAOA depth")
        ->capture_default_str();
    app.add_option("--restarts", restarts, "Optimizer start points")->capture_default_str();
    app.add_option("--shots", shots, "Extraction shots (0 = exact enumeration)")
        ->capture_default_str();
    app.add_flag("--no-warm-start", no_warm_start,
                 "Optimize each depth from scratch instead of warm-starting");
  }

  [[nodiscard]] QaoaConfig config(std::uint64_t seed) const {
    QaoaConfig c;
    c.budget = budget;
    c.restarts = restarts;
    c.shots = shots;
    c.seed = seed;
    c.warm_start = !no_warm_start;
    return c;
  }
};

struct Algos {
  bool brute = false;
  bool greedy = false;
  bool qaoa = false;
};

Algos parse_algo(const std::string &algo) {
  if (algo == "all")
    return {true, true, true};
  if (algo == "brute")
    return {true, false, false};
  if (algo == "greedy")
    return {false, true, false};
  if (algo == "qaoa")
    return {false, false, true};
  throw UsageError("--algo must be one of brute, greedy, qaoa, all");
}

void print_classical(std::ostream &out, const SolveResult &r) {
  out << "algorithm=" << to_string(r.algorithm) << '\n';
  out << "cut=" << r.assignment.cut_value() << '\n';
  out << "labels=" << r.assignment.to_string() << '\n';
  out << "runtime_s=" << fixed(r.elapsed, 9) << '\n';
}

std::ofstream open_output(const std::string &path) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw UsageError("cannot open output file: " + path);
  return f;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Max-Cut with QAOA statevector simulation and classical baselines", "qmaxcut"};
  app.require_subcommand(1);

  // solve ---------------------------------------------------------------
  auto *solve = app.add_subcommand("solve", "Solve one instance and print the cut");
  std::string solve_graph;
  std::string solve_gen;
  std::uint64_t solve_seed = 0;
  std::string solve_algo = "all";
  double latency = 0.0;
  bool no_refine = false;
  std::size_t solve_brute_cap = kDefaultBruteForceCap;
  QaoaFlags solve_q;
  auto *graph_opt = solve->add_option("--graph", solve_graph, "Edge-list file");
  auto *gen_opt = solve->add_option("--gen", solve_gen, "Generate a random graph \"n,m\"");
  graph_opt->excludes(gen_opt);
  solve->add_option("--seed", solve_seed, "Seed for generation and QAOA")->capture_default_str();
  solve->add_option("--algo", solve_algo, "brute | greedy | qaoa | all")->capture_default_str();
  solve->add_option("--latency", latency, "Simulated seconds per quantum round trip")
      ->capture_default_str();
  solve->add_flag("--no-refine", no_refine, "Skip single-flip post-processing of the QAOA cut");
  solve->add_option("--brute-cap", solve_brute_cap, "Largest n for brute force")
      ->capture_default_str();
  solve_q.add_to(*solve, "1");

  // bench ---------------------------------------------------------------
  auto *bench = app.add_subcommand("bench", "Run the size x algorithm x depth sweep, write CSV");
  std::vector<std::string> bench_gen;
  std::uint64_t bench_seed = 1;
  std::string bench_algo = "all";
  std::size_t trials = 1;
  std::string csv_path;
  std::string plot_prefix;
  std::size_t bench_brute_cap = kDefaultBruteForceCap;
  QaoaFlags bench_q;
  bench->add_option("--gen", bench_gen, "Schedule cell \"n,m\" (repeatable; default: 4,5 .. 16,30)");
  bench->add_option("--seed", bench_seed, "Base seed")->capture_default_str();
  bench->add_option("--algo", bench_algo, "brute | greedy | qaoa | all")->capture_default_str();
  bench->add_option("--trials", trials, "Seeds per schedule cell")->capture_default_str();
  bench->add_option("--csv", csv_path, "CSV output file (default stdout)");
  bench->add_option("--out", plot_prefix,
                    "Plot data prefix: writes <prefix>_runtime_vs_n.dat and "
                    "<prefix>_runtime_vs_depth.dat");
  bench->add_option("--brute-cap", bench_brute_cap, "Largest n for brute force")
      ->capture_default_str();
  bench_q.add_to(*bench, "1,2,3");

  // gen -----------------------------------------------------------------
  auto *gen = app.add_subcommand("gen", "Write a random graph in edge-list format");
  std::size_t gen_n = 0;
  std::uint64_t gen_m = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--m", gen_m, "Edge count")->required();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      if (gen_n == 0 || gen_m > max_edges(gen_n))
        throw UsageError("invalid graph size: need n >= 1 and m <= n(n-1)/2");
      const auto g = generate_random_graph(gen_n, gen_m, gen_seed);
      if (gen_out.empty()) {
        write_edge_list(g, out);
      } else {
        auto f = open_output(gen_out);
        write_edge_list(g, f);
      }
      return kOk;
    }

    if (*solve) {
      const auto algos = parse_algo(solve_algo);
      const auto depths = parse_depths(solve_q.depth);
      if (solve_graph.empty() && solve_gen.empty())
        throw UsageError("solve needs --graph <path> or --gen n,m");
      std::optional<Graph> g;
      if (!solve_graph.empty()) {
        if (!std::ifstream(solve_graph))
          throw UsageError("cannot open graph file: " + solve_graph);
        g = read_edge_list_file(solve_graph);
      } else {
        const auto size = parse_size(solve_gen);
        if (size.n == 0 || size.m > max_edges(size.n))
          throw UsageError("--gen: need n >= 1 and m <= n(n-1)/2");
        g = generate_random_graph(size.n, size.m, solve_seed);
      }
      out << "n=" << g->num_vertices() << "\nm=" << g->num_edges() << '\n';

      if (algos.brute) {
        out << '\n';
        print_classical(out, brute_force_maxcut(*g, solve_brute_cap));
      }
      if (algos.greedy) {
        out << '\n';
        print_classical(out, greedy_maxcut(*g));
      }
      if (algos.qaoa) {
        for (const auto p : depths) {
          PipelineConfig pc;
          pc.qaoa = solve_q.config(solve_seed);
          pc.qaoa.depth = p;
          pc.offload_latency = latency;
          pc.postprocess_refine = !no_refine;
          const auto report = run_pipeline(*g, pc);
          out << "\nalgorithm=qaoa\n";
          out << "cut=" << report.final_cut.cut_value() << '\n';
          out << "labels=" << report.final_cut.to_string() << '\n';
          out << "runtime_s=" << fixed(report.stage_timings.at("quantum"), 9) << '\n';
          out << to_key_value(report);
        }
      }
      return kOk;
    }

    if (*bench) {
      const auto algos = parse_algo(bench_algo);
      BenchConfig bc;
      if (!bench_gen.empty()) {
        bc.schedule.clear();
        for (const auto &s : bench_gen)
          bc.schedule.push_back(parse_size(s));
      }
      bc.depths = parse_depths(bench_q.depth);
      bc.run_brute_force = algos.brute;
      bc.run_greedy = algos.greedy;
      bc.run_qaoa = algos.qaoa;
      bc.brute_force_cap = bench_brute_cap;
      bc.seed = bench_seed;
      bc.trials = trials;
      bc.qaoa = bench_q.config(bench_seed);

      const auto outcome = run_bench(bc);
      if (csv_path.empty()) {
        write_csv(out, outcome.records);
      } else {
        auto f = open_output(csv_path);
        write_csv(f, outcome.records);
      }
      if (!plot_prefix.empty()) {
        auto by_size = open_output(plot_prefix + "_runtime_vs_n.dat");
        write_runtime_vs_size(by_size, outcome.records);
        auto by_depth = open_output(plot_prefix + "_runtime_vs_depth.dat");
        write_runtime_vs_depth(by_depth, outcome.records);
      }
      if (outcome.any_failed) {
        err << "warning: some benchmark cells failed (rows marked \"failed\")\n";
        return kPartialFailure;
      }
      return kOk;
    }
  } catch (const ResourceLimitError &e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const ParseError &e) {
    err << "error: graph file " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsage;
}

} // namespace qmaxcut::cli
