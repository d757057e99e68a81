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

#include "qmaxcut/classical.hpp"

#include <chrono>

#include "qmaxcut/errors.hpp"

namespace qmaxcut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Change in cut value if vertex v flips.
long flip_gain(const std::vector<std::vector<Vertex>> &adj, const Labels &labels, Vertex v) {
  long same = 0;
  long opposite = 0;
  for (const auto w : adj[v]) {
    if (labels[w] == labels[v])
      ++same;
    else
      ++opposite;
  }
  return same - opposite;
}

} // namespace

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
  case Algorithm::BruteForce:
    return "brute_force";
  case Algorithm::Greedy:
    return "greedy";
  case Algorithm::Qaoa:
    return "qaoa";
  }
  return "unknown";
}

SolveResult brute_force_maxcut(const Graph &g, std::size_t max_vertices) {
  const std::size_t n = g.num_vertices();
  if (n > max_vertices)
    throw ResourceLimitError("brute force on " + std::to_string(n) + " vertices", max_vertices);

  const auto start = Clock::now();
  const auto edges = g.edges();

  // Bit 0 stays clear: vertex 0 is pinned to +1.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t best_index = 0;
  std::size_t best_cut = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t index = k << 1;
    std::size_t cut = 0;
    for (const auto &e : edges)
      cut += ((index >> e.u) ^ (index >> e.v)) & 1U;
    if (cut > best_cut) {
      best_cut = cut;
      best_index = index;
    }
  }

  SolveResult result;
  result.assignment = CutAssignment(g, decode_labels(n, best_index));
  result.algorithm = Algorithm::BruteForce;
  result.elapsed = seconds_since(start);
  return result;
}

SolveResult greedy_maxcut(const Graph &g) {
  const auto start = Clock::now();
  const std::size_t n = g.num_vertices();
  const auto adj = g.adjacency();

  Labels labels(n, 0);
  labels[0] = 1;
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t plus = 0;
    std::size_t minus = 0;
    for (const auto w : adj[v]) {
      if (w >= v)
        continue;
      (labels[w] == 1 ? plus : minus) += 1;
    }
    // Joining -1 cuts the `plus` back-edges, joining +1 cuts the `minus` ones.
    labels[v] = plus > minus ? Label{-1} : Label{1};
  }

  SolveResult result;
  result.assignment = CutAssignment(g, std::move(labels));
  result.algorithm = Algorithm::Greedy;
  result.elapsed = seconds_since(start);
  return result;
}

CutAssignment refine_single_flip(const Graph &g, const CutAssignment &start) {
  const auto adj = g.adjacency();
  Labels labels = start.labels();
  if (labels.size() != g.num_vertices())
    throw std::invalid_argument("refine_single_flip: assignment does not match graph");

  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < labels.size(); ++v) {
      if (flip_gain(adj, labels, v) > 0) {
        labels[v] = static_cast<Label>(-labels[v]);
        improved = true;
      }
    }
  }
  return CutAssignment(g, std::move(labels));
}

bool is_flip_local_optimum(const Graph &g, const CutAssignment &cut) {
  const auto adj = g.adjacency();
  const auto &labels = cut.labels();
  for (Vertex v = 0; v < labels.size(); ++v)
    if (flip_gain(adj, labels, v) > 0)
      return false;
  return true;
}

} // namespace qmaxcut
