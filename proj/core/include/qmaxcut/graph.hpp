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
 * Undirected simple graphs, cut assignments and the edge-list text format.
 *
 * Edge-list format (LF line endings, trailing newline required, no comments
 * or blank lines):
 *
 *     n m
 *     u v      <- exactly m lines, 0-based vertex indices
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmaxcut {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Vertex label in a cut: +1 (set S1, bit 0) or -1 (set S2, bit 1).
using Label = std::int8_t;
using Labels = std::vector<Label>;

/// Immutable undirected simple graph. Edges are stored canonically (u < v)
/// and sorted lexicographically, so two graphs with the same edge set compare
/// equal.
class Graph {
public:
  /// Canonicalizes and sorts `edges`. Throws std::invalid_argument on n == 0,
  /// an out-of-range vertex, a self-loop or a duplicate edge.
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbor lists, built on demand.
  [[nodiscard]] std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Largest edge count a simple graph on n vertices can have.
[[nodiscard]] std::uint64_t max_edges(std::size_t n) noexcept;

/// Number of edges whose endpoints carry different labels.
/// Throws std::invalid_argument if labels.size() != g.num_vertices().
[[nodiscard]] std::size_t cut_value(const Graph &g, std::span<const Label> labels);

/// Cut value of the labeling encoded by a basis index (bit i set <=> vertex i
/// has label -1).
[[nodiscard]] std::size_t cut_value_of_index(const Graph &g, std::uint64_t index) noexcept;

/// Labels encoded by basis index `index` over n vertices.
[[nodiscard]] Labels decode_labels(std::size_t n, std::uint64_t index);

/// Inverse of decode_labels.
[[nodiscard]] std::uint64_t encode_labels(std::span<const Label> labels);

/// A +/-1 labeling together with its cut value. The cut value is always the
/// recount against the graph used to build it.
class CutAssignment {
public:
  CutAssignment() = default;
  /// Throws std::invalid_argument on a size mismatch or a label not in {-1,+1}.
  CutAssignment(const Graph &g, Labels labels);

  [[nodiscard]] const Labels &labels() const noexcept { return labels_; }
  [[nodiscard]] std::size_t cut_value() const noexcept { return cut_value_; }

  /// "+--+" style rendering, one character per vertex.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CutAssignment &, const CutAssignment &) = default;

private:
  Labels labels_;
  std::size_t cut_value_ = 0;
};

/// Simple graph with exactly m edges drawn uniformly without replacement from
/// all n(n-1)/2 vertex pairs.
///
/// Pairs are indexed 0..N-1 in lexicographic (u, v) order. The m indices are
/// chosen with Floyd's sampling algorithm: for j = N-m .. N-1, draw
/// t = rng.uniform_below(j + 1) and insert t, or j if t is already taken.
/// The generator is `Rng(seed)` (see random.hpp), so output is identical on
/// every platform.
///
/// Throws std::invalid_argument if n == 0 or m > n(n-1)/2.
[[nodiscard]] Graph generate_random_graph(std::size_t n, std::uint64_t m, std::uint64_t seed);

/// Parses the edge-list format. Throws ParseError naming the 1-based line.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] Graph read_edge_list_file(const std::string &path);

[[nodiscard]] std::string write_edge_list(const Graph &g);
void write_edge_list(const Graph &g, std::ostream &out);

} // namespace qmaxcut
