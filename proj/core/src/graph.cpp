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

#include "qmaxcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qmaxcut/errors.hpp"
#include "qmaxcut/random.hpp"

namespace qmaxcut {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0)
    throw std::invalid_argument("graph must have at least one vertex");
  for (auto &e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a vertex >= " + std::to_string(n_));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + ", " +
                                std::to_string(dup->v) + ")");
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto &e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::uint64_t max_edges(std::size_t n) noexcept {
  const auto nn = static_cast<std::uint64_t>(n);
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

std::size_t cut_value(const Graph &g, std::span<const Label> labels) {
  if (labels.size() != g.num_vertices())
    throw std::invalid_argument("cut_value: " + std::to_string(labels.size()) +
                                " labels for a graph with " +
                                std::to_string(g.num_vertices()) + " vertices");
  std::size_t cut = 0;
  for (const auto &e : g.edges())
    cut += labels[e.u] != labels[e.v] ? 1 : 0;
  return cut;
}

std::size_t cut_value_of_index(const Graph &g, std::uint64_t index) noexcept {
  std::size_t cut = 0;
  for (const auto &e : g.edges())
    cut += ((index >> e.u) ^ (index >> e.v)) & 1U;
  return cut;
}

Labels decode_labels(std::size_t n, std::uint64_t index) {
  Labels labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = ((index >> i) & 1U) ? Label{-1} : Label{1};
  return labels;
}

std::uint64_t encode_labels(std::span<const Label> labels) {
  if (labels.size() > 64)
    throw std::invalid_argument("encode_labels: more than 64 labels");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == -1)
      index |= std::uint64_t{1} << i;
  return index;
}

CutAssignment::CutAssignment(const Graph &g, Labels labels) : labels_(std::move(labels)) {
  for (const auto l : labels_)
    if (l != 1 && l != -1)
      throw std::invalid_argument("labels must be +1 or -1");
  cut_value_ = qmaxcut::cut_value(g, labels_);
}

std::string CutAssignment::to_string() const {
  std::string s;
  s.reserve(labels_.size());
  for (const auto l : labels_)
    s.push_back(l == 1 ? '+' : '-');
  return s;
}

Graph generate_random_graph(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0)
    throw std::invalid_argument("generate_random_graph: n must be >= 1");
  const std::uint64_t pairs = max_edges(n);
  if (m > pairs)
    throw std::invalid_argument("generate_random_graph: m = " + std::to_string(m) +
                                " exceeds n(n-1)/2 = " + std::to_string(pairs));

  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.uniform_below(j + 1);
    if (!chosen.insert(t).second)
      chosen.insert(j);
  }
  std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
  std::sort(picks.begin(), picks.end());

  // Walk rows of the pair triangle alongside the sorted indices.
  std::vector<Edge> edges;
  edges.reserve(picks.size());
  std::uint64_t row_start = 0;
  Vertex u = 0;
  for (const auto k : picks) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (k - row_start))});
  }
  return Graph(n, std::move(edges));
}

namespace {

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  if (token.empty())
    return std::nullopt;
  std::uint64_t value = 0;
  const auto *end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    return std::nullopt;
  return value;
}

// Exactly two unsigned integers separated by one space.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
  const auto space = line.find(' ');
  if (space == std::string_view::npos)
    return std::nullopt;
  const auto a = parse_uint(line.substr(0, space));
  const auto b = parse_uint(line.substr(space + 1));
  if (!a || !b)
    return std::nullopt;
  return std::pair{*a, *b};
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      throw ParseError(lines.size() + 1, "missing trailing newline");
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty())
    throw ParseError(1, "empty input, expected header \"n m\"");

  const auto header = parse_pair(lines[0]);
  if (!header)
    throw ParseError(1, "malformed header, expected \"n m\"");
  const auto [n, m] = *header;
  if (n == 0)
    throw ParseError(1, "vertex count must be >= 1");
  if (n > std::numeric_limits<Vertex>::max())
    throw ParseError(1, "vertex count too large");
  if (m > max_edges(n))
    throw ParseError(1, "edge count " + std::to_string(m) + " exceeds n(n-1)/2");
  if (lines.size() - 1 != m) {
    const auto at = std::min<std::size_t>(lines.size(), m + 1) + 1;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto line_no = i + 1;
    const auto uv = parse_pair(lines[i]);
    if (!uv)
      throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    auto [u, v] = *uv;
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (!seen.insert(u * n + v).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(const Graph &g, std::ostream &out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
}

std::string write_edge_list(const Graph &g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

} // namespace qmaxcut
