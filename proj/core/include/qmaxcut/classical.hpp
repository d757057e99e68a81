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

#pragma once

#include <cstddef>
#include <string_view>

#include "qmaxcut/graph.hpp"

namespace qmaxcut {

enum class Algorithm { BruteForce, Greedy, Qaoa };

/// CSV / report token: "brute_force", "greedy" or "qaoa".
[[nodiscard]] std::string_view to_string(Algorithm a) noexcept;

struct SolveResult {
  CutAssignment assignment;
  double elapsed = 0.0; ///< wall-clock seconds
  Algorithm algorithm = Algorithm::BruteForce;
};

inline constexpr std::size_t kDefaultBruteForceCap = 24;

/// Exact Max-Cut by enumeration. Vertex 0 is pinned to +1, so 2^(n-1)
/// labelings are scanned in increasing basis-index order; the first one
/// reaching the maximum wins (smallest index among ties).
///
/// Throws ResourceLimitError if g.num_vertices() > max_vertices.
[[nodiscard]] SolveResult brute_force_maxcut(const Graph &g,
                                             std::size_t max_vertices = kDefaultBruteForceCap);

/// Sequential greedy: vertices in index order, vertex 0 -> +1, each later
/// vertex takes the side opposite the majority of its already-placed
/// neighbors; ties go to +1.
[[nodiscard]] SolveResult greedy_maxcut(const Graph &g);

/// Single-flip hill climbing. Sweeps vertices in index order, flipping any
/// vertex whose flip strictly increases the cut, until a full sweep makes
/// no flip. The result is 1-flip locally optimal.
[[nodiscard]] CutAssignment refine_single_flip(const Graph &g, const CutAssignment &start);

/// True if no single label flip increases the cut.
[[nodiscard]] bool is_flip_local_optimum(const Graph &g, const CutAssignment &cut);

} // namespace qmaxcut
