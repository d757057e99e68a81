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
#include <stdexcept>
#include <string>

namespace qmaxcut {

/// Raised when a problem exceeds a configured size cap (qubits, brute-force
/// vertices). Carries the cap so callers can report it.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string &what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"),
        cap_(cap) {}

  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace qmaxcut
