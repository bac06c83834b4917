// Copyright 2026 The robustcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTCNOT_ERRORS_HPP
#define ROBUSTCNOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robustcnot {

// Argument-level failures use std::invalid_argument directly. The types below
// cover the remaining failure classes so callers (the CLI in particular) can
// map them onto distinct exit codes.

/// Malformed input data. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string &source, std::size_t line, const std::string &what)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A request outside the supported envelope (e.g. concatenation level above the cap).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter could not be recovered from reference data.
class InferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace robustcnot

#endif  // ROBUSTCNOT_ERRORS_HPP
