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

#ifndef ROBUSTCNOT_CSV_HPP
#define ROBUSTCNOT_CSV_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace robustcnot::csv {

/// 10 significant digits, '.' separator, independent of the global locale.
std::string format_real(double value);
/// Shortest text that parses back to exactly `value`.
std::string format_exact(double value);

/// Locale-independent full-string parse; nullopt on any trailing garbage.
std::optional<double> parse_real(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

/// Joins already-formatted fields with commas.
std::string join(const std::vector<std::string> &fields);

}  // namespace robustcnot::csv

#endif  // ROBUSTCNOT_CSV_HPP
