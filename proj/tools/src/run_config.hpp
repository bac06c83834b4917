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

#ifndef ROBUSTCNOT_TOOLS_RUN_CONFIG_HPP
#define ROBUSTCNOT_TOOLS_RUN_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robustcnot/cost.hpp"
#include "robustcnot/pulse.hpp"

namespace robustcnot::cli {

/// Bad command-line or config-file input (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;

  std::vector<int> levels{0, 1, 2};
  int slices = pulse::kDefaultSlices;

  double delta_min = -0.9;
  double delta_max = 0.9;
  int delta_points = 181;
  bool allow_beyond = false;

  std::string exchange_table;  // empty: built-in sample
  std::optional<double> target_separation_nm;

  cost::TimingModel timing;

  long long n_t = 10;
  std::vector<long long> n_list;  // explicit grid; overrides the log grid
  long long n_min = 0;            // 0: 6 N_t + 1
  long long n_max = 100000;
  int n_points = 60;

  double t2_ms = 60.0;

  std::string out = "-";
  std::string dump_seq;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Throws UsageError describing the first invalid field.
void validate(const RunConfig &cfg);

std::vector<double> delta_grid(const RunConfig &cfg);
std::vector<long long> measurement_grid(const RunConfig &cfg);

/// `# params: key=value ...` echo of the fields relevant to the command.
std::string params_line(const RunConfig &cfg);

}  // namespace robustcnot::cli

#endif  // ROBUSTCNOT_TOOLS_RUN_CONFIG_HPP
