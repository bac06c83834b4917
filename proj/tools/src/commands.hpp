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

#ifndef ROBUSTCNOT_TOOLS_COMMANDS_HPP
#define ROBUSTCNOT_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "robustcnot/exchange.hpp"
#include "run_config.hpp"

namespace robustcnot::cli {

/// Each command returns the complete CSV text: `# params:` line, header, rows.
std::string cmd_sweep_delta(const RunConfig &cfg);
std::string cmd_table1(const RunConfig &cfg);
std::string cmd_sweep_separation(const RunConfig &cfg);
std::string cmd_measurements(const RunConfig &cfg);
std::string cmd_time_error(const RunConfig &cfg);
std::string cmd_counts(const RunConfig &cfg);

/// Writes every sweep plus table1 and counts into `dir`; returns the paths written.
std::vector<std::filesystem::path> cmd_make_figures(const RunConfig &cfg, const std::filesystem::path &dir);

/// Dispatches on cfg.command and writes to cfg.out ("-" for stdout).
/// Honors cfg.dump_seq.
void run(const RunConfig &cfg);

xchg::ExchangeTable load_exchange(const RunConfig &cfg);

/// Tolerance on two-qubit times checked by table1.
inline constexpr double kTwoQubitTolNs = 0.005;

}  // namespace robustcnot::cli

#endif  // ROBUSTCNOT_TOOLS_COMMANDS_HPP
