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

#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "robustcnot/csv.hpp"

namespace robustcnot::cli {

namespace {

template <typename T>
std::string join_list(const std::vector<T> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

bool uses_delta_grid(const std::string &c) { return c == "sweep-delta" || c == "make-figures"; }
bool uses_table(const std::string &c) {
  return c == "sweep-separation" || c == "time-error" || c == "make-figures";
}
bool uses_measurements(const std::string &c) { return c == "measurements" || c == "make-figures"; }
bool uses_timing(const std::string &c) { return c == "table1" || c == "time-error" || c == "make-figures"; }

}  // namespace

void validate(const RunConfig &cfg) {
  if (cfg.levels.empty()) throw UsageError("--levels must not be empty");
  for (int l : cfg.levels)
    if (l < 0 || l > 2) throw UsageError("levels must be in {0,1,2}, got " + std::to_string(l));
  if (cfg.slices < 1) throw UsageError("--nr must be at least 1");

  if (!(cfg.delta_min < cfg.delta_max)) throw UsageError("delta grid needs delta-min < delta-max");
  if (cfg.delta_points < 2) throw UsageError("delta grid needs at least 2 points");
  if (!(cfg.delta_min > -1.0)) throw UsageError("delta must stay above -1 (coupling must remain positive)");
  if (!cfg.allow_beyond && cfg.delta_max > 1.0)
    throw UsageError("delta grid exceeds 1; pass --allow-beyond to sweep past the correctable range");

  if (cfg.n_t < 1) throw UsageError("--nt must be at least 1");
  for (long long n : cfg.n_list)
    if (n <= 6 * cfg.n_t) throw UsageError("every N must exceed 6*N_t = " + std::to_string(6 * cfg.n_t));
  if (cfg.n_list.empty()) {
    const long long lo = cfg.n_min ? cfg.n_min : 6 * cfg.n_t + 1;
    if (lo <= 6 * cfg.n_t) throw UsageError("--n-min must exceed 6*N_t = " + std::to_string(6 * cfg.n_t));
    if (!(lo < cfg.n_max)) throw UsageError("measurement grid needs n-min < n-max");
    if (cfg.n_points < 2) throw UsageError("measurement grid needs at least 2 points");
  }

  if (!(cfg.t2_ms > 0.0)) throw UsageError("--t2-ms must be positive");
  try {
    cfg.timing.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

std::vector<double> delta_grid(const RunConfig &cfg) {
  std::vector<double> grid(static_cast<std::size_t>(cfg.delta_points));
  const double span = cfg.delta_points - 1;
  for (int i = 0; i < cfg.delta_points; ++i)
    grid[static_cast<std::size_t>(i)] = (cfg.delta_min * (span - i) + cfg.delta_max * i) / span;
  return grid;
}

std::vector<long long> measurement_grid(const RunConfig &cfg) {
  if (!cfg.n_list.empty()) return cfg.n_list;
  const double lo = static_cast<double>(cfg.n_min ? cfg.n_min : 6 * cfg.n_t + 1);
  const double hi = static_cast<double>(cfg.n_max);
  std::set<long long> pts;
  for (int i = 0; i < cfg.n_points; ++i) {
    const double f = static_cast<double>(i) / (cfg.n_points - 1);
    pts.insert(std::llround(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))));
  }
  return {pts.begin(), pts.end()};
}

std::string params_line(const RunConfig &cfg) {
  std::string s = "# params: command=" + cfg.command + " levels=" + join_list(cfg.levels) +
                  " nr=" + std::to_string(cfg.slices);
  if (uses_delta_grid(cfg.command))
    s += " delta_min=" + csv::format_real(cfg.delta_min) + " delta_max=" + csv::format_real(cfg.delta_max) +
         " points=" + std::to_string(cfg.delta_points) + " allow_beyond=" + (cfg.allow_beyond ? "1" : "0");
  if (uses_table(cfg.command)) {
    s += " exchange_table=" + (cfg.exchange_table.empty() ? std::string("builtin") : cfg.exchange_table);
    if (cfg.target_separation_nm) s += " target_separation_nm=" + csv::format_real(*cfg.target_separation_nm);
  }
  if (uses_measurements(cfg.command)) {
    s += " nt=" + std::to_string(cfg.n_t);
    if (!cfg.n_list.empty())
      s += " n_list=" + join_list(cfg.n_list);
    else
      s += " n_min=" + std::to_string(cfg.n_min ? cfg.n_min : 6 * cfg.n_t + 1) + " n_max=" +
           std::to_string(cfg.n_max) + " n_points=" + std::to_string(cfg.n_points);
  }
  if (uses_timing(cfg.command))
    s += " t_pi_1q_ns=" + csv::format_real(cfg.timing.t_pi_1q_ns) +
         " t_quarter_2q_ns=" + csv::format_real(cfg.timing.t_quarter_2q_ns) +
         " j_ref_ueV=" + csv::format_real(cfg.timing.j_ref_ueV);
  if (cfg.command == "time-error" || cfg.command == "make-figures") s += " t2_ms=" + csv::format_real(cfg.t2_ms);
  return s;
}

}  // namespace robustcnot::cli
