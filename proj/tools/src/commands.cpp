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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "robustcnot/charplan.hpp"
#include "robustcnot/cost.hpp"
#include "robustcnot/csv.hpp"
#include "robustcnot/errors.hpp"
#include "robustcnot/parallel.hpp"
#include "robustcnot/pulse.hpp"

namespace robustcnot::cli {

namespace {

using csv::format_real;

constexpr double kThreshold = 1e-4;

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string(), 0, "cannot open for writing");
  out << text;
  if (!out) throw FormatError(path.string(), 0, "write failed");
}

bool is_default_timing(const cost::TimingModel &t) {
  const cost::TimingModel d;
  return t.t_pi_1q_ns == d.t_pi_1q_ns && t.t_quarter_2q_ns == d.t_quarter_2q_ns && t.j_ref_ueV == d.j_ref_ueV;
}

}  // namespace

xchg::ExchangeTable load_exchange(const RunConfig &cfg) {
  if (cfg.exchange_table.empty()) {
    auto t = xchg::sample_table();
    if (cfg.target_separation_nm) {
      t.target_separation_nm = *cfg.target_separation_nm;
      t.validate("<builtin>");
    }
    return t;
  }
  return xchg::load_table(cfg.exchange_table, cfg.target_separation_nm);
}

std::string cmd_sweep_delta(const RunConfig &cfg) {
  validate(cfg);
  const auto grid = delta_grid(cfg);
  std::ostringstream out;
  out << params_line(cfg) << '\n' << "delta,level,error\n";
  for (int level : cfg.levels) {
    const pulse::PulseSeq seq = pulse::build_cnot(level, cfg.slices);
    const auto errors = parallel_map(
        grid.size(), [&](std::size_t i) { return pulse::cnot_error(seq, pulse::ErrorModel(grid[i])); }, cfg.threads);
    for (std::size_t i = 0; i < grid.size(); ++i)
      out << format_real(grid[i]) << ',' << level << ',' << format_real(errors[i]) << '\n';
  }
  return out.str();
}

std::string cmd_table1(const RunConfig &cfg) {
  validate(cfg);
  const bool check = is_default_timing(cfg.timing);
  std::ostringstream out;
  out << params_line(cfg) << '\n' << cost::csv_header() << '\n';

  std::vector<cost::CostReport> reports;
  for (const auto &ref : cost::kReferenceTimes)
    reports.push_back(cost::schedule_time(pulse::build_cnot(ref.level, cfg.slices), cfg.timing));
  for (const auto &r : reports) out << cost::csv_row(r) << '\n';

  if (check) {
    const int inferred = cost::infer_nr(cost::kReferenceTimes[2].t_2q_ns, cfg.timing);
    out << "# inferred: N_r=" << inferred << " from level-2 two-qubit time "
        << format_real(cost::kReferenceTimes[2].t_2q_ns) << " ns\n";
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto &r = reports[i];
    const auto &ref = cost::kReferenceTimes[i];
    out << "# discrepancy: level=" << r.level << " t_1q_ns=" << format_real(r.t_1q_ns)
        << " reference_t_1q_ns=" << format_real(ref.t_1q_ns)
        << " rel_1q=" << format_real((r.t_1q_ns - ref.t_1q_ns) / ref.t_1q_ns)
        << " recurrence_t_1q_ns=" << format_real(r.recurrence_t_1q_ns)
        << " t_total_ns=" << format_real(r.t_total_ns) << " reference_t_total_ns=" << format_real(ref.t_total_ns)
        << " rel_total=" << format_real((r.t_total_ns - ref.t_total_ns) / ref.t_total_ns) << '\n';
  }
  if (check) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const double diff = std::abs(reports[i].t_2q_ns - cost::kReferenceTimes[i].t_2q_ns);
      if (diff > kTwoQubitTolNs)
        throw ConsistencyError("level " + std::to_string(reports[i].level) + " two-qubit time " +
                               format_real(reports[i].t_2q_ns) + " ns differs from reference " +
                               format_real(cost::kReferenceTimes[i].t_2q_ns) + " ns");
    }
  } else {
    out << "# check: skipped (non-default timing model)\n";
  }
  return out.str();
}

std::string cmd_sweep_separation(const RunConfig &cfg) {
  validate(cfg);
  const auto table = load_exchange(cfg);
  std::ostringstream out;
  out << params_line(cfg) << '\n' << "separation_nm,J_ueV,delta0,level,error\n";
  const auto per_level = parallel_map(
      cfg.levels.size(), [&](std::size_t i) { return xchg::fidelity_vs_separation(table, cfg.levels[i], cfg.slices); },
      cfg.threads);
  for (const auto &points : per_level)
    for (const auto &p : points)
      out << format_real(p.separation_nm) << ',' << format_real(p.j_ueV) << ',' << format_real(p.delta0) << ','
          << p.level << ',' << format_real(p.error) << '\n';
  return out.str();
}

std::string cmd_measurements(const RunConfig &cfg) {
  validate(cfg);
  const auto grid = measurement_grid(cfg);
  std::ostringstream out;
  out << params_line(cfg) << '\n' << "N,delta_frac,delta_c,level,error,threshold,delta_c_exact\n";
  const auto per_level = parallel_map(
      cfg.levels.size(),
      [&](std::size_t i) { return charplan::error_vs_measurements(cfg.levels[i], grid, cfg.n_t, cfg.slices); },
      cfg.threads);
  for (const auto &points : per_level)
    for (const auto &p : points)
      out << p.n_total << ',' << format_real(p.frac_uncertainty) << ',' << format_real(p.delta_c) << ','
          << p.level << ',' << format_real(p.error) << ',' << format_real(kThreshold) << ','
          << format_real(p.delta_c_exact) << '\n';
  return out.str();
}

std::string cmd_time_error(const RunConfig &cfg) {
  validate(cfg);
  const auto table = load_exchange(cfg);
  charplan::TimeErrorOptions opt;
  opt.slices = cfg.slices;
  const auto points = charplan::time_error_points(table, cfg.timing, charplan::DecoherenceModel{cfg.t2_ms}, opt);
  std::ostringstream out;
  out << params_line(cfg) << '\n' << "t_total_ns,level,separation_nm,error,strategy,delta,error_sys\n";
  for (const auto &p : points)
    out << format_real(p.t_total_ns) << ',' << p.level << ',' << format_real(p.separation_nm) << ','
        << format_real(p.error) << ',' << charplan::strategy_name(p.strategy) << ',' << format_real(p.delta) << ','
        << format_real(p.error_sys) << '\n';
  return out.str();
}

std::string cmd_counts(const RunConfig &cfg) {
  validate(cfg);
  std::ostringstream out;
  out << params_line(cfg) << '\n'
      << "level,N_r,n_recurrence,n_1q_recurrence,n_2q_recurrence,n_1q_sequence,n_2q_sequence\n";
  for (int level : cfg.levels) {
    const auto rec = cost::count_recurrence(level, cfg.slices);
    const auto seq = cost::census(pulse::build_cnot(level, cfg.slices));
    out << level << ',' << cfg.slices << ',' << rec.n << ',' << rec.n_1q << ',' << rec.n_2q << ',' << seq.n_1q << ','
        << seq.n_2q << '\n';
  }
  return out.str();
}

std::vector<std::filesystem::path> cmd_make_figures(const RunConfig &cfg, const std::filesystem::path &dir) {
  validate(cfg);
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> files;
  auto with = [&](const char *command) {
    RunConfig c = cfg;
    c.command = command;
    return c;
  };
  files.emplace_back("sweep_delta.csv", cmd_sweep_delta(with("sweep-delta")));
  files.emplace_back("sweep_separation.csv", cmd_sweep_separation(with("sweep-separation")));
  files.emplace_back("measurements.csv", cmd_measurements(with("measurements")));
  files.emplace_back("time_error.csv", cmd_time_error(with("time-error")));
  files.emplace_back("table1.csv", cmd_table1(with("table1")));
  files.emplace_back("counts.csv", cmd_counts(with("counts")));

  std::vector<std::filesystem::path> written;
  for (const auto &[name, text] : files) {
    written.push_back(dir / name);
    write_file(written.back(), text);
  }
  return written;
}

void run(const RunConfig &cfg) {
  validate(cfg);
  if (!cfg.dump_seq.empty()) {
    const int level = *std::max_element(cfg.levels.begin(), cfg.levels.end());
    write_file(cfg.dump_seq, pulse::to_text(pulse::build_cnot(level, cfg.slices)));
  }

  if (cfg.command == "make-figures") {
    cmd_make_figures(cfg, cfg.out == "-" ? std::filesystem::path("figures") : std::filesystem::path(cfg.out));
    return;
  }

  std::string text;
  if (cfg.command == "sweep-delta")
    text = cmd_sweep_delta(cfg);
  else if (cfg.command == "table1")
    text = cmd_table1(cfg);
  else if (cfg.command == "sweep-separation")
    text = cmd_sweep_separation(cfg);
  else if (cfg.command == "measurements")
    text = cmd_measurements(cfg);
  else if (cfg.command == "time-error")
    text = cmd_time_error(cfg);
  else if (cfg.command == "counts")
    text = cmd_counts(cfg);
  else
    throw UsageError("unknown command '" + cfg.command + "'");

  if (cfg.out == "-")
    std::cout << text << std::flush;
  else
    write_file(cfg.out, text);
}

}  // namespace robustcnot::cli
