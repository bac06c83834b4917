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

#include "robustcnot/charplan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace robustcnot::charplan {

namespace {

// Slack for comparing against a requested uncertainty, so that budgets that
// hit the bound exactly (156 measurements for 10%) are not pushed up by one
// through round-off.
constexpr double kRelSlack = 1e-12;

}  // namespace

double freq_uncertainty(long long n_t, long long n_e) {
  if (n_t < 1 || n_e < 1) throw std::invalid_argument("N_t and N_e must be at least 1");
  return 4.0 / (static_cast<double>(n_t) * std::sqrt(static_cast<double>(n_e)));
}

double exchange_uncertainty(long long n_total, long long n_t) {
  if (n_t < 1) throw std::invalid_argument("N_t must be at least 1");
  if (n_total <= 6 * n_t) throw std::invalid_argument("N must exceed 6 N_t to leave repetitions for phase estimation");
  return 4.0 * std::sqrt(6.0) / (static_cast<double>(n_t) * std::sqrt(static_cast<double>(n_total - 6 * n_t)));
}

long long min_measurements(double target, long long n_t) {
  if (!(target > 0.0)) throw std::invalid_argument("target uncertainty must be positive");
  if (n_t < 1) throw std::invalid_argument("N_t must be at least 1");
  const double scaled = static_cast<double>(n_t) * target;
  auto n = static_cast<long long>(std::ceil(6.0 * static_cast<double>(n_t) + 96.0 / (scaled * scaled)));
  const double limit = target * (1.0 + kRelSlack);
  n = std::max(n, 6 * n_t + 1);
  while (n - 1 > 6 * n_t && exchange_uncertainty(n - 1, n_t) <= limit) --n;
  while (exchange_uncertainty(n, n_t) > limit) ++n;
  return n;
}

double delta_c(double frac_uncertainty) { return frac_uncertainty; }

double delta_c_exact(double frac_uncertainty) {
  if (frac_uncertainty >= 1.0) return std::numeric_limits<double>::infinity();
  return frac_uncertainty / (1.0 - frac_uncertainty);
}

CharacterizationPlan CharacterizationPlan::isotropic(long long n_t, long long n_e) {
  CharacterizationPlan p;
  p.n_t = n_t;
  p.n_e = n_e;
  p.n_total = 6 * (n_t + n_e);
  p.frac_uncertainty = exchange_uncertainty(p.n_total, n_t);
  return p;
}

std::vector<MeasurementPoint> error_vs_measurements(int level, const std::vector<long long> &n_grid, long long n_t,
                                                    int slices) {
  const pulse::PulseSeq seq = pulse::build_cnot(level, slices);
  std::vector<MeasurementPoint> out;
  out.reserve(n_grid.size());
  for (long long n : n_grid) {
    const double frac = exchange_uncertainty(n, n_t);
    const double dc = std::min(delta_c(frac), kMaxCharacterizedDelta);
    out.push_back({n, frac, dc, delta_c_exact(frac), level, pulse::cnot_error(seq, pulse::ErrorModel(dc))});
  }
  return out;
}

double error_with_decoherence(double error_sys, double t_gate_ns, const DecoherenceModel &dec) {
  if (!(dec.t2_ms > 0.0)) throw std::invalid_argument("T2 must be positive");
  if (t_gate_ns < 0.0) throw std::invalid_argument("gate time must be non-negative");
  const double t2_ns = dec.t2_ms * 1e6;
  // 1 - (1 - e) exp(-x) written to keep precision when both terms are tiny
  const double survive_dephasing = std::exp(-t_gate_ns / t2_ns);
  return -std::expm1(-t_gate_ns / t2_ns) + error_sys * survive_dephasing;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::uncorrected:
      return "uncorrected";
    case Strategy::composite:
      return "composite";
    case Strategy::characterized:
      return "characterized";
  }
  return "unknown";
}

std::vector<TimeErrorPoint> time_error_points(const xchg::ExchangeTable &table, const cost::TimingModel &timing,
                                              const DecoherenceModel &dec, const TimeErrorOptions &opt) {
  const std::size_t target = table.target_index();
  const double j0 = table.j0();
  const cost::TimingModel at_j0 = timing.at_coupling(j0);

  std::vector<TimeErrorPoint> out;
  for (int level = 0; level <= 2; ++level) {
    const pulse::PulseSeq seq = pulse::build_cnot(level, opt.slices);
    const double t_total = cost::schedule_time(seq, at_j0).t_total_ns;
    const Strategy strategy = level == 0 ? Strategy::uncorrected : Strategy::composite;
    for (int k = 1; k <= opt.uncharacterized_sites && target + k < table.rows.size(); ++k) {
      const auto &row = table.rows[target + k];
      const double d = xchg::delta0(row.j_ueV, j0);
      const double sys = pulse::cnot_error(seq, pulse::ErrorModel(d));
      out.push_back({t_total, level, row.separation_nm, error_with_decoherence(sys, t_total, dec), strategy, d, sys});
    }
  }

  const pulse::PulseSeq seq = pulse::build_cnot(opt.characterized_level, opt.slices);
  const double sys = pulse::cnot_error(seq, pulse::ErrorModel(opt.characterized_delta));
  for (int k = 1; k <= opt.characterized_sites && target + k < table.rows.size(); ++k) {
    const auto &row = table.rows[target + k];
    const double j_c = row.j_ueV / (1.0 + opt.characterized_delta);
    const double t_total = cost::schedule_time(seq, timing.at_coupling(j_c)).t_total_ns;
    out.push_back({t_total, opt.characterized_level, row.separation_nm, error_with_decoherence(sys, t_total, dec),
                   Strategy::characterized, opt.characterized_delta, sys});
  }
  return out;
}

}  // namespace robustcnot::charplan
