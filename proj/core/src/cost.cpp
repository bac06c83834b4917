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

#include "robustcnot/cost.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "robustcnot/csv.hpp"
#include "robustcnot/errors.hpp"

namespace robustcnot::cost {

namespace {

constexpr double kPi = std::numbers::pi;

double rotation_time(const pulse::SingleQubitRotation &r, const TimingModel &t) {
  return t.t_pi_1q_ns * std::abs(r.angle) / kPi;
}

}  // namespace

void TimingModel::validate() const {
  if (!(t_pi_1q_ns > 0.0) || !(t_quarter_2q_ns > 0.0) || !(j_ref_ueV > 0.0) || !(hbar_eVs > 0.0))
    throw std::invalid_argument("timing parameters must be positive");
  const double physical = two_qubit_unit_time(j_ref_ueV, hbar_eVs);
  if (std::abs(t_quarter_2q_ns - physical) > 0.01 * physical)
    throw std::invalid_argument("two-qubit unit time " + csv::format_real(t_quarter_2q_ns) +
                                " ns is inconsistent with J_ref (expected " + csv::format_real(physical) + " ns)");
}

TimingModel TimingModel::at_coupling(double j_ueV) const {
  if (!(j_ueV > 0.0)) throw std::invalid_argument("coupling must be positive");
  TimingModel out = *this;
  out.t_quarter_2q_ns = t_quarter_2q_ns * j_ref_ueV / j_ueV;
  out.j_ref_ueV = j_ueV;
  return out;
}

GateCounts count_recurrence(int level, int slices) {
  if (level < 0) throw std::invalid_argument("implementation level must be non-negative");
  if (slices < 1) throw std::invalid_argument("slice count must be at least 1");
  if (level == 0) return {6, 6, 2};

  const auto nr = static_cast<std::uint64_t>(slices);
  std::uint64_t n = 16;
  std::uint64_t n2 = 10;
  for (int i = 2; i <= level; ++i) {
    n = 10 * nr * (n + 2) + 6;
    n2 *= 10 * nr;
  }
  return {n, n + 4, n2};
}

Census census(const pulse::PulseSeq &seq) {
  Census c;
  for (const auto &step : seq.steps()) {
    if (std::holds_alternative<pulse::SingleQubitRotation>(step))
      ++c.n_1q;
    else if (std::holds_alternative<pulse::HeisenbergEvolution>(step))
      ++c.n_2q;
    else
      c.n_1q += std::get<pulse::ParallelGroup>(step).members.size();
  }
  return c;
}

double two_qubit_unit_time(double j_ueV, double hbar_eVs) {
  if (!(j_ueV > 0.0)) throw std::invalid_argument("coupling must be positive");
  const double j_zz_eV = 2.0 * j_ueV * 1e-6;
  const double per_evolution_s = (kPi / 8.0) * hbar_eVs / j_zz_eV;
  return 2.0 * per_evolution_s * 1e9;
}

double total_zz_angle(int level, int slices) {
  switch (level) {
    case 0:
      return kPi / 2;
    case 1:
      return 4.5 * kPi;
    case 2:
      return 4.5 * kPi + 40.0 * kPi * slices;
    default:
      return pulse::build_level(kPi / 2, level, slices).recompute_zz_angle();
  }
}

int infer_nr(double level2_two_qubit_ns, const TimingModel &timing) {
  const double level1_ns = total_zz_angle(1, 1) / (kPi / 4) * timing.t_quarter_2q_ns;
  if (!(level2_two_qubit_ns > level1_ns))
    throw std::invalid_argument("level-2 two-qubit time must exceed the level-1 time");
  const double quarters = level2_two_qubit_ns / timing.t_quarter_2q_ns;
  const double estimate = (quarters / 4.0 - 4.5) / 40.0;
  const int nr = std::max(1, static_cast<int>(std::lround(estimate)));
  const double predicted = total_zz_angle(2, nr) / (kPi / 4) * timing.t_quarter_2q_ns;
  if (std::abs(predicted - level2_two_qubit_ns) > 0.01 * level2_two_qubit_ns)
    throw InferenceError("no integer slice count reproduces " + csv::format_real(level2_two_qubit_ns) + " ns");
  return nr;
}

CostReport schedule_time(const pulse::PulseSeq &seq, const TimingModel &timing) {
  CostReport r;
  r.level = seq.level();
  r.slices = seq.slices();
  for (const auto &step : seq.steps()) {
    if (const auto *sq = std::get_if<pulse::SingleQubitRotation>(&step)) {
      ++r.n_1q;
      r.t_1q_ns += rotation_time(*sq, timing);
    } else if (const auto *ev = std::get_if<pulse::HeisenbergEvolution>(&step)) {
      ++r.n_2q;
      r.t_2q_ns += ev->zz_angle / (kPi / 4) * timing.t_quarter_2q_ns;
    } else {
      const auto &g = std::get<pulse::ParallelGroup>(step);
      double slowest = 0.0;
      for (const auto &m : g.members) slowest = std::max(slowest, rotation_time(m, timing));
      r.n_1q += g.members.size();
      r.t_1q_ns += slowest;
    }
  }
  r.t_total_ns = r.t_1q_ns + r.t_2q_ns;
  r.recurrence_t_1q_ns = static_cast<double>(count_recurrence(r.level, r.slices).n_1q) * timing.t_pi_1q_ns;
  return r;
}

std::string csv_header() { return "level,N_r,n_1q,n_2q,t_1q_ns,t_2q_ns,t_total_ns"; }

std::string csv_row(const CostReport &r) {
  return csv::join({std::to_string(r.level), std::to_string(r.slices), std::to_string(r.n_1q),
                    std::to_string(r.n_2q), csv::format_real(r.t_1q_ns), csv::format_real(r.t_2q_ns),
                    csv::format_real(r.t_total_ns)});
}

}  // namespace robustcnot::cost
