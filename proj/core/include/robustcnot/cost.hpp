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

#ifndef ROBUSTCNOT_COST_HPP
#define ROBUSTCNOT_COST_HPP

#include <array>
#include <cstdint>
#include <string>

#include "robustcnot/pulse.hpp"

/// Gate counting and duration accounting for CNOT pulse sequences.
namespace robustcnot::cost {

/// Durations that drive the scheduler.
struct TimingModel {
  double t_pi_1q_ns = 40.0;        ///< single-qubit rotation by π (and the Hadamard)
  double t_quarter_2q_ns = 1.96;   ///< isolated π/4 ZZ rotation at the reference coupling
  double j_ref_ueV = 0.132;        ///< reference exchange coupling
  double hbar_eVs = 6.58211915e-16;

  /// Throws std::invalid_argument on non-positive durations or if
  /// t_quarter_2q_ns is more than 1% away from two_qubit_unit_time(j_ref_ueV).
  void validate() const;

  /// Same model with the two-qubit unit time rescaled to a coupling of `j_ueV`.
  TimingModel at_coupling(double j_ueV) const;
};

struct GateCounts {
  std::uint64_t n = 0;     ///< single-qubit gates in the robust ZZ interaction
  std::uint64_t n_1q = 0;  ///< single-qubit gates in the whole CNOT
  std::uint64_t n_2q = 0;  ///< two-qubit gates in the whole CNOT

  friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// Closed-form counts: n_1 = 16, n_i = 10·N_r·(n_{i-1} + 2) + 6,
/// n_i^1q = n_i + 4, n_i^2q = 10^i · N_r^(i-1). Level 0 is the bare CNOT
/// census (6, 6, 2).
GateCounts count_recurrence(int level, int slices);

/// Gate census taken directly from a sequence (parallel members counted individually).
struct Census {
  std::uint64_t n_1q = 0;
  std::uint64_t n_2q = 0;
};
Census census(const pulse::PulseSeq &seq);

/// Duration of one isolated π/4 ZZ rotation: two Heisenberg evolutions of
/// J_ZZ·t/ħ = π/8 each, with J_ZZ = 2J. Throws std::invalid_argument for J <= 0.
double two_qubit_unit_time(double j_ueV, double hbar_eVs = TimingModel{}.hbar_eVs);

/// Nominal ZZ angle of the π/2 core pulse: π/2, 4.5π, 4.5π + 40π·N_r for
/// levels 0-2; higher levels are summed from the built sequence.
double total_zz_angle(int level, int slices);

/// Recovers the slice count from a level-2 two-qubit time. Throws
/// InferenceError when no integer slice count reproduces the input within 1%.
int infer_nr(double level2_two_qubit_ns, const TimingModel &timing = {});

struct CostReport {
  int level = 0;
  int slices = 1;
  std::uint64_t n_1q = 0;
  std::uint64_t n_2q = 0;
  double t_1q_ns = 0.0;
  double t_2q_ns = 0.0;
  double t_total_ns = 0.0;
  /// Single-qubit time from the closed-form gate count at one π-rotation per gate.
  double recurrence_t_1q_ns = 0.0;
};

/// Single-qubit steps cost t_pi·|angle|/π, a parallel group costs its slowest
/// member, a Heisenberg evolution costs zz_angle/(π/4)·t_quarter. Single- and
/// two-qubit steps never overlap.
CostReport schedule_time(const pulse::PulseSeq &seq, const TimingModel &timing = {});

/// `level,N_r,n_1q,n_2q,t_1q_ns,t_2q_ns,t_total_ns`
std::string csv_header();
std::string csv_row(const CostReport &report);

/// Reference gate-time table (ns) for the default timing model with N_r = 8.
struct ReferenceTimes {
  int level;
  double t_1q_ns;
  double t_2q_ns;
  double t_total_ns;
};
inline constexpr std::array<ReferenceTimes, 3> kReferenceTimes{{
    {0, 180.0, 3.92, 183.92},
    {1, 716.0, 35.28, 751.28},
    {2, 53256.80, 2544.08, 55800.88},
}};

}  // namespace robustcnot::cost

#endif  // ROBUSTCNOT_COST_HPP
