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

#ifndef ROBUSTCNOT_CHARPLAN_HPP
#define ROBUSTCNOT_CHARPLAN_HPP

#include <string>
#include <vector>

#include "robustcnot/cost.hpp"
#include "robustcnot/exchange.hpp"
#include "robustcnot/pulse.hpp"

/// Measurement budgets for exchange characterization and the error/time
/// trade-off once decoherence is included.
namespace robustcnot::charplan {

/// Bound on the fractional frequency uncertainty from N_t time points with
/// N_e repetitions each, evaluated at equality: 4 / (N_t √N_e).
double freq_uncertainty(long long n_t, long long n_e);

/// Fractional uncertainty of the characterized isotropic exchange coupling
/// for N total measurements: 4√6 / (N_t √(N - 6 N_t)). Requires N > 6 N_t.
double exchange_uncertainty(long long n_total, long long n_t);

/// Smallest N with exchange_uncertainty(N, N_t) <= target.
long long min_measurements(double target, long long n_t);

/// Worst-case fractional error after characterization, rounded convention: Δ_c = δ.
double delta_c(double frac_uncertainty);
/// Exact worst case with J_c = (1 - δ) J: δ / (1 - δ); +inf for δ >= 1.
double delta_c_exact(double frac_uncertainty);

struct CharacterizationPlan {
  long long n_t = 0;
  long long n_e = 0;
  long long n_total = 0;
  double frac_uncertainty = 0.0;

  /// Three input states for the isotropic case: N = 6 (N_t + N_e).
  static CharacterizationPlan isotropic(long long n_t, long long n_e);
};

/// Largest Δ_c fed into the gate simulation. Beyond Δ = 1 the composite
/// pulses are no longer a correction, so a budget that poor is reported at the
/// correctability edge.
inline constexpr double kMaxCharacterizedDelta = 1.0;

struct MeasurementPoint {
  long long n_total;
  double frac_uncertainty;
  double delta_c;        ///< capped at kMaxCharacterizedDelta
  double delta_c_exact;
  int level;
  double error;
};

/// Throws std::invalid_argument if any N <= 6 N_t.
std::vector<MeasurementPoint> error_vs_measurements(int level, const std::vector<long long> &n_grid, long long n_t,
                                                    int slices = pulse::kDefaultSlices);

struct DecoherenceModel {
  double t2_ms = 60.0;
};

/// 1 - (1 - ε_sys)·exp(-t/T₂).
double error_with_decoherence(double error_sys, double t_gate_ns, const DecoherenceModel &dec = {});

enum class Strategy { uncorrected, composite, characterized };
std::string strategy_name(Strategy s);

struct TimeErrorPoint {
  double t_total_ns;
  int level;
  double separation_nm;
  double error;          ///< including dephasing
  Strategy strategy;
  double delta;          ///< Δ₀ or Δ_c driving the systematic error
  double error_sys;      ///< systematic only
};

struct TimeErrorOptions {
  int slices = pulse::kDefaultSlices;
  int uncharacterized_sites = 2;  ///< rows beyond the target for levels 0-2
  int characterized_sites = 6;    ///< rows beyond the target for the characterized strategy
  int characterized_level = 1;
  double characterized_delta = 0.1;
};

/// Error against total gate time for rows beyond the target separation.
/// Uncharacterized gates are timed at J₀; characterized gates at
/// J_c = J / (1 + Δ_c).
std::vector<TimeErrorPoint> time_error_points(const xchg::ExchangeTable &table, const cost::TimingModel &timing,
                                              const DecoherenceModel &dec, const TimeErrorOptions &opt = {});

}  // namespace robustcnot::charplan

#endif  // ROBUSTCNOT_CHARPLAN_HPP
