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

#ifndef ROBUSTCNOT_EXCHANGE_HPP
#define ROBUSTCNOT_EXCHANGE_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robustcnot/pulse.hpp"

/// Tabulated exchange couplings J(separation) and the fractional errors they
/// imply for a gate calibrated at the target separation.
namespace robustcnot::xchg {

struct ExchangeRow {
  double separation_nm = 0.0;
  double j_ueV = 0.0;
  std::string tag;  ///< free-form; "target" marks the calibration row

  friend bool operator==(const ExchangeRow &, const ExchangeRow &) = default;
};

/// Rows sorted strictly by separation with J > 0; the target separation
/// matches one row exactly and defines J₀.
struct ExchangeTable {
  std::vector<ExchangeRow> rows;
  double target_separation_nm = 0.0;
  std::string direction;  ///< lattice direction label, e.g. "[100]"
  std::string bias;       ///< optional bias-voltage tag

  /// Throws FormatError (row numbers are 1-based data rows) on violations.
  void validate(const std::string &source = "<table>") const;
  std::size_t target_index() const;
  double j0() const { return rows.at(target_index()).j_ueV; }

  friend bool operator==(const ExchangeTable &, const ExchangeTable &) = default;
};

/// CSV with header `separation_nm,J_ueV[,tag]`; `# direction=...` and
/// `# bias=...` comment lines are picked up as metadata. The target row is
/// the one tagged `target`, or the row at `target_separation_nm` when given.
/// Throws FormatError with the file line number.
ExchangeTable parse_table(std::istream &in, const std::string &source,
                          std::optional<double> target_separation_nm = std::nullopt);
ExchangeTable load_table(const std::filesystem::path &path,
                         std::optional<double> target_separation_nm = std::nullopt);
/// Writes a table that `parse_table` reads back exactly.
void write_table(std::ostream &out, const ExchangeTable &table);

/// Built-in [100] sample: separations 20.634 + k·1.086 nm, k = -2..6. Only
/// the target (J₀ = 0.132 µeV) and the one-site row at 21.720 nm
/// (J/J₀ = 0.51) are anchored values; the remaining rows are tagged
/// `fixture` and exist to exercise the pipeline.
ExchangeTable sample_table();

/// Δ₀ = J/J₀ - 1. Throws std::invalid_argument for J₀ <= 0.
double delta0(double j_ueV, double j0_ueV);

struct SeparationPoint {
  double separation_nm;
  double j_ueV;
  double delta0;
  int level;
  double error;
};

/// CNOT error for every row against the target calibration, in row order.
std::vector<SeparationPoint> fidelity_vs_separation(const ExchangeTable &table, int level,
                                                    int slices = pulse::kDefaultSlices);

}  // namespace robustcnot::xchg

#endif  // ROBUSTCNOT_EXCHANGE_HPP
