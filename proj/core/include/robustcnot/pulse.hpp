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

#ifndef ROBUSTCNOT_PULSE_HPP
#define ROBUSTCNOT_PULSE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robustcnot/su4.hpp"

/// Pulse sequences for the exchange-coupled CNOT and their simulation under a
/// fractional coupling error.
///
/// Steps are stored in operator-product order: the sequence [A, B, C] denotes
/// the operator A·B·C, so C acts first on a state. Every builder follows the
/// same convention, which keeps the construction code a literal transcription
/// of the operator identities it implements.
namespace robustcnot::pulse {

enum class Qubit : std::uint8_t { control, target };

/// Rotation axes for single-qubit steps. `H` is the Hadamard axis (X+Z)/√2;
/// a rotation by π about it is the Hadamard gate up to a global phase of -i.
enum class Axis : std::uint8_t { X, Y, Z, H };

struct SingleQubitRotation {
  Qubit qubit = Qubit::control;
  Axis axis = Axis::Z;
  double angle = 0.0;  // radians

  friend bool operator==(const SingleQubitRotation &, const SingleQubitRotation &) = default;
};

/// Free evolution under the Heisenberg coupling for as long as it takes to
/// contribute `zz_angle` of ZZ rotation at the nominal coupling. Two such
/// evolutions interleaved with Z_π on the control give exp(-i (θ/2) ZZ) with
/// θ equal to the sum of their zz_angles; a single evolution therefore has
/// Heisenberg phase J·t/ħ = zz_angle / 2.
struct HeisenbergEvolution {
  double zz_angle = 0.0;  // radians, > 0

  friend bool operator==(const HeisenbergEvolution &, const HeisenbergEvolution &) = default;
};

/// Single-qubit rotations executed simultaneously on distinct qubits.
struct ParallelGroup {
  std::vector<SingleQubitRotation> members;

  friend bool operator==(const ParallelGroup &, const ParallelGroup &) = default;
};

using PulseStep = std::variant<SingleQubitRotation, HeisenbergEvolution, ParallelGroup>;

/// Ordered list of pulse steps plus the construction metadata used by the
/// cost model: concatenation level and re-isolation slice count.
class PulseSeq {
 public:
  PulseSeq() = default;
  PulseSeq(int level, int slices);

  /// Validates step invariants; throws std::invalid_argument.
  void push(const PulseStep &step);
  void append(const PulseSeq &other);

  std::span<const PulseStep> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  int level() const { return level_; }
  int slices() const { return slices_; }
  void set_metadata(int level, int slices);

  /// Nominal total ZZ rotation angle, accumulated as steps are pushed.
  double nominal_zz_angle() const { return zz_angle_; }
  /// Same quantity re-derived by walking the step list.
  double recompute_zz_angle() const;

  friend bool operator==(const PulseSeq &, const PulseSeq &) = default;

 private:
  std::vector<PulseStep> steps_;
  double zz_angle_ = 0.0;
  int level_ = 0;
  int slices_ = 1;
};

/// Fractional coupling error Δ = J_actual / J_assumed - 1.
class ErrorModel {
 public:
  ErrorModel() = default;
  /// Throws std::invalid_argument unless Δ > -1 and finite.
  explicit ErrorModel(double delta);

  double delta() const { return delta_; }
  double scale() const { return 1.0 + delta_; }

 private:
  double delta_ = 0.0;
};

/// Highest implementation level the builders accept.
inline constexpr int kMaxLevel = 3;
/// Slice count recovered from the reference gate-time table.
inline constexpr int kDefaultSlices = 8;

/// Produces the constituent pulse for a BB1 element of the given rotation
/// angle and tilt towards ZX.
using ConstituentBuilder = std::function<PulseSeq(double angle, double tilt)>;

/// BB1 phase φ = arccos(-θ / 4π).
double bb1_phase(double theta);

/// (Z_π on control) E (Z_π on control) E with each E contributing θ/2.
/// Simulates to -exp(-i (θ/2)(1+Δ) ZZ). Throws std::invalid_argument for θ <= 0.
PulseSeq build_isolated_zz(double theta);

/// (Y_tilt on target) · inner · (Y_-tilt on target). A zero tilt returns
/// `inner` unchanged, without identity gates.
PulseSeq build_tilted(double tilt, const PulseSeq &inner);

/// (θ/2)_0 π_φ 2π_{3φ} π_φ (θ/2)_0 with φ = bb1_phase(θ).
/// Throws std::invalid_argument for θ outside (0, 2π].
PulseSeq build_bb1(double theta, const ConstituentBuilder &constituent);

/// ZZ rotation by θ at the given implementation level. Level 0 is the bare
/// isolated pulse; level 1 is BB1 over bare pulses; level k >= 2 is BB1 whose
/// constituents are re-isolated level k-1 pulses: `slices` repetitions of
/// W·P·W†·P with P the level k-1 pulse for angle/(2·slices) and W = Z_π on
/// the target.
/// Throws UnsupportedError above kMaxLevel, std::invalid_argument for bad
/// arguments.
PulseSeq build_level(double theta, int level, int slices = kDefaultSlices);

/// Full CNOT: H(target) · U_ZZ(π/2) · [Z_{-π/2}(control) ∥ Z_{-π/2}(target)] · H(target).
PulseSeq build_cnot(int level, int slices = kDefaultSlices);

su4::TwoQubitOperator step_matrix(const SingleQubitRotation &r);
su4::TwoQubitOperator step_matrix(const PulseStep &step, const ErrorModel &err);

/// Left-to-right product of step matrices; every Heisenberg evolution runs at
/// (1 + Δ) times its nominal phase, single-qubit steps are exact.
su4::TwoQubitOperator simulate(const PulseSeq &seq, const ErrorModel &err);

/// 1 - F of a CNOT sequence against the canonical CNOT.
double cnot_error(const PulseSeq &cnot_seq, const ErrorModel &err);
double cnot_error(int level, double delta, int slices = kDefaultSlices);

/// Line-oriented text form:
///   # pulseseq level=<L> slices=<N>
///   SQ <control|target> <X|Y|Z|H> <angle>
///   EV <zz_angle>
///   PAR <k>   (followed by k SQ lines)
/// Angles are written with round-trip precision.
std::string to_text(const PulseSeq &seq);
/// Throws FormatError with the offending line number.
PulseSeq parse_text(std::string_view text, const std::string &source = "<pulseseq>");

}  // namespace robustcnot::pulse

#endif  // ROBUSTCNOT_PULSE_HPP
