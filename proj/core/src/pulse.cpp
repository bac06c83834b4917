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

#include "robustcnot/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "robustcnot/errors.hpp"

namespace robustcnot::pulse {

namespace {

using su4::Matrix2;
using su4::TwoQubitOperator;

constexpr double kPi = std::numbers::pi;

Matrix2 axis_generator(Axis axis) {
  switch (axis) {
    case Axis::X:
      return su4::pauli_matrix(su4::Pauli::X);
    case Axis::Y:
      return su4::pauli_matrix(su4::Pauli::Y);
    case Axis::Z:
      return su4::pauli_matrix(su4::Pauli::Z);
    case Axis::H:
      return (su4::pauli_matrix(su4::Pauli::X) + su4::pauli_matrix(su4::Pauli::Z)) / std::numbers::sqrt2;
  }
  throw std::invalid_argument("invalid rotation axis");
}

TwoQubitOperator embed(Qubit q, const Matrix2 &m) {
  return q == Qubit::control ? TwoQubitOperator::kron(m, Matrix2::Identity())
                             : TwoQubitOperator::kron(Matrix2::Identity(), m);
}

void check_parallel(const ParallelGroup &g) {
  bool seen_control = false;
  bool seen_target = false;
  for (const auto &m : g.members) {
    bool &seen = m.qubit == Qubit::control ? seen_control : seen_target;
    if (seen) throw std::invalid_argument("parallel group members must act on distinct qubits");
    seen = true;
  }
}

double zz_contribution(const PulseStep &step) {
  if (const auto *ev = std::get_if<HeisenbergEvolution>(&step)) return ev->zz_angle;
  return 0.0;
}

SingleQubitRotation z_pi(Qubit q, double sign = 1.0) { return {q, Axis::Z, sign * kPi}; }

}  // namespace

PulseSeq::PulseSeq(int level, int slices) { set_metadata(level, slices); }

void PulseSeq::set_metadata(int level, int slices) {
  if (level < 0) throw std::invalid_argument("implementation level must be non-negative");
  if (slices < 1) throw std::invalid_argument("slice count must be at least 1");
  level_ = level;
  slices_ = slices;
}

void PulseSeq::push(const PulseStep &step) {
  if (const auto *ev = std::get_if<HeisenbergEvolution>(&step)) {
    if (!(ev->zz_angle > 0.0) || !std::isfinite(ev->zz_angle))
      throw std::invalid_argument("Heisenberg evolution needs a positive, finite zz_angle");
  } else if (const auto *g = std::get_if<ParallelGroup>(&step)) {
    check_parallel(*g);
  }
  zz_angle_ += zz_contribution(step);
  steps_.push_back(step);
}

void PulseSeq::append(const PulseSeq &other) {
  steps_.reserve(steps_.size() + other.steps_.size());
  for (const auto &s : other.steps_) {
    zz_angle_ += zz_contribution(s);
    steps_.push_back(s);
  }
}

double PulseSeq::recompute_zz_angle() const {
  double total = 0.0;
  for (const auto &s : steps_) total += zz_contribution(s);
  return total;
}

ErrorModel::ErrorModel(double delta) : delta_(delta) {
  if (!std::isfinite(delta) || !(delta > -1.0))
    throw std::invalid_argument("fractional error must be finite and > -1 (coupling must stay positive)");
}

double bb1_phase(double theta) { return std::acos(-theta / (4.0 * kPi)); }

PulseSeq build_isolated_zz(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("isolated ZZ angle must be positive");
  PulseSeq seq;
  seq.push(z_pi(Qubit::control));
  seq.push(HeisenbergEvolution{theta / 2});
  seq.push(z_pi(Qubit::control));
  seq.push(HeisenbergEvolution{theta / 2});
  return seq;
}

PulseSeq build_tilted(double tilt, const PulseSeq &inner) {
  if (tilt == 0.0) return inner;
  PulseSeq seq(inner.level(), inner.slices());
  seq.push(SingleQubitRotation{Qubit::target, Axis::Y, tilt});
  seq.append(inner);
  seq.push(SingleQubitRotation{Qubit::target, Axis::Y, -tilt});
  return seq;
}

PulseSeq build_bb1(double theta, const ConstituentBuilder &constituent) {
  if (!(theta > 0.0) || theta > 2.0 * kPi) throw std::invalid_argument("BB1 angle must lie in (0, 2π]");
  const double phi = bb1_phase(theta);
  PulseSeq seq;
  seq.append(constituent(theta / 2, 0.0));
  seq.append(constituent(kPi, phi));
  seq.append(constituent(2.0 * kPi, 3.0 * phi));
  seq.append(constituent(kPi, phi));
  seq.append(constituent(theta / 2, 0.0));
  return seq;
}

PulseSeq build_level(double theta, int level, int slices) {
  if (level < 0) throw std::invalid_argument("implementation level must be non-negative");
  if (level > kMaxLevel) throw UnsupportedError("implementation level " + std::to_string(level) + " exceeds cap " +
                                                std::to_string(kMaxLevel));
  if (slices < 1) throw std::invalid_argument("slice count must be at least 1");

  PulseSeq seq;
  if (level == 0) {
    seq = build_isolated_zz(theta);
  } else if (level == 1) {
    seq = build_bb1(theta, [](double angle, double tilt) { return build_tilted(tilt, build_isolated_zz(angle)); });
  } else {
    seq = build_bb1(theta, [level, slices](double angle, double tilt) {
      const PulseSeq inner = build_level(angle / (2.0 * slices), level - 1, slices);
      PulseSeq reisolated;
      for (int s = 0; s < slices; ++s) {
        reisolated.push(z_pi(Qubit::target));
        reisolated.append(inner);
        reisolated.push(z_pi(Qubit::target, -1.0));
        reisolated.append(inner);
      }
      return build_tilted(tilt, reisolated);
    });
  }
  seq.set_metadata(level, slices);
  return seq;
}

PulseSeq build_cnot(int level, int slices) {
  const PulseSeq core = build_level(kPi / 2, level, slices);
  const SingleQubitRotation hadamard{Qubit::target, Axis::H, kPi};

  PulseSeq seq(level, slices);
  seq.push(hadamard);
  seq.append(core);
  seq.push(ParallelGroup{{{Qubit::control, Axis::Z, -kPi / 2}, {Qubit::target, Axis::Z, -kPi / 2}}});
  seq.push(hadamard);
  return seq;
}

TwoQubitOperator step_matrix(const SingleQubitRotation &r) {
  return embed(r.qubit, su4::rotation_1q(axis_generator(r.axis), r.angle));
}

TwoQubitOperator step_matrix(const PulseStep &step, const ErrorModel &err) {
  if (const auto *r = std::get_if<SingleQubitRotation>(&step)) return step_matrix(*r);
  if (const auto *ev = std::get_if<HeisenbergEvolution>(&step))
    return su4::heisenberg_evolution(0.5 * ev->zz_angle * err.scale());
  const auto &group = std::get<ParallelGroup>(step);
  TwoQubitOperator u;
  for (const auto &m : group.members) u *= step_matrix(m);
  return u;
}

TwoQubitOperator simulate(const PulseSeq &seq, const ErrorModel &err) {
  TwoQubitOperator u;
  for (const auto &step : seq.steps()) u *= step_matrix(step, err);
  return u;
}

double cnot_error(const PulseSeq &cnot_seq, const ErrorModel &err) {
  return su4::infidelity(simulate(cnot_seq, err), su4::cnot());
}

double cnot_error(int level, double delta, int slices) {
  return cnot_error(build_cnot(level, slices), ErrorModel(delta));
}

}  // namespace robustcnot::pulse
