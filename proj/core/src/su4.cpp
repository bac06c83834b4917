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

#include "robustcnot/su4.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robustcnot::su4 {

namespace {

constexpr Complex kI{0.0, 1.0};

// popcount parity of positions where both factors are non-identity and differ
bool strings_anticommute(const PauliString &a, const PauliString &b) {
  auto clash = [](Pauli p, Pauli q) { return p != Pauli::I && q != Pauli::I && p != q; };
  int n = (clash(a.control, b.control) ? 1 : 0) + (clash(a.target, b.target) ? 1 : 0);
  return n % 2 == 1;
}

}  // namespace

Pauli parse_pauli(char label) {
  switch (label) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("unknown Pauli label '") + label + "'");
  }
}

char pauli_label(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  throw std::invalid_argument("invalid Pauli value");
}

Matrix2 pauli_matrix(Pauli p) {
  Matrix2 m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

TwoQubitOperator TwoQubitOperator::kron(const Matrix2 &control, const Matrix2 &target) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m.block<2, 2>(2 * i, 2 * j) = control(i, j) * target;
  return TwoQubitOperator(m);
}

double TwoQubitOperator::max_abs_diff(const TwoQubitOperator &other) const {
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

bool TwoQubitOperator::is_unitary(double tol) const {
  return (m_.adjoint() * m_ - Matrix4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

PauliString PauliString::parse(std::string_view label) {
  if (label.size() != 2) throw std::invalid_argument("Pauli string must have two labels: '" + std::string(label) + "'");
  return PauliString{parse_pauli(label[0]), parse_pauli(label[1])};
}

TwoQubitOperator PauliString::matrix() const { return pauli_kron(control, target); }

bool PauliString::anticommutes_with(const PauliString &other) const { return strings_anticommute(*this, other); }

PauliAxis::PauliAxis(PauliString primary, PauliString secondary, double tilt)
    : primary_(primary), secondary_(secondary), tilt_(tilt) {
  if (!primary.anticommutes_with(secondary))
    throw std::invalid_argument("tilted axis requires anticommuting Pauli strings");
}

TwoQubitOperator PauliAxis::generator() const {
  if (!secondary_) return primary_.matrix();
  return Complex(std::cos(tilt_)) * primary_.matrix() + Complex(std::sin(tilt_)) * secondary_->matrix();
}

TwoQubitOperator pauli_kron(Pauli p, Pauli q) { return TwoQubitOperator::kron(pauli_matrix(p), pauli_matrix(q)); }

TwoQubitOperator pauli_kron(char p, char q) { return pauli_kron(parse_pauli(p), parse_pauli(q)); }

TwoQubitOperator rotation(const PauliAxis &axis, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return TwoQubitOperator(c * Matrix4::Identity() - kI * s * axis.generator().matrix());
}

Matrix2 rotation_1q(const Matrix2 &generator, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return c * Matrix2::Identity() - kI * s * generator;
}

TwoQubitOperator heisenberg_evolution(double phase) {
  const Complex triplet = std::exp(-kI * phase);
  const Complex singlet = std::exp(3.0 * kI * phase);
  // singlet projector has 1/2 on the {|01>,|10>} block with -1/2 off-diagonal
  const Complex mix = 0.5 * (triplet + singlet);
  const Complex anti = 0.5 * (triplet - singlet);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = triplet;
  m(3, 3) = triplet;
  m(1, 1) = mix;
  m(2, 2) = mix;
  m(1, 2) = anti;
  m(2, 1) = anti;
  return TwoQubitOperator(m);
}

double fidelity(const TwoQubitOperator &u, const TwoQubitOperator &v_ideal) {
  const double norm = (v_ideal.matrix().adjoint() * v_ideal.matrix()).trace().real();
  if (!(norm > 0.0)) throw std::invalid_argument("fidelity: ideal operator has zero norm");
  return std::abs((u.matrix().adjoint() * v_ideal.matrix()).trace()) / norm;
}

double infidelity(const TwoQubitOperator &u, const TwoQubitOperator &v_ideal) {
  const double norm = v_ideal.matrix().squaredNorm();
  if (!(norm > 0.0)) throw std::invalid_argument("infidelity: ideal operator has zero norm");
  const Complex overlap = (u.matrix().adjoint() * v_ideal.matrix()).trace();
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? std::conj(overlap) / mag : Complex(1.0);
  return (u.matrix() - phase * v_ideal.matrix()).squaredNorm() / (2.0 * norm);
}

bool equal_up_to_global_phase(const TwoQubitOperator &u, const TwoQubitOperator &v, double tol) {
  const Complex overlap = (v.matrix().adjoint() * u.matrix()).trace();
  const double mag = std::abs(overlap);
  if (mag == 0.0) return false;
  return (u.matrix() - (overlap / mag) * v.matrix()).cwiseAbs().maxCoeff() <= tol;
}

TwoQubitOperator cnot() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return TwoQubitOperator(m);
}

}  // namespace robustcnot::su4
