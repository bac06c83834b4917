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

#ifndef ROBUSTCNOT_SU4_HPP
#define ROBUSTCNOT_SU4_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

/// Dense two-qubit operator algebra.
///
/// Basis ordering is fixed throughout the library as |00>, |01>, |10>, |11>
/// where the first tensor factor is the control qubit and the second is the
/// target. A CNOT in this basis swaps |10> and |11>.
namespace robustcnot::su4 {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Parses one of 'I', 'X', 'Y', 'Z'. Throws std::invalid_argument otherwise.
Pauli parse_pauli(char label);
char pauli_label(Pauli p);
Matrix2 pauli_matrix(Pauli p);

/// 4x4 complex operator on the (control, target) pair.
///
/// Global phases are kept as computed; only `fidelity`, `infidelity` and
/// `equal_up_to_global_phase` ignore them.
class TwoQubitOperator {
 public:
  TwoQubitOperator() : m_(Matrix4::Identity()) {}
  explicit TwoQubitOperator(const Matrix4 &m) : m_(m) {}

  static TwoQubitOperator identity() { return TwoQubitOperator(); }
  static TwoQubitOperator zero() { return TwoQubitOperator(Matrix4::Zero()); }
  /// control ⊗ target
  static TwoQubitOperator kron(const Matrix2 &control, const Matrix2 &target);

  const Matrix4 &matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  TwoQubitOperator adjoint() const { return TwoQubitOperator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }

  /// Largest absolute entrywise difference.
  double max_abs_diff(const TwoQubitOperator &other) const;
  bool approx_equal(const TwoQubitOperator &other, double tol = 1e-10) const {
    return max_abs_diff(other) <= tol;
  }
  bool is_unitary(double tol = 1e-12) const;

  TwoQubitOperator &operator*=(const TwoQubitOperator &rhs) {
    m_ = m_ * rhs.m_;
    return *this;
  }
  friend TwoQubitOperator operator*(const TwoQubitOperator &a, const TwoQubitOperator &b) {
    return TwoQubitOperator(a.m_ * b.m_);
  }
  friend TwoQubitOperator operator*(Complex s, const TwoQubitOperator &a) { return TwoQubitOperator(s * a.m_); }
  friend TwoQubitOperator operator+(const TwoQubitOperator &a, const TwoQubitOperator &b) {
    return TwoQubitOperator(a.m_ + b.m_);
  }
  friend TwoQubitOperator operator-(const TwoQubitOperator &a, const TwoQubitOperator &b) {
    return TwoQubitOperator(a.m_ - b.m_);
  }

 private:
  Matrix4 m_;
};

/// A two-factor Pauli string, e.g. ZX = σ_Z ⊗ σ_X.
struct PauliString {
  Pauli control = Pauli::I;
  Pauli target = Pauli::I;

  /// Parses a two-character label such as "ZX".
  static PauliString parse(std::string_view label);
  TwoQubitOperator matrix() const;
  bool anticommutes_with(const PauliString &other) const;

  friend bool operator==(const PauliString &, const PauliString &) = default;
};

/// Rotation generator: a Pauli string, optionally tilted towards a second,
/// anticommuting string by `tilt` radians, G = cos(tilt)·P + sin(tilt)·S.
/// Anticommutation guarantees G² = I.
class PauliAxis {
 public:
  explicit PauliAxis(PauliString primary) : primary_(primary) {}
  /// Throws std::invalid_argument if the two strings commute.
  PauliAxis(PauliString primary, PauliString secondary, double tilt);

  const PauliString &primary() const { return primary_; }
  const std::optional<PauliString> &secondary() const { return secondary_; }
  double tilt() const { return tilt_; }

  TwoQubitOperator generator() const;

 private:
  PauliString primary_;
  std::optional<PauliString> secondary_;
  double tilt_ = 0.0;
};

/// σ_p ⊗ σ_q.
TwoQubitOperator pauli_kron(Pauli p, Pauli q);
/// Character-label overload; throws std::invalid_argument on unknown labels.
TwoQubitOperator pauli_kron(char p, char q);

/// exp(-i θ/2 G) = cos(θ/2)·I - i·sin(θ/2)·G, exact because G² = I.
TwoQubitOperator rotation(const PauliAxis &axis, double theta);

/// exp(-i θ/2 G) for a single-qubit generator with G² = I.
Matrix2 rotation_1q(const Matrix2 &generator, double theta);

/// exp(-i φ (XX + YY + ZZ)), evaluated through the singlet/triplet split:
/// the triplet picks up e^{-iφ}, the singlet (|01> - |10>)/√2 picks up e^{3iφ}.
TwoQubitOperator heisenberg_evolution(double phase);

/// |Tr(U† V)| / Tr(V† V). Throws std::invalid_argument when V is zero.
double fidelity(const TwoQubitOperator &u, const TwoQubitOperator &v_ideal);

/// 1 - fidelity for unitary arguments, computed as min_c ||U - cV||²_F / (2 Tr(V†V))
/// over unit-modulus c. Algebraically identical to `1 - fidelity(u, v)` for
/// unitaries, but keeps full relative precision when the result is far
/// below machine epsilon.
double infidelity(const TwoQubitOperator &u, const TwoQubitOperator &v_ideal);

/// True iff U = c·V entrywise within `tol` for some |c| = 1.
bool equal_up_to_global_phase(const TwoQubitOperator &u, const TwoQubitOperator &v, double tol = 1e-10);

/// Canonical CNOT with the first factor as control.
TwoQubitOperator cnot();

}  // namespace robustcnot::su4

#endif  // ROBUSTCNOT_SU4_HPP
