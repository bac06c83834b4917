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

#ifndef ROBUSTCNOT_TESTS_ORACLES_HPP
#define ROBUSTCNOT_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library: dense
// Hermitian exponentials via eigendecomposition, and operators assembled from
// raw Pauli matrices.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

inline M2 pauli(char c) {
  M2 m;
  const Complex i{0, 1};
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

inline M4 kron(const M2 &a, const M2 &b) {
  M4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = a(r / 2, c / 2) * b(r % 2, c % 2);
  return m;
}

/// exp(-i t H) for Hermitian H via its eigendecomposition.
inline M4 expm_hermitian(const M4 &h, double t) {
  Eigen::SelfAdjointEigenSolver<M4> es(h);
  const Complex i{0, 1};
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(-i * t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline M2 expm_hermitian2(const M2 &h, double t) {
  Eigen::SelfAdjointEigenSolver<M2> es(h);
  const Complex i{0, 1};
  Eigen::Vector2cd phases;
  for (int k = 0; k < 2; ++k) phases(k) = std::exp(-i * t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline M4 heisenberg(double phase) {
  const M4 h = kron(pauli('X'), pauli('X')) + kron(pauli('Y'), pauli('Y')) + kron(pauli('Z'), pauli('Z'));
  return expm_hermitian(h, phase);
}

/// exp(-i θ/2 ZZ)
inline M4 zz(double theta) { return expm_hermitian(kron(pauli('Z'), pauli('Z')), theta / 2); }

inline double fidelity(const M4 &u, const M4 &v) {
  return std::abs((u.adjoint() * v).trace()) / (v.adjoint() * v).trace().real();
}

inline bool equal_up_to_phase(const M4 &u, const M4 &v, double tol) {
  // brute force over the entry with the largest modulus
  int br = 0, bc = 0;
  v.cwiseAbs().maxCoeff(&br, &bc);
  const Complex c = u(br, bc) / v(br, bc);
  if (std::abs(std::abs(c) - 1.0) > tol) return false;
  return (u - c * v).cwiseAbs().maxCoeff() <= tol;
}

inline M4 cnot() {
  M4 m = M4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int k = 0; k < n; ++k) g.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * k / (n - 1)));
  return g;
}

}  // namespace oracle

#endif  // ROBUSTCNOT_TESTS_ORACLES_HPP
