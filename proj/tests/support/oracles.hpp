// Copyright 2026 The Monopole Harmonics Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOPOLE_TESTS_SUPPORT_ORACLES_HPP_
#define MONOPOLE_TESTS_SUPPORT_ORACLES_HPP_

// Reference implementations used only by the tests. None of these share code
// with the library routines they check.

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "monopole/exact_algebra.hpp"

namespace monopole::oracle {

/// n! by repeated multiplication.
inline BigInt factorial_by_product(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Associated Legendre P_l^m(x), m >= 0, with the Condon-Shortley phase, by
/// the upward recurrence in l.
inline double associated_legendre(int l, int m, double x) {
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pl = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pl = ((2.0 * ll - 1.0) * x * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pl;
  }
  return pl;
}

/// Standard spherical harmonic Y_l^m with the Condon-Shortley phase.
inline std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  const int am = std::abs(m);
  double ratio = 1.0;  // (l - |m|)! / (l + |m|)!
  for (int k = l - am + 1; k <= l + am; ++k) ratio /= k;
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * ratio);
  const std::complex<double> y =
      norm * associated_legendre(l, am, std::cos(theta)) * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return ((am % 2) ? -1.0 : 1.0) * std::conj(y);
}

/// Jacobi polynomial by the three-term recurrence in n.
inline double jacobi_by_recurrence(int n, double a, double b, double x) {
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (a * a - b * b);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Rotation matrix exp(-i beta J_y) in the basis m = j, j-1, ..., -j, from
/// the spectral decomposition of J_y built out of ladder matrix elements.
inline Eigen::MatrixXcd rotation_about_y(HalfInt j, double beta) {
  const int dim = j.twice() + 1;
  const double jj = j.to_double();
  Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(dim, dim);
  for (int row = 0; row + 1 < dim; ++row) {
    const double m = jj - row - 1;  // raising m -> m + 1
    jplus(row, row + 1) = std::sqrt(jj * (jj + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd jy = (jplus - jplus.adjoint()) / std::complex<double>(0.0, 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(jy);
  Eigen::VectorXcd phases(dim);
  for (int k = 0; k < dim; ++k) phases[k] = std::polar(1.0, -beta * solver.eigenvalues()[k]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// d^j_{m1 m2}(beta) read off rotation_about_y.
inline double small_d_by_exponential(HalfInt j, HalfInt m1, HalfInt m2, double beta) {
  const auto d = rotation_about_y(j, beta);
  const int row = (j - m1).to_int(), col = (j - m2).to_int();
  return d(row, col).real();
}

}  // namespace monopole::oracle

#endif  // MONOPOLE_TESTS_SUPPORT_ORACLES_HPP_
