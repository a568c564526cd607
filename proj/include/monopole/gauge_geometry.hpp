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

#ifndef MONOPOLE_GAUGE_GEOMETRY_HPP_
#define MONOPOLE_GAUGE_GEOMETRY_HPP_

// The non-abelian side of the charge-monopole problem: the Wu-Yang SU(2)
// potential, the abelian Dirac potential, the gauge matrices S and S_p that
// relate them, R = S_p S^{-1}, and the redefined parity operator P' = R P.
//
// Conventions, all fixed here and exercised by the tests:
//  * su(2)-valued fields are A_k = A_k^a sigma_a / 2;
//  * the field strength carries the "- e eps_abc A^b A^c" sign, for which the
//    inhomogeneous gauge term is "+ (i/e) (grad U) U^{-1}";
//  * with that sign the Wu-Yang field eps_akm r_m / r^2 solves the field
//    equations for e = -1 (see wu_yang_field_equation_residual), which is the
//    coupling used for the abelianization;
//  * S maps sigma_3 onto the hedgehog (S sigma_3 S^dagger = sigma . r_hat), so
//    the abelianizing transformation is U = S^{-1}; S is discontinuous on the
//    negative z half-axis, which is therefore the Dirac string, n = -z.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "monopole/errors.hpp"
#include "monopole/monopole_harmonics.hpp"
#include "monopole/random.hpp"
#include "monopole/sphere_quadrature.hpp"

namespace monopole {

using Vector3 = Eigen::Vector3d;
using Matrix2 = Eigen::Matrix2cd;

namespace pauli {

inline Matrix2 identity() { return Matrix2::Identity(); }
inline Matrix2 sigma(int a) {
  using namespace std::complex_literals;
  Matrix2 m;
  switch (a) {
    case 0: m << 0.0, 1.0, 1.0, 0.0; break;
    case 1: m << 0.0, -1i, 1i, 0.0; break;
    case 2: m << 1.0, 0.0, 0.0, -1.0; break;
    default: throw DomainError("Pauli index out of range");
  }
  return m;
}

}  // namespace pauli

inline double levi_civita(int a, int b, int c) {
  return 0.5 * (a - b) * (b - c) * (c - a);
}

/// 2x2 unitary matrix with unit-modulus determinant.
class SU2Matrix {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit SU2Matrix(const Matrix2& m) : m_(m) {
    if ((m * m.adjoint() - Matrix2::Identity()).norm() > kTolerance) {
      throw DomainError("matrix is not unitary");
    }
    if (std::abs(std::abs(m.determinant()) - 1.0) > kTolerance) {
      throw DomainError("matrix determinant is not of unit modulus");
    }
  }

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }
  Complex determinant() const { return m_.determinant(); }
  SU2Matrix inverse() const { return SU2Matrix(m_.adjoint()); }
  SU2Matrix adjoint() const { return SU2Matrix(m_.adjoint()); }

  friend SU2Matrix operator*(const SU2Matrix& a, const SU2Matrix& b) {
    return SU2Matrix(a.m_ * b.m_);
  }

 private:
  Matrix2 m_;
};

/// Sample of an su(2)-valued vector field: one traceless Hermitian 2x2 matrix
/// per spatial direction, A_k = A_k^a * generator_scale * sigma_a.
struct Su2VectorSample {
  std::array<Matrix2, 3> components;
  double generator_scale = 0.5;

  double max_trace() const {
    double t = 0.0;
    for (const auto& c : components) t = std::max(t, std::abs(c.trace()));
    return t;
  }
};

inline void require_nonzero(const Vector3& r) {
  if (!std::isfinite(r.squaredNorm())) throw DomainError("non-finite position");
  if (r.squaredNorm() == 0.0) throw DomainError("position at the origin");
}

/// Real coefficients A_k^a = eps_akm r_m / r^2, indexed [a][k].
inline std::array<std::array<double, 3>, 3> wu_yang_coefficients(const Vector3& r) {
  require_nonzero(r);
  const double r2 = r.squaredNorm();
  std::array<std::array<double, 3>, 3> a{};
  for (int c = 0; c < 3; ++c)
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 3; ++m) a[c][k] += levi_civita(c, k, m) * r[m] / r2;
  return a;
}

inline Su2VectorSample wu_yang_potential(const Vector3& r) {
  const auto a = wu_yang_coefficients(r);
  Su2VectorSample out;
  for (int k = 0; k < 3; ++k) {
    out.components[k] = Matrix2::Zero();
    for (int c = 0; c < 3; ++c) out.components[k] += a[c][k] * 0.5 * pauli::sigma(c);
  }
  return out;
}

/// Analytic F_ij^a = d_i A_j^a - d_j A_i^a - e eps_abc A_i^b A_j^c of the
/// Wu-Yang field: -(2 + e) eps_ijm r_m r_a / r^4. Indexed [a][i][j].
inline std::array<std::array<std::array<double, 3>, 3>, 3> wu_yang_field_strength(
    const Vector3& r, double e) {
  require_nonzero(r);
  const double r4 = r.squaredNorm() * r.squaredNorm();
  std::array<std::array<std::array<double, 3>, 3>, 3> f{};
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int m = 0; m < 3; ++m)
          f[a][i][j] += -(2.0 + e) * levi_civita(i, j, m) * r[m] * r[a] / r4;
  return f;
}

/// Covariant divergence D_i F_ij^a = d_i F_ij^a - e eps_abc A_i^b F_ij^c of the
/// Wu-Yang field, analytic: -(2 + e)(1 + e) eps_ajm r_m / r^4. Vanishes only
/// for e = -1. Indexed [a][j].
inline std::array<std::array<double, 3>, 3> wu_yang_field_equation_residual(const Vector3& r,
                                                                           double e) {
  require_nonzero(r);
  const double r4 = r.squaredNorm() * r.squaredNorm();
  std::array<std::array<double, 3>, 3> out{};
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m)
        out[a][j] += -(2.0 + e) * (1.0 + e) * levi_civita(a, j, m) * r[m] / r4;
  return out;
}

/// Half-angle of the cone around the Dirac string inside which the abelian
/// potential is treated as singular.
inline constexpr double kStringExclusion = 1e-6;

/// Unit direction of the Dirac string of S.
inline Vector3 string_direction() { return {0.0, 0.0, -1.0}; }

/// A^D(r, n) = eps_abc r_b n_c / (r - r.n) for a unit vector n. This form
/// has no overall 1/r, so it agrees with the textbook Dirac potential on
/// the unit sphere, which is where the abelianization is checked.
inline Vector3 dirac_potential(const Vector3& r, const Vector3& n) {
  require_nonzero(r);
  if (std::abs(n.norm() - 1.0) > 1e-12) throw DomainError("string direction must be a unit vector");
  const Vector3 cross = r.cross(n);
  const double angle = std::atan2(cross.norm(), r.dot(n));
  if (angle < kStringExclusion) {
    throw SingularityError("position lies inside the Dirac string exclusion cone");
  }
  return cross / (r.norm() - r.dot(n));
}

inline Vector3 unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}
inline Vector3 unit_vector(const SphericalPoint& p) { return unit_vector(p.theta(), p.phi()); }

inline SU2Matrix gauge_matrix_S(double theta, double phi) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Matrix2 m;
  m << c, -s * std::polar(1.0, -phi), s * std::polar(1.0, phi), c;
  return SU2Matrix(m);
}
inline SU2Matrix gauge_matrix_S(const SphericalPoint& p) { return gauge_matrix_S(p.theta(), p.phi()); }

inline SU2Matrix gauge_matrix_Sp(double theta, double phi) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Matrix2 m;
  m << s, c * std::polar(1.0, -phi), -c * std::polar(1.0, phi), s;
  return SU2Matrix(m);
}
inline SU2Matrix gauge_matrix_Sp(const SphericalPoint& p) { return gauge_matrix_Sp(p.theta(), p.phi()); }

/// R = S_p S^{-1} in closed form: ((0, e^{-i phi}), (-e^{i phi}, 0)).
inline SU2Matrix r_matrix(double phi) {
  Matrix2 m;
  m << 0.0, std::polar(1.0, -phi), -std::polar(1.0, phi), 0.0;
  return SU2Matrix(m);
}

/// The factorization R = ((0,1),(1,0)) * diag(-e^{i phi}, e^{-i phi}).
inline std::array<SU2Matrix, 2> r_matrix_factors(double phi) {
  Matrix2 swap, diagonal;
  swap << 0.0, 1.0, 1.0, 0.0;
  diagonal << -std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi);
  return {SU2Matrix(swap), SU2Matrix(diagonal)};
}

/// R_hat = ((0, e^{-2 i mu phi}), (-e^{2 i mu phi}, 0)).
inline SU2Matrix r_hat_matrix(double phi, double mu) {
  Matrix2 m;
  m << 0.0, std::polar(1.0, -2.0 * mu * phi), -std::polar(1.0, 2.0 * mu * phi), 0.0;
  return SU2Matrix(m);
}

/// A position-dependent gauge matrix together with its Cartesian gradient.
struct GaugeFieldSample {
  Matrix2 value;
  std::array<Matrix2, 3> gradient;

  GaugeFieldSample inverse() const {
    // Unitary: U^{-1} = U^dagger and grad(U^dagger) = (grad U)^dagger.
    return {value.adjoint(), {gradient[0].adjoint(), gradient[1].adjoint(), gradient[2].adjoint()}};
  }
};

enum class GaugeMatrixKind { S, Sp };

namespace detail {

// dtheta/dx_k and dphi/dx_k at a point.
inline std::array<std::array<double, 3>, 2> angular_jacobian(const Vector3& r) {
  const double rho = std::hypot(r[0], r[1]);
  const double rn = r.norm();
  if (rho == 0.0) throw SingularityError("gauge gradient undefined on the z axis");
  const double theta = std::atan2(rho, r[2]);
  const double phi = std::atan2(r[1], r[0]);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return {{{ct * cp / rn, ct * sp / rn, -st / rn}, {-sp / (rn * st), cp / (rn * st), 0.0}}};
}

}  // namespace detail

/// S (or S_p) at Cartesian r with the analytic gradient, obtained from the
/// hand-derived theta/phi derivatives by the chain rule.
inline GaugeFieldSample gauge_field(GaugeMatrixKind kind, const Vector3& r) {
  using namespace std::complex_literals;
  require_nonzero(r);
  const double theta = std::atan2(std::hypot(r[0], r[1]), r[2]);
  const double phi = std::atan2(r[1], r[0]);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const Complex em = std::polar(1.0, -phi), ep = std::polar(1.0, phi);
  Matrix2 value, d_theta, d_phi;
  if (kind == GaugeMatrixKind::S) {
    value << c, -s * em, s * ep, c;
    d_theta << -0.5 * s, -0.5 * c * em, 0.5 * c * ep, -0.5 * s;
    d_phi << 0.0, 1i * s * em, 1i * s * ep, 0.0;
  } else {
    value << s, c * em, -c * ep, s;
    d_theta << 0.5 * c, -0.5 * s * em, 0.5 * s * ep, 0.5 * c;
    d_phi << 0.0, -1i * c * em, -1i * c * ep, 0.0;
  }
  const auto jac = detail::angular_jacobian(r);
  GaugeFieldSample out{value, {}};
  for (int k = 0; k < 3; ++k) out.gradient[k] = jac[0][k] * d_theta + jac[1][k] * d_phi;
  return out;
}

/// U A_k U^{-1} + (i/e) (d_k U) U^{-1}, componentwise.
inline Su2VectorSample gauge_transform(const Su2VectorSample& a, const GaugeFieldSample& u,
                                       double e) {
  using namespace std::complex_literals;
  if (e == 0.0) throw DomainError("coupling must be non-zero");
  const Matrix2 inverse = u.value.inverse();
  Su2VectorSample out;
  out.generator_scale = a.generator_scale;
  for (int k = 0; k < 3; ++k) {
    out.components[k] = u.value * a.components[k] * inverse + (1i / e) * u.gradient[k] * inverse;
  }
  return out;
}

/// Coupling with which the Wu-Yang field above is a solution, and with
/// which S^{-1} abelianizes it.
inline constexpr double kAbelianizationCoupling = -1.0;

enum class AbelianizationVariant { direct, parity };

inline const char* to_string(AbelianizationVariant v) {
  return v == AbelianizationVariant::direct ? "direct" : "parity";
}

struct AbelianizationResidual {
  double off_diagonal_norm = 0.0;
  /// Least-squares c in diag(T) = c A^D sigma_3 (direct) or
  /// c A^D(-r, n) sigma_3 (parity).
  double fitted_c = 0.0;
  double fit_residual = 0.0;
};

/// Transforms the Wu-Yang field at the unit vector of p with S^{-1}
/// (direct) or S_p^{-1} (parity) and measures how far the result is from a
/// multiple of the Dirac potential times sigma_3.
inline AbelianizationResidual abelianization_residual(const SphericalPoint& p,
                                                      AbelianizationVariant variant) {
  const Vector3 r = unit_vector(p);
  const Vector3 n = string_direction();
  const bool direct = variant == AbelianizationVariant::direct;
  const Vector3 target = dirac_potential(direct ? r : Vector3(-r), n);
  const GaugeFieldSample u =
      gauge_field(direct ? GaugeMatrixKind::S : GaugeMatrixKind::Sp, r).inverse();
  const Su2VectorSample t = gauge_transform(wu_yang_potential(r), u, kAbelianizationCoupling);

  AbelianizationResidual out;
  double off = 0.0, num = 0.0;
  for (int k = 0; k < 3; ++k) {
    off += std::norm(t.components[k](0, 1)) + std::norm(t.components[k](1, 0));
    num += t.components[k](0, 0).real() * target[k];
  }
  out.off_diagonal_norm = std::sqrt(off);
  out.fitted_c = num / target.squaredNorm();
  double res = 0.0;
  for (int k = 0; k < 3; ++k) {
    res += std::norm(t.components[k](0, 0) - out.fitted_c * target[k]);
    res += std::norm(t.components[k](1, 1) + out.fitted_c * target[k]);
  }
  out.fit_residual = std::sqrt(res);
  return out;
}

struct AbelianizationReport {
  AbelianizationVariant variant = AbelianizationVariant::direct;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_off_diagonal = 0.0;
  double mean_c = 0.0;
  double c_spread = 0.0;
  double max_fit_residual = 0.0;
  double tolerance = 1e-10;
  bool pass = false;
};

/// Runs abelianization_residual at `samples` seeded random points kept off
/// both poles; the reduction is sequential in sample order.
inline AbelianizationReport abelianization_check(int samples, std::uint64_t seed,
                                                 AbelianizationVariant variant,
                                                 double tolerance = 1e-10) {
  if (samples < 1) throw DomainError("need at least one sample");
  SplitMix64 rng(seed);
  AbelianizationReport rep;
  rep.variant = variant;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tolerance;
  double c_min = 0.0, c_max = 0.0, c_sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SphericalPoint p = random_sphere_point(rng, 1e-3);
    const auto r = abelianization_residual(p, variant);
    rep.max_off_diagonal = std::max(rep.max_off_diagonal, r.off_diagonal_norm);
    rep.max_fit_residual = std::max(rep.max_fit_residual, r.fit_residual);
    if (i == 0) c_min = c_max = r.fitted_c;
    c_min = std::min(c_min, r.fitted_c);
    c_max = std::max(c_max, r.fitted_c);
    c_sum += r.fitted_c;
  }
  rep.mean_c = c_sum / samples;
  rep.c_spread = c_max - c_min;
  rep.pass = rep.max_off_diagonal <= tolerance && rep.c_spread <= tolerance &&
             rep.max_fit_residual <= tolerance;
  return rep;
}

// Redefined parity ------------------------------------------------------------

using Spinor = Eigen::Vector2cd;

/// (P' f)(p) = R(phi_p) f(-p): reflection of the argument followed by the
/// position-dependent matrix R.
template <typename F>
auto parity_prime(F f) {
  return [f](const SphericalPoint& p) -> Spinor {
    return r_matrix(p.phi()).matrix() * f(p.reflected());
  };
}

/// <u, v> = integral of u^dagger v over the sphere.
template <typename U, typename V>
Complex spinor_inner_product(const U& u, const V& v, const SphereGrid& grid) {
  return integrate([&](const SphericalPoint& p) { return Complex(u(p).dot(v(p))); }, grid);
}

/// Smooth two-component test function: a random complex polynomial of degree
/// <= 3 in the Cartesian components of the unit vector.
class PolynomialSpinorField {
 public:
  explicit PolynomialSpinorField(SplitMix64& rng) {
    for (auto& c : coefficients_) c = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }

  Spinor operator()(const SphericalPoint& p) const {
    const Vector3 u = unit_vector(p);
    Spinor out = Spinor::Zero();
    std::size_t idx = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c) {
          const double mono = std::pow(u[0], a) * std::pow(u[1], b) * std::pow(u[2], c);
          out[0] += coefficients_[idx++] * mono;
          out[1] += coefficients_[idx++] * mono;
        }
    return out;
  }

 private:
  std::array<Complex, 40> coefficients_{};  // 20 monomials x 2 components
};

struct ParityOperatorReport {
  /// max ||S_p S^{-1} - R(phi)|| over sampled (theta, phi).
  double r_identity_residual = 0.0;
  /// max ||swap * diag(-e^{i phi}, e^{-i phi}) - R(phi)||.
  double r_factorization_residual = 0.0;
  /// S S_p^{-1} compared with +R and with R^{-1} = -R.
  double s_sp_inverse_vs_r = 0.0;
  double s_sp_inverse_vs_r_inverse = 0.0;
  /// R(phi) R(phi + pi), recorded at phi = 0.7, and its max distance from I.
  Matrix2 r_product_sample = Matrix2::Zero();
  double r_product_vs_identity = 0.0;
  /// R_hat(phi, 1/2) R(phi)^{-1}, recorded at phi = 0.7, and its max distance
  /// from the identity.
  Matrix2 r_hat_discrepancy_sample = Matrix2::Zero();
  double r_hat_discrepancy = 0.0;
  /// max |(P')^2 f - f| at sample points over the test functions.
  double involution_residual = 0.0;
  /// max |<P' f, g> - <f, P' g>| over test-function pairs.
  double hermiticity_residual = 0.0;
  int test_functions = 0;
  /// Per j <= 3/2 (mu = 1/2): mean (P')^2 phase on basis spinors and spread.
  std::vector<HalfInt> harmonic_j;
  std::vector<Complex> harmonic_phase;
  std::vector<double> harmonic_phase_spread;
};

inline ParityOperatorReport parity_operator_check(const SphereGrid& grid, std::uint64_t seed = 7,
                                                  int test_functions = 20, int samples = 100) {
  ParityOperatorReport rep;
  SplitMix64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const SphericalPoint p = random_sphere_point(rng, 1e-3);
    const Matrix2 s = gauge_matrix_S(p).matrix();
    const Matrix2 sp = gauge_matrix_Sp(p).matrix();
    const Matrix2 r = r_matrix(p.phi()).matrix();
    const auto factors = r_matrix_factors(p.phi());
    rep.r_identity_residual = std::max(rep.r_identity_residual, (sp * s.inverse() - r).norm());
    rep.r_factorization_residual = std::max(
        rep.r_factorization_residual, (factors[0].matrix() * factors[1].matrix() - r).norm());
    rep.s_sp_inverse_vs_r = std::max(rep.s_sp_inverse_vs_r, (s * sp.inverse() - r).norm());
    rep.s_sp_inverse_vs_r_inverse =
        std::max(rep.s_sp_inverse_vs_r_inverse, (s * sp.inverse() - r.inverse()).norm());
    const Matrix2 product = r * r_matrix(p.phi() + std::numbers::pi).matrix();
    rep.r_product_vs_identity =
        std::max(rep.r_product_vs_identity, (product - Matrix2::Identity()).norm());
    const Matrix2 disc = r_hat_matrix(p.phi(), 0.5).matrix() * r.inverse();
    rep.r_hat_discrepancy = std::max(rep.r_hat_discrepancy, (disc - Matrix2::Identity()).norm());
  }
  rep.r_product_sample = r_matrix(0.7).matrix() * r_matrix(0.7 + std::numbers::pi).matrix();
  rep.r_hat_discrepancy_sample = r_hat_matrix(0.7, 0.5).matrix() * r_matrix(0.7).matrix().inverse();

  std::vector<PolynomialSpinorField> fields;
  fields.reserve(static_cast<std::size_t>(test_functions));
  for (int i = 0; i < test_functions; ++i) fields.emplace_back(rng);
  rep.test_functions = test_functions;
  for (int i = 0; i < test_functions; ++i) {
    const auto& f = fields[static_cast<std::size_t>(i)];
    const auto& g = fields[static_cast<std::size_t>((i + 1) % test_functions)];
    const Complex lhs = spinor_inner_product(parity_prime(f), g, grid);
    const Complex rhs = spinor_inner_product(f, parity_prime(g), grid);
    rep.hermiticity_residual = std::max(rep.hermiticity_residual, std::abs(lhs - rhs));
    const auto twice = parity_prime(parity_prime(f));
    for (int k = 0; k < 10; ++k) {
      const SphericalPoint p = random_sphere_point(rng, 1e-3);
      rep.involution_residual = std::max(rep.involution_residual, (twice(p) - f(p)).norm());
    }
  }

  const HalfInt mu = HalfInt::from_twice(1);
  for (int tj = 1; tj <= 3; tj += 2) {
    const HalfInt j = HalfInt::from_twice(tj);
    std::vector<Complex> phases;
    for (int tm = -tj; tm <= tj; tm += 2) {
      const MonopoleHarmonic up({j, HalfInt::from_twice(tm), mu});
      const MonopoleHarmonic down({j, HalfInt::from_twice(tm), -mu});
      auto psi = [&](const SphericalPoint& p) -> Spinor { return {up(p), down(p)}; };
      const auto twice = parity_prime(parity_prime(psi));
      for (int k = 0; k < 20; ++k) {
        const SphericalPoint p = random_sphere_point(rng, 1e-3);
        const Spinor v = psi(p), w = twice(p);
        for (int c = 0; c < 2; ++c) {
          if (std::abs(v[c]) > 1e-8) phases.push_back(w[c] / v[c]);
        }
      }
    }
    Complex mean = 0.0;
    for (const auto& z : phases) mean += z;
    mean /= static_cast<double>(phases.size());
    double spread = 0.0;
    for (const auto& z : phases) spread = std::max(spread, std::abs(z - mean));
    rep.harmonic_j.push_back(j);
    rep.harmonic_phase.push_back(mean);
    rep.harmonic_phase_spread.push_back(spread);
  }
  return rep;
}

}  // namespace monopole

#endif  // MONOPOLE_GAUGE_GEOMETRY_HPP_
