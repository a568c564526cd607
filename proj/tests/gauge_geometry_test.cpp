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

#include "monopole/gauge_geometry.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "monopole/random.hpp"

namespace monopole {
namespace {

constexpr double kPi = std::numbers::pi;

Vector3 random_vector(SplitMix64& rng) {
  return unit_vector(random_sphere_point(rng, 0.05)) * rng.uniform(0.5, 2.0);
}

Matrix2 sigma_dot(const Vector3& n) {
  return n[0] * pauli::sigma(0) + n[1] * pauli::sigma(1) + n[2] * pauli::sigma(2);
}

// Central difference of A_k^a with respect to x_i, indexed [a][k].
std::array<std::array<double, 3>, 3> wu_yang_derivative(const Vector3& r, int i, double step) {
  Vector3 plus = r, minus = r;
  plus[i] += step;
  minus[i] -= step;
  const auto ap = wu_yang_coefficients(plus), am = wu_yang_coefficients(minus);
  std::array<std::array<double, 3>, 3> d{};
  for (int a = 0; a < 3; ++a)
    for (int k = 0; k < 3; ++k) d[a][k] = (ap[a][k] - am[a][k]) / (2 * step);
  return d;
}

// F_ij^a from finite differences, indexed [a][i][j].
std::array<std::array<std::array<double, 3>, 3>, 3> field_strength_fd(const Vector3& r, double e) {
  const double step = 1e-5;
  const auto a = wu_yang_coefficients(r);
  std::array<std::array<std::array<double, 3>, 3>, 3> d{};  // [i][a][k]
  for (int i = 0; i < 3; ++i) d[i] = wu_yang_derivative(r, i, step);
  std::array<std::array<std::array<double, 3>, 3>, 3> f{};
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = d[i][c][j] - d[j][c][i];
        for (int b = 0; b < 3; ++b)
          for (int g = 0; g < 3; ++g) v -= e * levi_civita(c, b, g) * a[b][i] * a[g][j];
        f[c][i][j] = v;
      }
  return f;
}

TEST(WuYangTest, NorthPoleComponents) {
  const auto a = wu_yang_coefficients({0.0, 0.0, 1.0});
  // a is indexed [group][space]: A_2^1 = 1 and A_1^2 = -1 (1-based labels).
  EXPECT_DOUBLE_EQ(a[0][1], 1.0);
  EXPECT_DOUBLE_EQ(a[1][0], -1.0);
  for (int g = 0; g < 3; ++g)
    for (int k = 0; k < 3; ++k)
      if (!((g == 0 && k == 1) || (g == 1 && k == 0))) {
        EXPECT_DOUBLE_EQ(a[g][k], 0.0);
      }
}

TEST(WuYangTest, HomogeneousOfDegreeMinusOne) {
  SplitMix64 rng(1);
  for (int n = 0; n < 20; ++n) {
    const Vector3 r = random_vector(rng);
    const double lambda = rng.uniform(0.2, 5.0);
    const auto a = wu_yang_coefficients(r), b = wu_yang_coefficients(lambda * r);
    for (int g = 0; g < 3; ++g)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(b[g][k], a[g][k] / lambda, 1e-14);
  }
}

TEST(WuYangTest, PotentialIsTracelessHermitian) {
  const auto a = wu_yang_potential({0.3, -0.4, 0.8});
  EXPECT_LE(a.max_trace(), 1e-15);
  for (const auto& c : a.components) EXPECT_LE((c - c.adjoint()).norm(), 1e-15);
}

TEST(WuYangTest, OriginIsRejected) {
  EXPECT_THROW(wu_yang_coefficients(Vector3::Zero()), DomainError);
}

TEST(WuYangTest, FieldStrengthMatchesFiniteDifferences) {
  SplitMix64 rng(2);
  for (const double e : {-1.0, 1.0, 0.5}) {
    for (int n = 0; n < 10; ++n) {
      const Vector3 r = random_vector(rng);
      const auto analytic = wu_yang_field_strength(r, e);
      const auto numeric = field_strength_fd(r, e);
      for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) EXPECT_NEAR(analytic[a][i][j], numeric[a][i][j], 1e-7);
    }
  }
}

TEST(WuYangTest, FieldEquationHoldsOnlyAtUnitNegativeCoupling) {
  SplitMix64 rng(3);
  // Covariant divergence of the analytic field strength by finite differences.
  auto divergence = [](const Vector3& r, double e) {
    const double step = 1e-5;
    const auto a = wu_yang_coefficients(r);
    const auto f = wu_yang_field_strength(r, e);
    std::array<std::array<double, 3>, 3> out{};
    for (int i = 0; i < 3; ++i) {
      Vector3 plus = r, minus = r;
      plus[i] += step;
      minus[i] -= step;
      const auto fp = wu_yang_field_strength(plus, e), fm = wu_yang_field_strength(minus, e);
      for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 3; ++j) {
          out[c][j] += (fp[c][i][j] - fm[c][i][j]) / (2 * step);
          for (int b = 0; b < 3; ++b)
            for (int g = 0; g < 3; ++g) out[c][j] -= e * levi_civita(c, b, g) * a[b][i] * f[g][i][j];
        }
    }
    return out;
  };
  for (int n = 0; n < 10; ++n) {
    const Vector3 r = random_vector(rng);
    for (const double e : {-1.0, 1.0, -0.5}) {
      const auto numeric = divergence(r, e);
      const auto analytic = wu_yang_field_equation_residual(r, e);
      for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(numeric[c][j], analytic[c][j], 1e-6);
    }
    const auto at_minus_one = wu_yang_field_equation_residual(r, -1.0);
    for (const auto& row : at_minus_one)
      for (const double v : row) EXPECT_EQ(v, 0.0);
    double at_plus_one = 0.0;
    for (const auto& row : wu_yang_field_equation_residual(r, 1.0))
      for (const double v : row) at_plus_one += std::abs(v);
    EXPECT_GT(at_plus_one, 1e-3);
  }
}

TEST(DiracPotentialTest, Examples) {
  const Vector3 a = dirac_potential({1.0, 0.0, 0.0}, {0.0, 0.0, 1.0});
  EXPECT_NEAR((a - Vector3(0.0, -1.0, 0.0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR(dirac_potential({0.0, 0.0, -1.0}, {0.0, 0.0, 1.0}).norm(), 0.0, 1e-15);
  EXPECT_THROW(dirac_potential({1e-8, 0.0, 1.0}, {0.0, 0.0, 1.0}), SingularityError);
  EXPECT_NO_THROW(dirac_potential({1e-4, 0.0, 1.0}, {0.0, 0.0, 1.0}));
  EXPECT_THROW(dirac_potential({1.0, 0.0, 0.0}, {0.0, 0.0, 2.0}), DomainError);
}

TEST(DiracPotentialTest, AzimuthalOnTheUnitSphere) {
  // With n = -z the potential on the unit sphere is (1 - cos theta)/sin theta times phi_hat.
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_sphere_point(rng, 1e-3);
    const Vector3 r = unit_vector(p);
    const Vector3 phi_hat(-std::sin(p.phi()), std::cos(p.phi()), 0.0);
    const Vector3 a = dirac_potential(r, string_direction());
    const double expected = (1.0 - std::cos(p.theta())) / std::sin(p.theta());
    EXPECT_NEAR((a - expected * phi_hat).norm(), 0.0, 1e-12);
    EXPECT_NEAR(a.dot(r), 0.0, 1e-14);
  }
}

TEST(GaugeMatrixTest, Examples) {
  EXPECT_NEAR((gauge_matrix_S(0.0, 0.4).matrix() - Matrix2::Identity()).norm(), 0.0, 1e-15);
  Matrix2 expected;
  const double r = std::sqrt(0.5);
  expected << r, -r, r, r;
  EXPECT_NEAR((gauge_matrix_S(kPi / 2, 0.0).matrix() - expected).norm(), 0.0, 1e-15);
  EXPECT_NEAR((gauge_matrix_Sp(kPi, 1.1).matrix() - Matrix2::Identity()).norm(), 0.0, 1e-15);
}

TEST(GaugeMatrixTest, UnitaryWithUnitDeterminant) {
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_sphere_point(rng);
    for (const auto& u : {gauge_matrix_S(p), gauge_matrix_Sp(p)}) {
      EXPECT_NEAR((u.matrix() * u.matrix().adjoint() - Matrix2::Identity()).norm(), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(u.determinant() - Complex(1.0)), 0.0, 1e-13);
    }
  }
}

TEST(GaugeMatrixTest, RotatesSigma3OntoTheHedgehog) {
  // S satisfies S^dagger (sigma . r) S = sigma_3, i.e.
  // S sigma_3 S^dagger = sigma . r.
  SplitMix64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_sphere_point(rng);
    const Matrix2 s = gauge_matrix_S(p).matrix();
    const Matrix2 hedgehog = sigma_dot(unit_vector(p));
    EXPECT_NEAR((s.adjoint() * hedgehog * s - pauli::sigma(2)).norm(), 0.0, 1e-12);
    EXPECT_NEAR((s * pauli::sigma(2) * s.adjoint() - hedgehog).norm(), 0.0, 1e-12);
  }
}

TEST(GaugeMatrixTest, ParityMatrixIsSAtTheReflectedPoint) {
  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_sphere_point(rng);
    EXPECT_NEAR((gauge_matrix_Sp(p).matrix() - gauge_matrix_S(p.reflected()).matrix()).norm(), 0.0,
                1e-13);
  }
}

TEST(Su2MatrixTest, RejectsNonUnitary) {
  Matrix2 m;
  m << 2.0, 0.0, 0.0, 0.5;
  EXPECT_THROW(SU2Matrix{m}, DomainError);
}

TEST(RMatrixTest, Examples) {
  Matrix2 expected;
  expected << 0.0, 1.0, -1.0, 0.0;
  EXPECT_NEAR((r_matrix(0.0).matrix() - expected).norm(), 0.0, 1e-15);
  const Matrix2 product =
      gauge_matrix_Sp(0.7, 1.3).matrix() * gauge_matrix_S(0.7, 1.3).inverse().matrix();
  EXPECT_NEAR((product - r_matrix(1.3).matrix()).norm(), 0.0, 1e-13);
  const auto f = r_matrix_factors(1.3);
  EXPECT_NEAR((f[0].matrix() * f[1].matrix() - r_matrix(1.3).matrix()).norm(), 0.0, 1e-15);
}

TEST(RMatrixTest, HatMatrixAtHalfChargeCoincides) {
  for (const double phi : {0.0, 0.5, 2.0, 4.0, 6.0}) {
    EXPECT_NEAR((r_hat_matrix(phi, 0.5).matrix() - r_matrix(phi).matrix()).norm(), 0.0, 1e-15);
  }
}

TEST(RMatrixTest, ProductWithAntipodeIsIdentity) {
  for (const double phi : {0.0, 0.7, 3.0}) {
    const Matrix2 product = r_matrix(phi).matrix() * r_matrix(phi + kPi).matrix();
    EXPECT_NEAR((product - Matrix2::Identity()).norm(), 0.0, 1e-15);
  }
}

TEST(GaugeFieldTest, AnalyticGradientMatchesFiniteDifferences) {
  SplitMix64 rng(8);
  for (const auto kind : {GaugeMatrixKind::S, GaugeMatrixKind::Sp}) {
    for (int n = 0; n < 50; ++n) {
      const Vector3 r = random_vector(rng);
      const auto sample = gauge_field(kind, r);
      for (int k = 0; k < 3; ++k) {
        const double step = 1e-6;
        Vector3 plus = r, minus = r;
        plus[k] += step;
        minus[k] -= step;
        const Matrix2 fd =
            (gauge_field(kind, plus).value - gauge_field(kind, minus).value) / (2 * step);
        EXPECT_NEAR((fd - sample.gradient[k]).norm(), 0.0, 1e-8);
      }
    }
  }
}

TEST(GaugeFieldTest, AxisIsSingular) {
  EXPECT_THROW(gauge_field(GaugeMatrixKind::S, {0.0, 0.0, 2.0}), SingularityError);
}

TEST(GaugeTransformTest, IdentityAndConstantFields) {
  const auto a = wu_yang_potential({0.2, 0.5, -0.3});
  const GaugeFieldSample identity{Matrix2::Identity(), {Matrix2::Zero(), Matrix2::Zero(), Matrix2::Zero()}};
  const auto same = gauge_transform(a, identity, -1.0);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR((same.components[k] - a.components[k]).norm(), 0.0, 1e-15);
  const Matrix2 u = gauge_matrix_S(1.0, 2.0).matrix();
  const GaugeFieldSample constant{u, {Matrix2::Zero(), Matrix2::Zero(), Matrix2::Zero()}};
  const auto conj = gauge_transform(a, constant, -1.0);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR((conj.components[k] - u * a.components[k] * u.adjoint()).norm(), 0.0, 1e-15);
  }
  EXPECT_THROW(gauge_transform(a, constant, 0.0), DomainError);
}

TEST(AbelianizationTest, DirectAndParityVariants) {
  const auto direct = abelianization_check(1000, 42, AbelianizationVariant::direct);
  const auto parity = abelianization_check(1000, 42, AbelianizationVariant::parity);
  EXPECT_TRUE(direct.pass);
  EXPECT_TRUE(parity.pass);
  EXPECT_NEAR(direct.mean_c, -0.5, 1e-12);
  EXPECT_NEAR(parity.mean_c, -direct.mean_c, 1e-12);
  EXPECT_LE(direct.max_off_diagonal, 1e-10);
  EXPECT_LE(parity.c_spread, 1e-10);
}

TEST(AbelianizationTest, SItselfDoesNotAbelianize) {
  // Transforming with S itself (instead of S^{-1}) leaves off-diagonal parts.
  SplitMix64 rng(9);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Vector3 r = unit_vector(random_sphere_point(rng, 1e-2));
    const auto t = gauge_transform(wu_yang_potential(r), gauge_field(GaugeMatrixKind::S, r),
                                   kAbelianizationCoupling);
    for (const auto& c : t.components) worst = std::max(worst, std::abs(c(0, 1)));
  }
  EXPECT_GT(worst, 1e-2);
}

TEST(AbelianizationTest, RepeatableForFixedSeed) {
  const auto a = abelianization_check(50, 3, AbelianizationVariant::direct);
  const auto b = abelianization_check(50, 3, AbelianizationVariant::direct);
  EXPECT_EQ(a.mean_c, b.mean_c);
  EXPECT_EQ(a.max_off_diagonal, b.max_off_diagonal);
  EXPECT_THROW(abelianization_check(0, 3, AbelianizationVariant::direct), DomainError);
}

TEST(ParityOperatorTest, Report) {
  const SphereGrid grid(32, 32);
  const auto rep = parity_operator_check(grid);
  EXPECT_LE(rep.r_identity_residual, 1e-13);
  EXPECT_LE(rep.r_factorization_residual, 1e-13);
  // S S_p^{-1} is R^{-1} = -R, not R.
  EXPECT_LE(rep.s_sp_inverse_vs_r_inverse, 1e-13);
  EXPECT_GT(rep.s_sp_inverse_vs_r, 1.0);
  EXPECT_LE(rep.r_product_vs_identity, 1e-13);
  EXPECT_LE(rep.r_hat_discrepancy, 1e-13);
  EXPECT_LE(rep.involution_residual, 1e-12);
  EXPECT_LE(rep.hermiticity_residual, 1e-10);
  ASSERT_EQ(rep.harmonic_phase.size(), 2u);
  for (std::size_t i = 0; i < rep.harmonic_phase.size(); ++i) {
    EXPECT_LE(rep.harmonic_phase_spread[i], 1e-10);
    EXPECT_NEAR(std::abs(rep.harmonic_phase[i] - Complex(1.0)), 0.0, 1e-10);
  }
}

TEST(ParityOperatorTest, ConstantSpinorIsHermitian) {
  const SphereGrid grid(32, 32);
  const Spinor u(Complex(0.3, -0.2), Complex(1.0, 0.5));
  const Spinor v(Complex(-0.7, 0.1), Complex(0.2, 0.9));
  auto f = [&](const SphericalPoint&) { return u; };
  auto g = [&](const SphericalPoint&) { return v; };
  const Complex lhs = spinor_inner_product(parity_prime(f), g, grid);
  const Complex rhs = spinor_inner_product(f, parity_prime(g), grid);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10);
}

}  // namespace
}  // namespace monopole
