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

#ifndef MONOPOLE_MONOPOLE_HARMONICS_HPP_
#define MONOPOLE_MONOPOLE_HARMONICS_HPP_

// Monopole (generalized) spherical harmonics
//
//   Y_{j m mu}(theta, phi) = N (1-x)^{-(m+mu)/2} (1+x)^{-(m-mu)/2}
//                            P_{j+m}^{(-m-mu, -m+mu)}(x) e^{i (m+mu) phi},
//   N = 2^m sqrt((2j+1) (j-m)! (j+m)! / (4 pi (j-mu)! (j+mu)!)),
//
// with x = cos(theta) and mu = eg the charge-monopole product. These are
// unit-normalized on the sphere and coincide with
// sqrt((2j+1)/4pi) d^j_{m,-mu}(theta) e^{i(m+mu)phi}; at mu = 0 they reduce to
// the Condon-Shortley Y_jm.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact_algebra.hpp"
#include "monopole/jacobi.hpp"

namespace monopole {

using Complex = std::complex<double>;

class MonopoleHarmonicIndex {
 public:
  MonopoleHarmonicIndex(HalfInt j, HalfInt m, HalfInt mu) : j_(j), m_(m), mu_(mu) {
    if (abs(m) > j) throw DomainError("|m| exceeds j (m=" + m.to_string() + ", j=" + j.to_string() + ")");
    if (abs(mu) > j) throw DomainError("|mu| exceeds j (mu=" + mu.to_string() + ", j=" + j.to_string() + ")");
    if (!(j - m).is_integer()) throw DomainError("j - m is not an integer");
    if (!(j - mu).is_integer()) throw DomainError("j - mu is not an integer");
  }

  HalfInt j() const { return j_; }
  HalfInt m() const { return m_; }
  HalfInt mu() const { return mu_; }

  MonopoleHarmonicIndex with_mu(HalfInt mu) const { return {j_, m_, mu}; }

  std::string to_string() const {
    return "(" + j_.to_string() + ", " + m_.to_string() + ", " + mu_.to_string() + ")";
  }

  friend bool operator==(const MonopoleHarmonicIndex&, const MonopoleHarmonicIndex&) = default;

 private:
  HalfInt j_, m_, mu_;
};

/// A point on the open sphere. Poles are excluded; phi is reduced to [0, 2pi).
class SphericalPoint {
 public:
  SphericalPoint(double theta, double phi) : theta_(theta) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
      throw DomainError("non-finite spherical coordinates");
    }
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
      throw DomainError("theta must lie strictly inside (0, pi); got " + std::to_string(theta));
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi_ = std::fmod(phi, two_pi);
    if (phi_ < 0.0) phi_ += two_pi;
    if (phi_ >= two_pi) phi_ = 0.0;
  }

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// Antipodal point (pi - theta, phi + pi).
  SphericalPoint reflected() const { return {std::numbers::pi - theta_, phi_ + std::numbers::pi}; }

 private:
  double theta_;
  double phi_;
};

/// N = 2^m sqrt((2j+1)(j-m)!(j+m)! / (4 pi (j-mu)!(j+mu)!)): exact factorial ratio, lowered to
/// double at the end; 2^m uses the real power for half-integer m.
inline double normalization_constant(const MonopoleHarmonicIndex& idx) {
  const HalfInt j = idx.j(), m = idx.m(), mu = idx.mu();
  const BigRational ratio(
      BigInt(j.twice() + 1) * factorial((j - m).to_int()) * factorial((j + m).to_int()),
      factorial((j - mu).to_int()) * factorial((j + mu).to_int()));
  const double root = SignedSqrtRational(1, ratio).to_double();
  return std::pow(2.0, m.to_double()) * root / std::sqrt(4.0 * std::numbers::pi);
}

/// Evaluator for one Y_{j m mu}: caches N and the Jacobi coefficients.
class MonopoleHarmonic {
 public:
  explicit MonopoleHarmonic(const MonopoleHarmonicIndex& idx)
      : index_(idx), normalization_(normalization_constant(idx)) {
    const HalfInt m = idx.m(), mu = idx.mu();
    const BigRational alpha = BigRational(-(m + mu).twice(), 2);
    const BigRational beta = BigRational(-(m - mu).twice(), 2);
    coefficients_ = lower(jacobi_coefficients((idx.j() + m).to_int(), alpha, beta));
    exp_minus_ = -0.5 * (m + mu).to_double();
    exp_plus_ = -0.5 * (m - mu).to_double();
    phase_rate_ = (m + mu).to_double();
  }

  const MonopoleHarmonicIndex& index() const { return index_; }
  double normalization() const { return normalization_; }

  Complex operator()(const SphericalPoint& p) const {
    const double s = std::sin(0.5 * p.theta());
    const double c = std::cos(0.5 * p.theta());
    const double one_minus_x = 2.0 * s * s;
    const double one_plus_x = 2.0 * c * c;
    const double jacobi = jacobi_from_halves(coefficients_, -s * s, c * c);
    // Negative powers of (1 -+ x) evaluated as exp(k log(.)) on the open interval.
    const double envelope =
        std::exp(exp_minus_ * std::log(one_minus_x) + exp_plus_ * std::log(one_plus_x));
    return normalization_ * envelope * jacobi * std::polar(1.0, phase_rate_ * p.phi());
  }

 private:
  MonopoleHarmonicIndex index_;
  double normalization_;
  std::vector<double> coefficients_;
  double exp_minus_ = 0.0, exp_plus_ = 0.0, phase_rate_ = 0.0;
};

inline Complex monopole_harmonic(const MonopoleHarmonicIndex& idx, const SphericalPoint& p) {
  return MonopoleHarmonic(idx)(p);
}

/// Image of (index, point) under P-inversion theta -> pi - theta,
/// phi -> phi + pi, which also sends mu -> -mu.
struct ParityImage {
  MonopoleHarmonicIndex index;
  SphericalPoint point;
  /// Y_{j m -mu}(reflected) / Y_{j m mu}(original); empty where Y vanishes.
  std::optional<Complex> ratio;
  /// The U(1) factor e^{-2 i mu phi} carried by the ratio.
  Complex gauge_factor;
  /// ratio / gauge_factor, position independent. Equals (-1)^(j+mu).
  std::optional<Complex> phase;
};

inline ParityImage parity_map(const MonopoleHarmonicIndex& idx, const SphericalPoint& p) {
  const MonopoleHarmonicIndex image_index = idx.with_mu(-idx.mu());
  const SphericalPoint image_point = p.reflected();
  const MonopoleHarmonic original(idx);
  const Complex y = original(p);
  const Complex y_image = MonopoleHarmonic(image_index)(image_point);
  const Complex gauge = std::polar(1.0, -2.0 * idx.mu().to_double() * p.phi());
  ParityImage out{image_index, image_point, std::nullopt, gauge, std::nullopt};
  if (std::abs(y) > 1e-12 * original.normalization()) {
    out.ratio = y_image / y;
    out.phase = *out.ratio / gauge;
  }
  return out;
}

}  // namespace monopole

#endif  // MONOPOLE_MONOPOLE_HARMONICS_HPP_
