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

#ifndef MONOPOLE_WIGNER_HPP_
#define MONOPOLE_WIGNER_HPP_

// Wigner 3-j symbols in exact arithmetic (Racah single sum), a Clebsch-Gordan
// ladder-operator construction used as an independent oracle, and Wigner
// small-d functions. Condon-Shortley phase convention throughout.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact_algebra.hpp"

namespace monopole {

struct ThreeJArgs {
  HalfInt j1, j2, j3;
  HalfInt m1, m2, m3;

  std::string to_string() const {
    return "(" + j1.to_string() + " " + j2.to_string() + " " + j3.to_string() + "; " +
           m1.to_string() + " " + m2.to_string() + " " + m3.to_string() + ")";
  }
};

namespace detail {

inline void validate_jm(HalfInt j, HalfInt m, const char* label) {
  if (j < HalfInt(0)) throw DomainError(std::string(label) + ": negative j " + j.to_string());
  if (abs(m) > j) {
    throw DomainError(std::string(label) + ": |m| exceeds j (" + m.to_string() + " vs " +
                      j.to_string() + ")");
  }
  if (!(j - m).is_integer()) {
    throw DomainError(std::string(label) + ": j - m is not an integer (" + j.to_string() +
                      ", " + m.to_string() + ")");
  }
}

inline bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  return abs(a - b) <= c && c <= a + b && (a + b + c).is_integer();
}

}  // namespace detail

inline void validate(const ThreeJArgs& a) {
  detail::validate_jm(a.j1, a.m1, "column 1");
  detail::validate_jm(a.j2, a.m2, "column 2");
  detail::validate_jm(a.j3, a.m3, "column 3");
}

/// Exact 3-j symbol. Zero when the m's do not sum to zero or the j's do not
/// form a triangle with integer perimeter.
inline SignedSqrtRational three_j(const ThreeJArgs& a) {
  validate(a);
  if ((a.m1 + a.m2 + a.m3) != HalfInt(0)) return SignedSqrtRational::zero();
  if (!detail::triangle(a.j1, a.j2, a.j3)) return SignedSqrtRational::zero();

  const auto& f = default_factorials();
  const int j1 = a.j1.twice(), j2 = a.j2.twice(), j3 = a.j3.twice();
  const int m1 = a.m1.twice(), m2 = a.m2.twice(), m3 = a.m3.twice();
  // All factorial arguments below are integers; work in doubled units.
  auto F = [&](int twice) { return f(twice / 2); };

  BigRational radicand = BigRational(F(j1 + j2 - j3) * F(j1 - j2 + j3) * F(-j1 + j2 + j3),
                                     F(j1 + j2 + j3 + 2));
  radicand *= F(j1 + m1) * F(j1 - m1) * F(j2 + m2) * F(j2 - m2) * F(j3 + m3) * F(j3 - m3);

  const int k_min = std::max({0, (j2 - j3 - m1) / 2, (j1 - j3 + m2) / 2});
  const int k_max = std::min({(j1 + j2 - j3) / 2, (j1 - m1) / 2, (j2 + m2) / 2});
  BigRational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    BigInt denominator = f(k) * F(j3 - j2 + 2 * k + m1) * F(j3 - j1 + 2 * k - m2) *
                         F(j1 + j2 - j3 - 2 * k) * F(j1 - 2 * k - m1) * F(j2 - 2 * k + m2);
    BigRational term(1, denominator);
    sum += (k % 2 == 0) ? term : BigRational(-term);
  }
  const int phase = parity_sign(a.j1 - a.j2 - a.m3);
  return SignedSqrtRational::from_rational(phase * sum) * SignedSqrtRational(1, radicand);
}

/// (-1)^(j1+j2+j3): the factor relating a 3-j symbol to the one with all m's
/// negated, and to the one with any two columns swapped.
inline int three_j_column_negation(const ThreeJArgs& a) {
  const HalfInt sum = a.j1 + a.j2 + a.j3;
  if (!sum.is_integer()) {
    throw DomainError("j1 + j2 + j3 = " + sum.to_string() + " is not an integer");
  }
  return parity_sign(sum);
}

inline ThreeJArgs negate_m(const ThreeJArgs& a) {
  return {a.j1, a.j2, a.j3, -a.m1, -a.m2, -a.m3};
}

// Clebsch-Gordan oracle -----------------------------------------------------

/// All coefficients <j1 m1 j2 m2 | j m> of one coupled multiplet, built by the
/// ladder-operator construction: the highest-weight state |j j> is fixed by
/// J+ |j j> = 0, normalization and <j1 j1 j2 (j-j1)|j j> > 0; lower states
/// follow from repeated application of J-.
class ClebschGordanMultiplet {
 public:
  ClebschGordanMultiplet(HalfInt j1, HalfInt j2, HalfInt j) : j1_(j1), j2_(j2), j_(j) {
    if (j1 < HalfInt(0) || j2 < HalfInt(0) || !detail::triangle(j1, j2, j)) {
      throw DomainError("invalid coupling " + j1.to_string() + " x " + j2.to_string() +
                        " -> " + j.to_string());
    }
    build();
  }

  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  HalfInt j() const { return j_; }

  /// <j1 m1 j2 m2 | j m>; zero unless m1 + m2 = m.
  SignedSqrtRational coefficient(HalfInt m1, HalfInt m2, HalfInt m) const {
    detail::validate_jm(j1_, m1, "m1");
    detail::validate_jm(j2_, m2, "m2");
    detail::validate_jm(j_, m, "m");
    if (m1 + m2 != m) return SignedSqrtRational::zero();
    const auto& row = states_.at(m.twice());
    const auto it = row.find(m1.twice());
    return it == row.end() ? SignedSqrtRational::zero() : it->second;
  }

 private:
  using State = std::map<int, SignedSqrtRational>;  // keyed by 2*m1

  // |m1 range| for total projection M.
  std::pair<int, int> m1_range(int twice_m) const {
    return {std::max(-j1_.twice(), twice_m - j2_.twice()),
            std::min(j1_.twice(), twice_m + j2_.twice())};
  }

  // (j - m)(j + m + 1), the squared J+ matrix element, for doubled arguments.
  static BigRational raise_sq(int tj, int tm) {
    return BigRational((tj - tm) / 2) * BigRational((tj + tm + 2), 2);
  }
  // (j + m)(j - m + 1), the squared J- matrix element.
  static BigRational lower_sq(int tj, int tm) {
    return BigRational((tj + tm) / 2) * BigRational((tj - tm + 2), 2);
  }
  static SignedSqrtRational root(const BigRational& q) { return SignedSqrtRational(1, q); }

  void build() {
    const int tj1 = j1_.twice(), tj2 = j2_.twice(), tj = j_.twice();
    // Highest weight: c(n1 - 1) = -c(n1) * b(j - n1) / a(n1 - 1).
    State top;
    auto [lo, hi] = m1_range(tj);
    top[tj1] = SignedSqrtRational::one();
    for (int n1 = tj1; n1 - 2 >= lo; n1 -= 2) {
      const BigRational b2 = raise_sq(tj2, tj - n1);
      const BigRational a2 = raise_sq(tj1, n1 - 2);
      top[n1 - 2] = -(top[n1] * root(b2 / a2));
    }
    BigRational norm = 0;
    for (const auto& [key, c] : top) norm += c.radicand();
    for (auto& [key, c] : top) c = c / root(norm);
    states_[tj] = std::move(top);

    for (int tm = tj; tm - 2 >= -tj; tm -= 2) {
      const State& upper = states_[tm];
      State next;
      auto [nlo, nhi] = m1_range(tm - 2);
      const SignedSqrtRational scale = root(lower_sq(tj, tm));
      for (int n1 = nlo; n1 <= nhi; n1 += 2) {
        SignedSqrtRational total = SignedSqrtRational::zero();
        // J1- from (n1 + 1, m - n1 - 1).
        if (auto it = upper.find(n1 + 2); it != upper.end()) {
          total = it->second * root(lower_sq(tj1, n1 + 2));
        }
        // J2- from (n1, m - n1).
        if (auto it = upper.find(n1); it != upper.end()) {
          auto sum = exact_sum(total, it->second * root(lower_sq(tj2, tm - n1)));
          if (!sum) throw std::logic_error("incommensurable ladder sum");
          total = *sum;
        }
        next[n1] = total / scale;
      }
      states_[tm - 2] = std::move(next);
    }
  }

  HalfInt j1_, j2_, j_;
  std::map<int, State> states_;  // keyed by 2*m
};

inline SignedSqrtRational clebsch_gordan_oracle(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                                                HalfInt j, HalfInt m) {
  return ClebschGordanMultiplet(j1, j2, j).coefficient(m1, m2, m);
}

/// (j1 j2 j3; m1 m2 m3) = (-1)^(j1-j2-m3) / sqrt(2 j3 + 1) <j1 m1 j2 m2 | j3 -m3>.
inline SignedSqrtRational three_j_from_clebsch_gordan(const ClebschGordanMultiplet& cg,
                                                      HalfInt m1, HalfInt m2, HalfInt m3) {
  const SignedSqrtRational c = cg.coefficient(m1, m2, -m3);
  if (c.is_zero()) return c;
  const int phase = parity_sign(cg.j1() - cg.j2() - m3);
  return SignedSqrtRational(phase, BigRational(1, cg.j().twice() + 1)) * c;
}

// Small-d -------------------------------------------------------------------

/// d^j_{m1 m2}(beta) from the explicit factorial sum
///   sum_k (-1)^(m1-m2+k) sqrt((j+m1)!(j-m1)!(j+m2)!(j-m2)!)
///         / ((j+m2-k)! k! (m1-m2+k)! (j-m1-k)!)
///         cos(beta/2)^(2j+m2-m1-2k) sin(beta/2)^(m1-m2+2k).
inline double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double beta) {
  detail::validate_jm(j, m1, "m1");
  detail::validate_jm(j, m2, "m2");
  const int jp1 = (j + m1).to_int(), jm1 = (j - m1).to_int();
  const int jp2 = (j + m2).to_int(), jm2 = (j - m2).to_int();
  const int dm = (m1 - m2).to_int();
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  const int k_min = std::max(0, -dm);
  const int k_max = std::min(jp2, jm1);
  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double sign = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(c, jp2 + jm1 - 2 * k) * std::pow(s, dm + 2 * k) /
           (fact(jp2 - k) * fact(k) * fact(dm + k) * fact(jm1 - k));
  }
  return std::sqrt(fact(jp1) * fact(jm1) * fact(jp2) * fact(jm2)) * sum;
}

}  // namespace monopole

#endif  // MONOPOLE_WIGNER_HPP_
