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

#ifndef MONOPOLE_JACOBI_HPP_
#define MONOPOLE_JACOBI_HPP_

#include <cmath>
#include <vector>

#include "monopole/exact_algebra.hpp"

namespace monopole {

/// Coefficients C(n+alpha, n-s) * C(n+beta, s), s = 0..n, of the finite sum
///   P_n^(alpha,beta)(x) = sum_s c_s ((x-1)/2)^s ((x+1)/2)^(n-s).
/// Exact for any rational alpha, beta, including negative ones.
inline std::vector<BigRational> jacobi_coefficients(long n, const BigRational& alpha,
                                                    const BigRational& beta) {
  if (n < 0) throw DomainError("Jacobi polynomial of negative degree");
  std::vector<BigRational> c;
  c.reserve(static_cast<std::size_t>(n + 1));
  for (long s = 0; s <= n; ++s) {
    c.push_back(generalized_binomial(n + alpha, n - s) * generalized_binomial(n + beta, s));
  }
  return c;
}

/// Evaluates the finite sum given (x-1)/2 and (x+1)/2 directly, which keeps
/// full relative precision near x = +-1 when the caller has them from a half
/// angle. Summation runs s = 0..n in that order.
inline double jacobi_from_halves(const std::vector<double>& coefficients, double x_minus_half,
                                 double x_plus_half) {
  const long n = static_cast<long>(coefficients.size()) - 1;
  double sum = 0.0;
  for (long s = 0; s <= n; ++s) {
    if (coefficients[static_cast<std::size_t>(s)] == 0.0) continue;
    sum += coefficients[static_cast<std::size_t>(s)] * std::pow(x_minus_half, static_cast<double>(s)) *
           std::pow(x_plus_half, static_cast<double>(n - s));
  }
  return sum;
}

inline std::vector<double> lower(const std::vector<BigRational>& exact) {
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& q : exact) out.push_back(static_cast<double>(q));
  return out;
}

/// P_n^(alpha,beta)(x) through the hypergeometric finite sum with
/// generalized binomials.
inline double jacobi_polynomial(long n, const BigRational& alpha, const BigRational& beta,
                                double x) {
  return jacobi_from_halves(lower(jacobi_coefficients(n, alpha, beta)), 0.5 * (x - 1.0),
                            0.5 * (x + 1.0));
}

}  // namespace monopole

#endif  // MONOPOLE_JACOBI_HPP_
