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

#ifndef MONOPOLE_EXACT_ALGEBRA_HPP_
#define MONOPOLE_EXACT_ALGEBRA_HPP_

// Exact arithmetic substrate: half-integer quantum numbers, arbitrary
// precision rationals, factorials, generalized binomials and the
// sign * sqrt(p/q) number type that holds Wigner 3-j values.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "monopole/errors.hpp"

namespace monopole {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A value in (1/2)Z, stored as twice the value so arithmetic stays exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Parses "p" or "p/2" (e.g. "3/2", "-1/2", "2"). Decimals are rejected.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return 0.5 * twice_; }

  /// The integer value; throws DomainError for odd twice().
  int to_int() const {
    if (!is_integer()) {
      throw DomainError("half-integer " + to_string() + " is not an integer");
    }
    return twice_ / 2;
  }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// (-1)^h for integer h.
inline int parity_sign(HalfInt h) { return (h.to_int() % 2 == 0) ? 1 : -1; }

inline HalfInt HalfInt::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> int {
    if (s.empty()) throw DomainError("cannot parse half-integer '" + std::string(text) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw DomainError("cannot parse half-integer '" + std::string(text) + "'");
    long value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw DomainError("cannot parse half-integer '" + std::string(text) + "'");
      }
      value = value * 10 + (s[i] - '0');
      if (value > 1000000) throw DomainError("half-integer '" + std::string(text) + "' out of range");
    }
    return static_cast<int>(negative ? -value : value);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return HalfInt(parse_int(text));
  if (text.substr(slash + 1) != "2") {
    throw DomainError("half-integer '" + std::string(text) + "' must have denominator 2");
  }
  return from_twice(parse_int(text.substr(0, slash)));
}

namespace detail {

inline BigInt compute_factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace detail

/// Memoized n! for n <= cap; larger arguments are computed on demand, so the
/// cap is a cache size and never a ceiling. Immutable after construction.
class FactorialTable {
 public:
  static constexpr unsigned kDefaultCap = 200;

  explicit FactorialTable(unsigned cap = kDefaultCap) {
    table_.reserve(cap + 1);
    table_.emplace_back(1);
    for (unsigned k = 1; k <= cap; ++k) table_.push_back(table_.back() * k);
  }

  unsigned cap() const { return static_cast<unsigned>(table_.size() - 1); }

  BigInt operator()(long n) const {
    if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
    const auto u = static_cast<std::size_t>(n);
    if (u < table_.size()) return table_[u];
    BigInt result = table_.back();
    for (std::size_t k = table_.size(); k <= u; ++k) result *= k;
    return result;
  }

 private:
  std::vector<BigInt> table_;
};

inline const FactorialTable& default_factorials() {
  static const FactorialTable table;
  return table;
}

inline BigInt factorial(long n) { return default_factorials()(n); }

/// a(a-1)...(a-k+1)/k! for rational a.
inline BigRational generalized_binomial(const BigRational& a, long k) {
  if (k < 0) throw DomainError("generalized binomial with negative k");
  BigRational result = 1;
  for (long i = 0; i < k; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

inline std::string to_string(const BigRational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

// Exact square root of a non-negative integer, if it is a perfect square.
inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

}  // namespace detail

/// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<BigRational> exact_rational_sqrt(const BigRational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto num = detail::exact_isqrt(numerator(q));
  if (!num) return std::nullopt;
  auto den = detail::exact_isqrt(denominator(q));
  if (!den) return std::nullopt;
  return BigRational(*num, *den);
}

/// sign * sqrt(radicand) with radicand a non-negative rational. Closed under
/// multiplication and division. There is no general operator+; see
/// exact_sum for the commensurable case.
class SignedSqrtRational {
 public:
  SignedSqrtRational() = default;

  SignedSqrtRational(int sign, BigRational radicand) {
    if (radicand < 0) throw DomainError("negative radicand in SignedSqrtRational");
    if (sign < -1 || sign > 1) throw DomainError("sign must be -1, 0 or +1");
    if (sign == 0 || radicand == 0) return;
    sign_ = sign;
    radicand_ = std::move(radicand);
  }

  static SignedSqrtRational zero() { return {}; }
  static SignedSqrtRational one() { return {1, BigRational(1)}; }

  /// The rational q itself: sign(q) * sqrt(q^2).
  static SignedSqrtRational from_rational(const BigRational& q) {
    if (q == 0) return {};
    return {q > 0 ? 1 : -1, q * q};
  }

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// sign * sqrt(radicand), accurate to within one ulp.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    using Wide = boost::multiprecision::cpp_bin_float_50;
    const Wide root = boost::multiprecision::sqrt(Wide(radicand_));
    return sign_ * static_cast<double>(root);
  }

  /// Renders as "0", "√(1/6)" or "-√(2)".
  std::string to_string() const {
    if (sign_ == 0) return "0";
    return std::string(sign_ < 0 ? "-" : "") + "√(" + monopole::to_string(radicand_) + ")";
  }

  SignedSqrtRational operator-() const {
    SignedSqrtRational r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend SignedSqrtRational operator*(const SignedSqrtRational& x,
                                      const SignedSqrtRational& y) {
    if (x.is_zero() || y.is_zero()) return {};
    return {x.sign_ * y.sign_, x.radicand_ * y.radicand_};
  }

  friend SignedSqrtRational operator/(const SignedSqrtRational& x,
                                      const SignedSqrtRational& y) {
    if (y.is_zero()) throw DomainError("division by zero SignedSqrtRational");
    if (x.is_zero()) return {};
    return {x.sign_ * y.sign_, x.radicand_ / y.radicand_};
  }

  friend bool operator==(const SignedSqrtRational& x, const SignedSqrtRational& y) {
    return x.sign_ == y.sign_ && x.radicand_ == y.radicand_;
  }

 private:
  int sign_ = 0;
  BigRational radicand_ = 0;
};

inline SignedSqrtRational ssr_mul(const SignedSqrtRational& x,
                                  const SignedSqrtRational& y) {
  return x * y;
}

/// Exact x + y when the radicands differ by a rational square factor (in
/// particular when they are equal). Returns nullopt otherwise, since the sum
/// then leaves the sign * sqrt(p/q) closure.
inline std::optional<SignedSqrtRational> exact_sum(const SignedSqrtRational& x,
                                                   const SignedSqrtRational& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  auto ratio = exact_rational_sqrt(y.radicand() / x.radicand());
  if (!ratio) return std::nullopt;
  const BigRational coefficient = BigRational(x.sign()) + BigRational(y.sign()) * *ratio;
  return SignedSqrtRational::from_rational(coefficient) *
         SignedSqrtRational(1, x.radicand());
}

inline std::optional<SignedSqrtRational> exact_difference(const SignedSqrtRational& x,
                                                          const SignedSqrtRational& y) {
  return exact_sum(x, -y);
}

}  // namespace monopole

#endif  // MONOPOLE_EXACT_ALGEBRA_HPP_
