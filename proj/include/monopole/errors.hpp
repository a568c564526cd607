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

#ifndef MONOPOLE_ERRORS_HPP_
#define MONOPOLE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace monopole {

// Invalid quantum numbers, malformed arguments, evaluation outside the
// domain of a function. Derives from std::domain_error so callers can catch
// either.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation too close to a Dirac string or a coordinate pole.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A quadrature integrand produced a non-finite sample.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace monopole

#endif  // MONOPOLE_ERRORS_HPP_
