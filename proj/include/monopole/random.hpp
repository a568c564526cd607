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

#ifndef MONOPOLE_RANDOM_HPP_
#define MONOPOLE_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

#include "monopole/monopole_harmonics.hpp"

namespace monopole {

/// SplitMix64 (Steele, Lea, Flood). Fully specified so that seeded sample
/// sets are reproducible bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Area-uniform point on the sphere with theta kept at least `pole_margin`
/// away from both poles (rejection sampling).
inline SphericalPoint random_sphere_point(SplitMix64& rng, double pole_margin = 1e-6) {
  for (;;) {
    const double x = 1.0 - 2.0 * rng.uniform();
    const double theta = std::acos(x);
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    if (theta > pole_margin && theta < std::numbers::pi - pole_margin) return {theta, phi};
  }
}

}  // namespace monopole

#endif  // MONOPOLE_RANDOM_HPP_
