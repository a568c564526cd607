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

#ifndef MONOPOLE_SPHERE_QUADRATURE_HPP_
#define MONOPOLE_SPHERE_QUADRATURE_HPP_

// Tensor-product quadrature on the sphere: Gauss-Legendre in x = cos(theta)
// times the uniform trapezoid rule in phi. All reductions use pairwise
// summation in a fixed node order, so results are reproducible bit-for-bit.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/monopole_harmonics.hpp"

namespace monopole {

struct GaussNode {
  double x;
  double weight;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending in x.
inline std::vector<GaussNode> gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
  std::vector<GaussNode> nodes(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    nodes[static_cast<std::size_t>(n - 1 - i)] = {x, w};
    nodes[static_cast<std::size_t>(i)] = {-x, w};
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)].x = 0.0;
  return nodes;
}

struct SphereNode {
  SphericalPoint point;
  double weight;
};

class SphereGrid {
 public:
  static constexpr int kDefaultTheta = 64;
  static constexpr int kDefaultPhi = 64;

  SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
    if (n_theta < 2 || n_phi < 2) {
      throw DomainError("sphere grid needs n_theta >= 2 and n_phi >= 2");
    }
    theta_nodes_ = gauss_legendre(n_theta);
    const double phi_weight = 2.0 * std::numbers::pi / n_phi;
    nodes_.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
    for (const auto& t : theta_nodes_) {
      const double theta = std::acos(t.x);
      for (int k = 0; k < n_phi; ++k) {
        nodes_.push_back({SphericalPoint(theta, phi_weight * k), t.weight * phi_weight});
      }
    }
  }

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  const std::vector<GaussNode>& theta_nodes() const { return theta_nodes_; }
  double phi_weight() const { return 2.0 * std::numbers::pi / n_phi_; }
  const std::vector<SphereNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  int n_theta_, n_phi_;
  std::vector<GaussNode> theta_nodes_;
  std::vector<SphereNode> nodes_;
};

inline SphereGrid build_grid(int n_theta, int n_phi) { return {n_theta, n_phi}; }

namespace detail {

template <typename T>
T pairwise_sum(std::span<const T> values) {
  if (values.size() <= 8) {
    T sum{};
    for (const auto& v : values) sum += v;
    return sum;
  }
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

}  // namespace detail

template <typename T>
T pairwise_sum(std::span<const T> values) {
  return detail::pairwise_sum(values);
}

/// Quadrature of precomputed samples, one per grid node in grid order.
inline Complex integrate_samples(std::span<const Complex> samples, const SphereGrid& grid) {
  if (samples.size() != grid.size()) throw DomainError("sample count does not match grid");
  std::vector<Complex> weighted(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    weighted[i] = samples[i] * grid.nodes()[i].weight;
  }
  return pairwise_sum(std::span<const Complex>(weighted));
}

/// Integral of f over the unit sphere (dOmega = sin(theta) dtheta dphi).
template <typename F>
Complex integrate(F&& f, const SphereGrid& grid) {
  std::vector<Complex> samples;
  samples.reserve(grid.size());
  for (const auto& node : grid.nodes()) {
    const Complex v = f(node.point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "non-finite integrand at theta=" << node.point.theta()
          << ", phi=" << node.point.phi();
      throw NumericalError(msg.str());
    }
    samples.push_back(v);
  }
  return integrate_samples(samples, grid);
}

struct GramSummary {
  std::size_t states = 0;
  double max_off_diagonal = 0.0;
  double diagonal_mean = 0.0;
  double diagonal_spread = 0.0;  // max - min of the diagonal
};

/// Gram matrix <Y_{j' m' mu}, Y_{j m mu}> over all |mu| <= j <= j_max on the
/// grid, summarized.
inline GramSummary gram_summary(HalfInt j_max, HalfInt mu, const SphereGrid& grid) {
  if (j_max < abs(mu)) throw DomainError("j_max must be at least |mu|");
  std::vector<std::vector<Complex>> samples;
  for (HalfInt j = abs(mu); j <= j_max; j += HalfInt(1)) {
    for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
      const MonopoleHarmonic y({j, m, mu});
      auto& column = samples.emplace_back();
      column.reserve(grid.size());
      for (const auto& node : grid.nodes()) column.push_back(y(node.point));
    }
  }
  GramSummary s;
  s.states = samples.size();
  double d_min = 0.0, d_max = 0.0, d_sum = 0.0;
  std::vector<Complex> integrand(grid.size());
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a; b < samples.size(); ++b) {
      for (std::size_t i = 0; i < grid.size(); ++i) integrand[i] = std::conj(samples[a][i]) * samples[b][i];
      const Complex g = integrate_samples(integrand, grid);
      if (a != b) {
        s.max_off_diagonal = std::max(s.max_off_diagonal, std::abs(g));
        continue;
      }
      if (a == 0) d_min = d_max = g.real();
      d_min = std::min(d_min, g.real());
      d_max = std::max(d_max, g.real());
      d_sum += g.real();
    }
  }
  s.diagonal_mean = d_sum / static_cast<double>(s.states);
  s.diagonal_spread = d_max - d_min;
  return s;
}

}  // namespace monopole

#endif  // MONOPOLE_SPHERE_QUADRATURE_HPP_
