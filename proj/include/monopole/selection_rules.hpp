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

#ifndef MONOPOLE_SELECTION_RULES_HPP_
#define MONOPOLE_SELECTION_RULES_HPP_

// Dipole matrix elements between monopole harmonics for the two charge
// operators (pseudoscalar e*sigma_3 and scalar e*I), computed twice: by sphere
// quadrature and by the 3-j closed form
//
//   <j' m' mu| D_k |j m mu> = C_k (-1)^(m'-mu) sqrt((2j+1)(2j'+1))
//                             (j' 1 j; -m' k m) (j' 1 j; mu 0 -mu),
//
// where D_0 = cos(theta), D_{+1} = sin(theta) e^{i phi},
// D_{-1} = sin(theta) e^{-i phi}. The constants C_k are not hard-coded: each
// table fits one C' per component from a reference transition and checks
// every other record against it. Radial integrals are taken as 1.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact_algebra.hpp"
#include "monopole/monopole_harmonics.hpp"
#include "monopole/sphere_quadrature.hpp"
#include "monopole/wigner.hpp"

namespace monopole {

enum class DipoleComponent { z, plus, minus };
inline constexpr std::array<DipoleComponent, 3> kDipoleComponents{
    DipoleComponent::z, DipoleComponent::plus, DipoleComponent::minus};

/// Spherical index k of the component: m' = m + k for a non-zero element.
inline int spherical_index(DipoleComponent c) {
  switch (c) {
    case DipoleComponent::z: return 0;
    case DipoleComponent::plus: return 1;
    case DipoleComponent::minus: return -1;
  }
  return 0;
}

/// Position of the component in kDipoleComponents.
inline std::size_t component_slot(DipoleComponent c) {
  switch (c) {
    case DipoleComponent::z: return 0;
    case DipoleComponent::plus: return 1;
    case DipoleComponent::minus: return 2;
  }
  return 0;
}

inline const char* to_string(DipoleComponent c) {
  switch (c) {
    case DipoleComponent::z: return "z";
    case DipoleComponent::plus: return "plus";
    case DipoleComponent::minus: return "minus";
  }
  return "?";
}

inline Complex dipole_factor(DipoleComponent c, const SphericalPoint& p) {
  switch (c) {
    case DipoleComponent::z: return std::cos(p.theta());
    case DipoleComponent::plus: return std::sin(p.theta()) * std::polar(1.0, p.phi());
    case DipoleComponent::minus: return std::sin(p.theta()) * std::polar(1.0, -p.phi());
  }
  return 0.0;
}

enum class ChargeOperatorKind { pseudoscalar_sigma3, scalar_identity };

inline const char* to_string(ChargeOperatorKind k) {
  return k == ChargeOperatorKind::pseudoscalar_sigma3 ? "pseudoscalar" : "scalar";
}

/// Entry of the diagonal charge operator acting on component slot 0 (upper)
/// or 1 (lower).
inline double charge_sign(ChargeOperatorKind k, int slot) {
  return (k == ChargeOperatorKind::pseudoscalar_sigma3 && slot == 1) ? -1.0 : 1.0;
}

/// Two-component angular wavefunction. single_upper is (Phi_mu, 0),
/// single_lower is (0, Phi_mu), spinor is scale * (Phi_mu, phase * Phi_-mu).
class Wavefunction {
 public:
  enum class Form { single_upper, single_lower, spinor };

  static Wavefunction single_upper(const MonopoleHarmonicIndex& idx) {
    return {idx, Form::single_upper, 1.0, 1.0};
  }
  static Wavefunction single_lower(const MonopoleHarmonicIndex& idx) {
    return {idx, Form::single_lower, 1.0, 1.0};
  }
  static Wavefunction spinor(const MonopoleHarmonicIndex& idx, Complex relative_phase = 1.0,
                             double scale = 1.0) {
    if (std::abs(std::abs(relative_phase) - 1.0) > 1e-12) {
      throw DomainError("relative phase must have unit modulus");
    }
    return {idx, Form::spinor, relative_phase, scale};
  }

  Form form() const { return form_; }
  const MonopoleHarmonicIndex& index() const { return index_; }
  Complex relative_phase() const { return phase_; }
  double scale() const { return scale_; }

  struct Slot {
    int slot;
    MonopoleHarmonicIndex index;
    Complex coefficient;
  };

  /// Non-empty component slots.
  std::vector<Slot> slots() const {
    switch (form_) {
      case Form::single_upper: return {{0, index_, 1.0}};
      case Form::single_lower: return {{1, index_, 1.0}};
      case Form::spinor:
        return {{0, index_, scale_}, {1, index_.with_mu(-index_.mu()), scale_ * phase_}};
    }
    return {};
  }

 private:
  Wavefunction(const MonopoleHarmonicIndex& idx, Form form, Complex phase, double scale)
      : index_(idx), form_(form), phase_(phase), scale_(scale) {
    if (form == Form::spinor) (void)idx.with_mu(-idx.mu());
  }

  MonopoleHarmonicIndex index_;
  Form form_;
  Complex phase_;
  double scale_;
};

/// Harmonic and dipole-factor samples on one grid, computed on first use.
class GridSampleCache {
 public:
  explicit GridSampleCache(const SphereGrid& grid) : grid_(grid) {}

  const SphereGrid& grid() const { return grid_; }

  const std::vector<Complex>& harmonic(const MonopoleHarmonicIndex& idx) {
    const auto key = std::make_tuple(idx.j().twice(), idx.m().twice(), idx.mu().twice());
    auto it = harmonics_.find(key);
    if (it != harmonics_.end()) return it->second;
    const MonopoleHarmonic y(idx);
    std::vector<Complex> samples;
    samples.reserve(grid_.size());
    for (const auto& node : grid_.nodes()) {
      const Complex v = y(node.point);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw NumericalError("harmonic " + idx.to_string() + " is not finite at a grid node");
      }
      samples.push_back(v);
    }
    return harmonics_.emplace(key, std::move(samples)).first->second;
  }

  const std::vector<Complex>& dipole(DipoleComponent c) {
    auto& slot = dipole_[component_slot(c)];
    if (slot.empty()) {
      slot.reserve(grid_.size());
      for (const auto& node : grid_.nodes()) slot.push_back(dipole_factor(c, node.point));
    }
    return slot;
  }

 private:
  const SphereGrid& grid_;
  std::map<std::tuple<int, int, int>, std::vector<Complex>> harmonics_;
  std::array<std::vector<Complex>, 3> dipole_;
};

/// <bra| D_c Q |ket> by quadrature, Q the diagonal charge operator.
inline Complex matrix_element_quadrature(const Wavefunction& bra, const Wavefunction& ket,
                                         DipoleComponent component, ChargeOperatorKind op,
                                         GridSampleCache& cache) {
  const auto& d = cache.dipole(component);
  Complex total = 0.0;
  for (const auto& b : bra.slots()) {
    for (const auto& k : ket.slots()) {
      if (b.slot != k.slot) continue;
      const auto& yb = cache.harmonic(b.index);
      const auto& yk = cache.harmonic(k.index);
      std::vector<Complex> integrand(yb.size());
      for (std::size_t i = 0; i < yb.size(); ++i) integrand[i] = std::conj(yb[i]) * d[i] * yk[i];
      total += std::conj(b.coefficient) * k.coefficient * charge_sign(op, b.slot) *
               integrate_samples(integrand, cache.grid());
    }
  }
  return total;
}

inline Complex matrix_element_quadrature(const Wavefunction& bra, const Wavefunction& ket,
                                         DipoleComponent component, ChargeOperatorKind op,
                                         const SphereGrid& grid) {
  GridSampleCache cache(grid);
  return matrix_element_quadrature(bra, ket, component, op, cache);
}

// Closed form ---------------------------------------------------------------

/// (-1)^(m'-mu) sqrt((2j+1)(2j'+1)) (j' 1 j; -m' k m)(j' 1 j; mu 0 -mu), the
/// single-harmonic matrix element of D_k up to the constant C_k.
inline SignedSqrtRational harmonic_dipole_term(HalfInt jp, HalfInt mp, HalfInt j, HalfInt m,
                                               HalfInt mu, DipoleComponent component) {
  const HalfInt one(1);
  const HalfInt k(spherical_index(component));
  if (abs(mu) > j || abs(mu) > jp) return SignedSqrtRational::zero();
  const SignedSqrtRational m_part = three_j({jp, one, j, -mp, k, m});
  if (m_part.is_zero()) return m_part;
  const SignedSqrtRational mu_part = three_j({jp, one, j, mu, HalfInt(0), -mu});
  const SignedSqrtRational prefactor(parity_sign(mp - mu),
                                     BigRational((j.twice() + 1) * (jp.twice() + 1)));
  return prefactor * m_part * mu_part;
}

/// The bracket (j' 1 j; -mu 0 mu) - (j' 1 j; mu 0 -mu), exactly. The two
/// symbols differ by (-1)^(j'+j+1), so the difference never leaves the
/// sign * sqrt(p/q) closure.
inline SignedSqrtRational mu_bracket(HalfInt jp, HalfInt j, HalfInt mu) {
  const HalfInt one(1);
  const auto a = three_j({jp, one, j, -mu, HalfInt(0), mu});
  const auto b = three_j({jp, one, j, mu, HalfInt(0), -mu});
  auto d = exact_difference(a, b);
  if (!d) throw std::logic_error("bracket symbols are not commensurable");
  return *d;
}

/// Closed-form matrix element (without C_k) between two wavefunctions of the
/// same form with quantum numbers (j', m') and (j, m), exact. For spinors the
/// relative phase cancels between bra and ket and the overall scale enters
/// squared.
inline SignedSqrtRational closed_form_exact(HalfInt jp, HalfInt mp, HalfInt j, HalfInt m,
                                            HalfInt mu, DipoleComponent component,
                                            ChargeOperatorKind op, Wavefunction::Form form) {
  switch (form) {
    case Wavefunction::Form::single_upper:
      return harmonic_dipole_term(jp, mp, j, m, mu, component);
    case Wavefunction::Form::single_lower: {
      const auto t = harmonic_dipole_term(jp, mp, j, m, mu, component);
      return charge_sign(op, 1) < 0 ? -t : t;
    }
    case Wavefunction::Form::spinor: {
      const auto upper = harmonic_dipole_term(jp, mp, j, m, mu, component);
      auto lower = harmonic_dipole_term(jp, mp, j, m, -mu, component);
      if (charge_sign(op, 1) < 0) lower = -lower;
      auto sum = exact_sum(upper, lower);
      if (!sum) throw std::logic_error("spinor closed form left the exact closure");
      return *sum;
    }
  }
  return SignedSqrtRational::zero();
}

/// Closed form for the wavefunction pairing each operator is used with: the
/// pseudoscalar operator between single-component states (Phi_mu, 0), the
/// scalar operator between spinors (Phi_mu, Phi_-mu). Lowered to complex and
/// multiplied by c_prime.
inline Complex matrix_element_closed_form(HalfInt jp, HalfInt mp, HalfInt j, HalfInt m,
                                          HalfInt mu, DipoleComponent component,
                                          ChargeOperatorKind op, Complex c_prime = 1.0) {
  const auto form = op == ChargeOperatorKind::pseudoscalar_sigma3 ? Wavefunction::Form::single_upper
                                                                  : Wavefunction::Form::spinor;
  try {
    return c_prime * closed_form_exact(jp, mp, j, m, mu, component, op, form).to_double();
  } catch (const DomainError&) {
    return 0.0;
  }
}

inline Wavefunction table_wavefunction(const MonopoleHarmonicIndex& idx, ChargeOperatorKind op) {
  return op == ChargeOperatorKind::pseudoscalar_sigma3 ? Wavefunction::single_upper(idx)
                                                       : Wavefunction::spinor(idx);
}

// Tables --------------------------------------------------------------------

inline constexpr double kAllowedThreshold = 1e-8;
inline constexpr double kDualAgreementTolerance = 1e-8;

enum class Verdict { allowed, forbidden };

inline const char* to_string(Verdict v) { return v == Verdict::allowed ? "allowed" : "forbidden"; }

struct TransitionRecord {
  HalfInt j, m;    // initial state (ket)
  HalfInt jp, mp;  // final state (bra)
  DipoleComponent component;
  ChargeOperatorKind op;
  Complex value_quadrature;
  Complex value_closed_form;  // C'-scaled
  SignedSqrtRational closed_form_exact;  // before C'
  Verdict verdict;
  bool dual_agreement;
};

struct TransitionTable {
  HalfInt j_max;
  HalfInt mu;
  ChargeOperatorKind op;
  int n_theta = 0, n_phi = 0;
  /// Fitted C' per component (z, plus, minus).
  std::array<Complex, 3> c_prime{};
  std::vector<TransitionRecord> records;

  bool all_agree() const {
    for (const auto& r : records)
      if (!r.dual_agreement) return false;
    return true;
  }
};

/// Quantum numbers (j, m) with |mu| <= j <= j_max and j - mu integer, in
/// ascending (j, m) order.
inline std::vector<MonopoleHarmonicIndex> harmonic_indices(HalfInt j_max, HalfInt mu) {
  std::vector<MonopoleHarmonicIndex> out;
  for (HalfInt j = abs(mu); j <= j_max; j += HalfInt(1)) {
    for (HalfInt m = -j; m <= j; m += HalfInt(1)) out.emplace_back(j, m, mu);
  }
  return out;
}

inline TransitionTable selection_table(HalfInt j_max, HalfInt mu, ChargeOperatorKind op,
                                       const SphereGrid& grid) {
  if (j_max < abs(mu)) throw DomainError("j_max must be at least |mu|");
  GridSampleCache cache(grid);
  const auto states = harmonic_indices(j_max, mu);
  TransitionTable table{j_max, mu, op, grid.n_theta(), grid.n_phi(), {}, {}};
  std::array<bool, 3> fitted{false, false, false};

  for (const auto& ket : states) {
    for (const auto& bra : states) {
      for (const auto component : kDipoleComponents) {
        const auto exact = closed_form_exact(bra.j(), bra.m(), ket.j(), ket.m(), mu, component, op,
                                             table_wavefunction(ket, op).form());
        const Complex quad = matrix_element_quadrature(
            table_wavefunction(bra, op), table_wavefunction(ket, op), component, op, cache);
        table.records.push_back({ket.j(), ket.m(), bra.j(), bra.m(), component, op, quad, 0.0,
                                 exact, Verdict::forbidden, false});
        // The first transition with a non-negligible closed form fixes C'.
        const auto ci = component_slot(component);
        const double unscaled = exact.to_double();
        if (!fitted[ci] && std::abs(unscaled) > kAllowedThreshold) {
          table.c_prime[ci] = quad / unscaled;
          fitted[ci] = true;
        }
      }
    }
  }
  for (auto& r : table.records) {
    const auto ci = component_slot(r.component);
    r.value_closed_form = table.c_prime[ci] * r.closed_form_exact.to_double();
    r.dual_agreement = std::abs(r.value_quadrature - r.value_closed_form) <= kDualAgreementTolerance;
    r.verdict = (std::abs(r.value_quadrature) > kAllowedThreshold &&
                 std::abs(r.value_closed_form) > kAllowedThreshold)
                    ? Verdict::allowed
                    : Verdict::forbidden;
  }
  return table;
}

// Twofold check ---------------------------------------------------------------

struct TwofoldEntry {
  DipoleComponent component;
  HalfInt m, mp;
  Complex single_quadrature;             // (Phi_mu, 0) with r sigma_3
  Complex spinor_quadrature;             // (Phi_mu, phase Phi_-mu) with r sigma_3
  Complex spinor_normalized_quadrature;  // same spinor scaled by 1/sqrt(2)
  Complex spinor_scalar_quadrature;      // spinor with r I
  double single_closed = 0.0, spinor_closed = 0.0;  // without C'
  /// |spinor| / |single|; empty when the single-component value vanishes.
  std::optional<double> ratio, ratio_normalized, ratio_scalar, ratio_closed;
};

struct TwofoldReport {
  HalfInt jp, j, mu;
  Complex relative_phase;
  std::vector<TwofoldEntry> entries;        // j -> j'
  std::vector<TwofoldEntry> delta_j0;       // j -> j diagnostic
  /// Quadrature and closed-form ratios agree within 1e-8 wherever defined.
  bool consistent = true;
};

namespace detail {

inline std::vector<TwofoldEntry> twofold_entries(HalfInt jp, HalfInt j, HalfInt mu, Complex phase,
                                                 GridSampleCache& cache, bool& consistent) {
  std::vector<TwofoldEntry> out;
  const auto sigma3 = ChargeOperatorKind::pseudoscalar_sigma3;
  for (const auto component : kDipoleComponents) {
    const HalfInt k(spherical_index(component));
    for (HalfInt m = -j; m <= j; m += HalfInt(1)) {
      const HalfInt mp = m + k;
      if (abs(mp) > jp) continue;
      const MonopoleHarmonicIndex ket(j, m, mu), bra(jp, mp, mu);
      TwofoldEntry e{component, m, mp, {}, {}, {}, {}, 0.0, 0.0, {}, {}, {}, {}};
      e.single_quadrature = matrix_element_quadrature(
          Wavefunction::single_upper(bra), Wavefunction::single_upper(ket), component, sigma3, cache);
      e.spinor_quadrature = matrix_element_quadrature(
          Wavefunction::spinor(bra, phase), Wavefunction::spinor(ket, phase), component, sigma3, cache);
      const double half = 1.0 / std::sqrt(2.0);
      e.spinor_normalized_quadrature =
          matrix_element_quadrature(Wavefunction::spinor(bra, phase, half),
                                    Wavefunction::spinor(ket, phase, half), component, sigma3, cache);
      e.spinor_scalar_quadrature = matrix_element_quadrature(
          Wavefunction::spinor(bra, phase), Wavefunction::spinor(ket, phase), component,
          ChargeOperatorKind::scalar_identity, cache);
      e.single_closed =
          closed_form_exact(jp, mp, j, m, mu, component, sigma3, Wavefunction::Form::single_upper)
              .to_double();
      e.spinor_closed =
          closed_form_exact(jp, mp, j, m, mu, component, sigma3, Wavefunction::Form::spinor)
              .to_double();
      const double single = std::abs(e.single_quadrature);
      if (single > kAllowedThreshold) {
        e.ratio = std::abs(e.spinor_quadrature) / single;
        e.ratio_normalized = std::abs(e.spinor_normalized_quadrature) / single;
        e.ratio_scalar = std::abs(e.spinor_scalar_quadrature) / single;
      }
      if (std::abs(e.single_closed) > kAllowedThreshold) {
        e.ratio_closed = std::abs(e.spinor_closed) / std::abs(e.single_closed);
      }
      if (e.ratio.has_value() != e.ratio_closed.has_value() ||
          (e.ratio && std::abs(*e.ratio - *e.ratio_closed) > kDualAgreementTolerance)) {
        consistent = false;
      }
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace detail

/// Compares the r sigma_3 matrix element between spinors (Phi_mu, phase
/// Phi_-mu) with the one between single-component states (Phi_mu, 0), for
/// j -> j' with |j' - j| = 1, and the same for j -> j as a diagnostic.
inline TwofoldReport twofold_check(HalfInt jp, HalfInt j, HalfInt mu, Complex relative_phase,
                                   const SphereGrid& grid) {
  if (abs(jp - j) != HalfInt(1)) throw DomainError("twofold check needs |j' - j| = 1");
  if (std::abs(std::abs(relative_phase) - 1.0) > 1e-12) {
    throw DomainError("relative phase must have unit modulus");
  }
  GridSampleCache cache(grid);
  TwofoldReport rep{jp, j, mu, relative_phase, {}, {}, true};
  rep.entries = detail::twofold_entries(jp, j, mu, relative_phase, cache, rep.consistent);
  rep.delta_j0 = detail::twofold_entries(j, j, mu, relative_phase, cache, rep.consistent);
  return rep;
}

}  // namespace monopole

#endif  // MONOPOLE_SELECTION_RULES_HPP_
