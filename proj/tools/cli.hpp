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

#ifndef MONOPOLE_TOOLS_CLI_HPP_
#define MONOPOLE_TOOLS_CLI_HPP_

// Command-line front end. Every command is a thin wrapper over one library
// call and prints an OutputRecord:
//
//   {"command", "parameters", "results", "tolerances", "pass"}
//
// as JSON with a fixed key order (selection-table can also emit CSV).
// Exit codes: 0 success, 1 a verification flag is false, 2 usage error.

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monopole/monopole.hpp"

namespace monopole::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Raised for a bad command-line value; names the offending argument.
class ArgumentError : public std::runtime_error {
 public:
  ArgumentError(const std::string& argument, const std::string& what)
      : std::runtime_error("argument '" + argument + "': " + what) {}
};

inline HalfInt parse_half(const std::string& name, const std::string& text) {
  try {
    return HalfInt::parse(text);
  } catch (const DomainError& e) {
    throw ArgumentError(name, e.what());
  }
}

inline double parse_real(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError(name, "cannot parse real number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ArgumentError(name, "cannot parse real number '" + text + "'");
  }
  return v;
}

inline Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json matrix_json(const Matrix2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Json output_record(const std::string& command, Json parameters, Json results,
                          Json tolerances, Json pass) {
  Json out;
  out["command"] = command;
  out["parameters"] = std::move(parameters);
  out["results"] = std::move(results);
  out["tolerances"] = std::move(tolerances);
  out["pass"] = std::move(pass);
  return out;
}

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Commands ------------------------------------------------------------------

inline Json cmd_harmonic(const std::string& j_text, const std::string& m_text,
                         const std::string& mu_text, const std::string& theta_text,
                         const std::string& phi_text) {
  const HalfInt j = parse_half("j", j_text);
  const HalfInt m = parse_half("m", m_text);
  const HalfInt mu = parse_half("mu", mu_text);
  const double theta = parse_real("theta", theta_text);
  const double phi = parse_real("phi", phi_text);
  if (j < HalfInt(0)) throw ArgumentError("j", "j must be non-negative");
  if (abs(m) > j) throw ArgumentError("m", "|m| exceeds j");
  if (abs(mu) > j) throw ArgumentError("mu", "|mu| exceeds j");
  if (!(j - m).is_integer()) throw ArgumentError("m", "j - m is not an integer");
  if (!(j - mu).is_integer()) throw ArgumentError("mu", "j - mu is not an integer");
  std::optional<SphericalPoint> point;
  try {
    point.emplace(theta, phi);
  } catch (const DomainError& e) {
    throw ArgumentError("theta", e.what());
  }
  const MonopoleHarmonicIndex idx(j, m, mu);
  const MonopoleHarmonic y(idx);
  const ParityImage image = parity_map(idx, *point);

  Json parity;
  parity["reflected_theta"] = image.point.theta();
  parity["reflected_phi"] = image.point.phi();
  parity["image_mu"] = image.index.mu().to_string();
  parity["ratio"] = image.ratio ? complex_json(*image.ratio) : Json(nullptr);
  parity["gauge_factor"] = complex_json(image.gauge_factor);
  parity["phase"] = image.phase ? complex_json(*image.phase) : Json(nullptr);

  Json results;
  results["value"] = complex_json(y(*point));
  results["normalization"] = y.normalization();
  results["parity"] = parity;
  return output_record("harmonic",
                       Json{{"j", j.to_string()}, {"m", m.to_string()}, {"mu", mu.to_string()},
                            {"theta", point->theta()}, {"phi", point->phi()}},
                       results, Json::object(), Json::object());
}

inline Json cmd_wigner3j(const std::vector<std::string>& args) {
  static const char* names[] = {"j1", "j2", "j3", "m1", "m2", "m3"};
  std::array<HalfInt, 6> v;
  for (std::size_t i = 0; i < 6; ++i) v[i] = parse_half(names[i], args.at(i));
  const ThreeJArgs a{v[0], v[1], v[2], v[3], v[4], v[5]};
  SignedSqrtRational value;
  try {
    value = three_j(a);
  } catch (const DomainError& e) {
    throw ArgumentError("wigner3j", e.what());
  }
  Json params;
  for (std::size_t i = 0; i < 6; ++i) params[names[i]] = v[i].to_string();
  Json results;
  results["sign"] = value.sign();
  results["radicand"] = to_string(value.radicand());
  results["value"] = value.to_double();
  results["exact"] = value.to_string();
  return output_record("wigner3j", params, results, Json::object(), Json::object());
}

inline AbelianizationVariant parse_variant(const std::string& text) {
  if (text == "direct") return AbelianizationVariant::direct;
  if (text == "parity") return AbelianizationVariant::parity;
  throw ArgumentError("variant", "expected 'direct' or 'parity', got '" + text + "'");
}

inline Json cmd_gauge_check(int samples, std::uint64_t seed, const std::string& variant_text,
                            double tolerance) {
  if (samples < 1) throw ArgumentError("samples", "must be at least 1");
  const auto variant = parse_variant(variant_text);
  const auto rep = abelianization_check(samples, seed, variant, tolerance);
  Json results;
  results["max_off_diagonal"] = rep.max_off_diagonal;
  results["fitted_c"] = rep.mean_c;
  results["c_spread"] = rep.c_spread;
  results["max_fit_residual"] = rep.max_fit_residual;
  results["coupling"] = kAbelianizationCoupling;
  results["string_direction"] = Json::array({0.0, 0.0, -1.0});
  return output_record(
      "gauge-check",
      Json{{"samples", samples}, {"seed", seed}, {"variant", to_string(variant)}},
      results, Json{{"off_diagonal", tolerance}, {"c_spread", tolerance}, {"fit_residual", tolerance}},
      Json{{"abelianization", rep.pass}});
}

inline ChargeOperatorKind parse_operator(const std::string& text) {
  if (text == "pseudoscalar") return ChargeOperatorKind::pseudoscalar_sigma3;
  if (text == "scalar") return ChargeOperatorKind::scalar_identity;
  throw ArgumentError("operator", "expected 'pseudoscalar' or 'scalar', got '" + text + "'");
}

inline void check_grid_sizes(int n_theta, int n_phi) {
  if (n_theta < 2) throw ArgumentError("ntheta", "must be at least 2");
  if (n_phi < 2) throw ArgumentError("nphi", "must be at least 2");
}

inline std::string selection_table_csv(const TransitionTable& table) {
  std::ostringstream out;
  out << "j,m,j_prime,m_prime,component,operator,re_value,im_value,verdict,dual_agreement\n";
  for (const auto& r : table.records) {
    out << r.j.to_string() << ',' << r.m.to_string() << ',' << r.jp.to_string() << ','
        << r.mp.to_string() << ',' << to_string(r.component) << ',' << to_string(r.op) << ','
        << format_real(r.value_quadrature.real()) << ',' << format_real(r.value_quadrature.imag())
        << ',' << to_string(r.verdict) << ',' << (r.dual_agreement ? "true" : "false") << '\n';
  }
  return out.str();
}

inline Json selection_table_json(const TransitionTable& table) {
  Json records = Json::array();
  for (const auto& r : table.records) {
    Json rec;
    rec["j"] = r.j.to_string();
    rec["m"] = r.m.to_string();
    rec["j_prime"] = r.jp.to_string();
    rec["m_prime"] = r.mp.to_string();
    rec["component"] = to_string(r.component);
    rec["operator"] = to_string(r.op);
    rec["value_quadrature"] = complex_json(r.value_quadrature);
    rec["value_closed_form"] = complex_json(r.value_closed_form);
    rec["closed_form_exact"] = r.closed_form_exact.to_string();
    rec["verdict"] = to_string(r.verdict);
    rec["dual_agreement"] = r.dual_agreement;
    records.push_back(rec);
  }
  Json c_prime;
  for (const auto c : kDipoleComponents) c_prime[to_string(c)] = complex_json(table.c_prime[component_slot(c)]);
  std::size_t allowed = 0;
  for (const auto& r : table.records) allowed += r.verdict == Verdict::allowed;
  Json results;
  results["c_prime"] = c_prime;
  results["allowed_count"] = allowed;
  results["records"] = records;
  return output_record(
      "selection-table",
      Json{{"jmax", table.j_max.to_string()}, {"mu", table.mu.to_string()},
           {"operator", to_string(table.op)}, {"ntheta", table.n_theta}, {"nphi", table.n_phi}},
      results,
      Json{{"allowed_threshold", kAllowedThreshold}, {"dual_agreement", kDualAgreementTolerance}},
      Json{{"dual_agreement", table.all_agree()}});
}

inline constexpr double kDiagonalSpreadTolerance = 1e-10;

inline Json cmd_orthonormality(const std::string& jmax_text, const std::string& mu_text,
                               int n_theta, int n_phi, double tolerance) {
  const HalfInt j_max = parse_half("jmax", jmax_text);
  const HalfInt mu = parse_half("mu", mu_text);
  if (j_max < abs(mu)) throw ArgumentError("jmax", "must be at least |mu|");
  check_grid_sizes(n_theta, n_phi);
  const SphereGrid grid(n_theta, n_phi);
  const auto s = gram_summary(j_max, mu, grid);
  Json results;
  results["states"] = s.states;
  results["max_off_diagonal"] = s.max_off_diagonal;
  results["diagonal_mean"] = s.diagonal_mean;
  results["diagonal_spread"] = s.diagonal_spread;
  const bool ok_off = s.max_off_diagonal <= tolerance;
  const bool ok_diag = s.diagonal_spread <= kDiagonalSpreadTolerance;
  return output_record(
      "orthonormality",
      Json{{"jmax", j_max.to_string()}, {"mu", mu.to_string()}, {"ntheta", n_theta}, {"nphi", n_phi}},
      results, Json{{"off_diagonal", tolerance}, {"diagonal_spread", kDiagonalSpreadTolerance}},
      Json{{"off_diagonal", ok_off}, {"diagonal_spread", ok_diag}});
}

/// True when every flag under "pass" is true.
inline bool all_pass(const Json& record) {
  for (const auto& [key, value] : record.at("pass").items()) {
    if (!value.get<bool>()) return false;
  }
  return true;
}

// Dispatch --------------------------------------------------------------------

/// Runs the CLI on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Charge-monopole angular algebra: monopole harmonics, exact 3-j symbols, "
               "gauge abelianization checks and dipole selection-rule tables.",
               "monopole"};
  app.require_subcommand(1);

  std::string format = "json";
  int n_theta = SphereGrid::kDefaultTheta, n_phi = SphereGrid::kDefaultPhi;
  double tolerance = 1e-9;

  std::vector<std::string> harmonic_args;
  auto* harmonic = app.add_subcommand("harmonic", "Evaluate Y_{j m mu}(theta, phi)");
  harmonic->add_option("args", harmonic_args, "j m mu theta phi")->expected(5)->required();

  std::vector<std::string> w3j_args;
  auto* w3j = app.add_subcommand("wigner3j", "Exact Wigner 3-j symbol");
  w3j->add_option("args", w3j_args, "j1 j2 j3 m1 m2 m3")->expected(6)->required();

  int samples = 1000;
  std::uint64_t seed = 42;
  std::string variant = "direct";
  double gauge_tolerance = 1e-10;
  auto* gauge = app.add_subcommand("gauge-check", "Abelianization of the Wu-Yang potential");
  gauge->add_option("--samples", samples, "number of random points")->capture_default_str();
  gauge->add_option("--seed", seed, "SplitMix64 seed")->capture_default_str();
  gauge->add_option("--variant", variant, "direct | parity")->capture_default_str();
  gauge->add_option("--tolerance", gauge_tolerance, "pass threshold")->capture_default_str();

  std::string jmax_text = "3/2", mu_text = "1/2", op_text = "pseudoscalar";
  auto* table = app.add_subcommand("selection-table", "Dipole selection-rule table");
  table->add_option("--jmax", jmax_text, "largest j, e.g. 9/2")->capture_default_str();
  table->add_option("--mu", mu_text, "charge-monopole product eg")->capture_default_str();
  table->add_option("--operator", op_text, "pseudoscalar | scalar")->capture_default_str();
  table->add_option("--format", format, "json | csv")->capture_default_str();
  table->add_option("--ntheta", n_theta, "Gauss-Legendre nodes")->capture_default_str();
  table->add_option("--nphi", n_phi, "azimuthal nodes")->capture_default_str();

  auto* ortho = app.add_subcommand("orthonormality", "Gram matrix of monopole harmonics");
  ortho->add_option("--jmax", jmax_text, "largest j")->capture_default_str();
  ortho->add_option("--mu", mu_text, "charge-monopole product eg")->capture_default_str();
  ortho->add_option("--ntheta", n_theta, "Gauss-Legendre nodes")->capture_default_str();
  ortho->add_option("--nphi", n_phi, "azimuthal nodes")->capture_default_str();
  ortho->add_option("--tolerance", tolerance, "off-diagonal threshold")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Json record;
    if (harmonic->parsed()) {
      record = cmd_harmonic(harmonic_args[0], harmonic_args[1], harmonic_args[2], harmonic_args[3],
                            harmonic_args[4]);
    } else if (w3j->parsed()) {
      record = cmd_wigner3j(w3j_args);
    } else if (gauge->parsed()) {
      record = cmd_gauge_check(samples, seed, variant, gauge_tolerance);
    } else if (table->parsed()) {
      const HalfInt j_max = parse_half("jmax", jmax_text);
      const HalfInt mu = parse_half("mu", mu_text);
      const auto op = parse_operator(op_text);
      if (format != "json" && format != "csv") {
        throw ArgumentError("format", "expected 'json' or 'csv', got '" + format + "'");
      }
      if (j_max < abs(mu)) throw ArgumentError("jmax", "must be at least |mu|");
      check_grid_sizes(n_theta, n_phi);
      const auto t = selection_table(j_max, mu, op, SphereGrid(n_theta, n_phi));
      if (format == "csv") {
        out << selection_table_csv(t);
        return t.all_agree() ? kExitOk : kExitVerificationFailed;
      }
      record = selection_table_json(t);
    } else if (ortho->parsed()) {
      record = cmd_orthonormality(jmax_text, mu_text, n_theta, n_phi, tolerance);
    }
    out << record.dump(2) << "\n";
    return all_pass(record) ? kExitOk : kExitVerificationFailed;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace monopole::cli

#endif  // MONOPOLE_TOOLS_CLI_HPP_
