// Copyright 2026 The bpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Subcommands:
//   decompose     closed-form Schmidt decomposition + density-matrix cross
//                 check and residual report
//   canonicalize  reduction to the two-parameter canonical form
//   simulate      canonicalize -> coincidence sampling -> estimation
//   selftest      embedded golden suite
//
// Exit codes: 0 all checks pass, 1 numerical tolerance violation, 2 input
// error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpq/core.hpp"
#include "bpq/measurement.hpp"
#include "bpq/oracle.hpp"
#include "bpq/rng.hpp"
#include "bpq/selftest.hpp"
#include "bpq/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace bpq;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Degrees at the CLI surface, radians internally. d/180 first so that the
// common angles map to exact binary fractions of pi.
double deg2rad(double d) { return (d / 180.0) * kPi; }
double rad2deg(double r) { return (r / kPi) * 180.0; }

struct CliParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int prec = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

std::string fmt_complex(const Complex& z) {
  std::string s = fmt(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += fmt(std::abs(z.imag()));
  s += "i";
  return s;
}

json json_complex(const Complex& z) { return json::array({z.real(), z.imag()}); }

json json_mode(const PolarizationMode& m) {
  return json{{"alpha_mag", std::abs(m.alpha)},
              {"alpha_phase_deg", rad2deg(std::arg(m.alpha))},
              {"beta_mag", std::abs(m.beta)},
              {"beta_phase_deg", rad2deg(std::arg(m.beta))}};
}

// Amplitude token: "re", "re,im", or "mag@phase_deg".
Complex parse_amplitude_token(const std::string& token) {
  auto to_double = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw CliParseError("bad number '" + text + "'");
    }
    if (used != text.size()) throw CliParseError("bad number '" + text + "'");
    return v;
  };
  if (const auto at = token.find('@'); at != std::string::npos) {
    const double mag = to_double(token.substr(0, at));
    const double deg = to_double(token.substr(at + 1));
    return std::polar(mag, deg2rad(deg));
  }
  if (const auto comma = token.find(','); comma != std::string::npos) {
    return {to_double(token.substr(0, comma)), to_double(token.substr(comma + 1))};
  }
  return {to_double(token), 0.0};
}

Complex parse_amplitude_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object() && j.contains("mag") && j.contains("phase_deg")) {
    return std::polar(j["mag"].get<double>(),
                      deg2rad(j["phase_deg"].get<double>()));
  }
  throw CliParseError(
      "amplitude must be a number, [re, im], or {\"mag\":, \"phase_deg\":}");
}

QutritState state_from_family(const std::string& family,
                              const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw CliParseError("family '" + family + "' takes " + std::to_string(n) +
                          " parameter(s)");
    }
  };
  if (family == "hv") {
    need(0);
    return make_qutrit(0.0, 1.0, 0.0);
  }
  if (family == "c2zero") {
    need(3);
    const double m1 = params[0];
    if (m1 < 0.0 || m1 > 1.0) throw CliParseError("|c1| must lie in [0, 1]");
    const double m3 = std::sqrt(std::max(1.0 - m1 * m1, 0.0));
    return make_qutrit(std::polar(m1, deg2rad(params[1])), 0.0,
                       std::polar(m3, deg2rad(params[2])));
  }
  if (family == "c3zero") {
    need(2);
    const double theta = deg2rad(params[0]);
    const double nn = std::sqrt(1.0 + std::cos(theta) * std::cos(theta));
    return make_qutrit(std::sqrt(2.0) * std::cos(theta) / nn,
                       std::polar(std::sin(theta) / nn, deg2rad(params[1])), 0.0);
  }
  throw CliParseError("unknown family '" + family +
                      "' (expected hv, c2zero, or c3zero)");
}

QutritState state_from_json_doc(const json& doc) {
  if (doc.contains("amplitudes")) {
    const json& a = doc["amplitudes"];
    if (!a.is_array() || a.size() != 3) {
      throw CliParseError("\"amplitudes\" must hold exactly three entries");
    }
    return make_qutrit(parse_amplitude_json(a[0]), parse_amplitude_json(a[1]),
                       parse_amplitude_json(a[2]));
  }
  if (doc.contains("family")) {
    std::vector<double> params;
    if (doc.contains("params")) {
      const json& p = doc["params"];
      const std::string family = doc["family"].get<std::string>();
      auto push = [&](const char* key) {
        if (p.contains(key)) params.push_back(p[key].get<double>());
      };
      if (family == "c2zero") {
        push("c1_mag");
        push("phi1_deg");
        push("phi3_deg");
      } else if (family == "c3zero") {
        push("theta_deg");
        push("phi_deg");
      }
      if (params.empty() && p.is_array()) {
        params = p.get<std::vector<double>>();
      }
    }
    return state_from_family(doc["family"].get<std::string>(), params);
  }
  throw CliParseError("input document needs \"amplitudes\" or \"family\"");
}

// Shared per-subcommand input options.
struct StateInput {
  std::string input_file;
  std::vector<std::string> amplitudes;
  std::string family;
  std::vector<double> params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input_file, "JSON input document");
    cmd->add_option("--amplitudes", amplitudes,
                    "three amplitudes: re | re,im | mag@phase_deg")
        ->expected(3);
    cmd->add_option("--family", family, "named family: hv | c2zero | c3zero");
    cmd->add_option("--params", params, "family parameters (degrees for angles)")
        ->delimiter(',');
  }

  QutritState resolve(json* echo) const {
    int sources = 0;
    sources += !input_file.empty();
    sources += !amplitudes.empty();
    sources += !family.empty();
    if (sources != 1) {
      throw CliParseError(
          "specify exactly one of --input, --amplitudes, --family");
    }
    QutritState q{};
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) throw CliParseError("cannot open '" + input_file + "'");
      json doc;
      try {
        in >> doc;
      } catch (const json::exception& e) {
        throw CliParseError(std::string("bad JSON input: ") + e.what());
      }
      q = state_from_json_doc(doc);
      (*echo)["input_file"] = input_file;
    } else if (!amplitudes.empty()) {
      q = make_qutrit(parse_amplitude_token(amplitudes[0]),
                      parse_amplitude_token(amplitudes[1]),
                      parse_amplitude_token(amplitudes[2]));
      (*echo)["amplitudes_raw"] = amplitudes;
    } else {
      q = state_from_family(family, params);
      (*echo)["family"] = family;
      if (!params.empty()) (*echo)["params"] = params;
    }
    (*echo)["state"] = {{"c1", json_complex(q.c1)},
                        {"c2", json_complex(q.c2)},
                        {"c3", json_complex(q.c3)}};
    return q;
  }
};

struct ToleranceSet {
  double kernel = tol::kKernel;
  double magic = 1e-12;
  double recon = tol::kRecon;
  double oracle = 1e-9;
  double canonical = 1e-10;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol-kernel", kernel, "kernel-equation residual limit");
    cmd->add_option("--tol-magic", magic, "magic-identity residual limit");
    cmd->add_option("--tol-recon", recon, "reconstruction overlap deficit limit");
    cmd->add_option("--tol-oracle", oracle, "analytic vs density-matrix limit");
    cmd->add_option("--tol-canonical", canonical, "canonical form residual limit");
  }
};

struct ResidualRow {
  std::string name;
  double value;
  double limit;
  bool ok;
};

class ResidualTable {
 public:
  void add(const std::string& name, double value, double limit) {
    rows_.push_back({name, value, limit, value <= limit});
  }

  bool all_ok() const {
    for (const auto& r : rows_) {
      if (!r.ok) return false;
    }
    return true;
  }

  const std::vector<ResidualRow>& rows() const { return rows_; }

  json to_json() const {
    json out = json::array();
    for (const auto& r : rows_) {
      out.push_back({{"name", r.name},
                     {"value", r.value},
                     {"limit", r.limit},
                     {"ok", r.ok}});
    }
    return out;
  }

  void print(std::ostream& os) const {
    os << "residuals\n";
    for (const auto& r : rows_) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "  %-22s %11.3e  limit %8.1e  %s\n",
                    r.name.c_str(), r.value, r.limit, r.ok ? "ok" : "VIOLATED");
      os << buf;
    }
  }

  std::string first_violation() const {
    for (const auto& r : rows_) {
      if (!r.ok) return r.name;
    }
    return {};
  }

 private:
  std::vector<ResidualRow> rows_;
};

void print_decomposition(std::ostream& os, const SchmidtDecomposition& d) {
  os << "decomposition\n";
  os << "  lambda_plus   " << fmt(d.lambda_plus) << "\n";
  os << "  lambda_minus  " << fmt(d.lambda_minus) << "\n";
  os << "  concurrence   " << fmt(d.concurrence) << "\n";
  os << "  schmidt_K     " << fmt(d.schmidt_number) << "\n";
  os << "  x             " << fmt(d.x_param) << "\n";
  os << "  phi0_deg      " << fmt(rad2deg(d.phi0)) << "\n";
  auto print_mode = [&](const char* name, const PolarizationMode& m) {
    os << "  " << name << "  |alpha| " << fmt(std::abs(m.alpha), 10)
       << "  arg " << fmt(rad2deg(std::arg(m.alpha)), 10) << " deg"
       << "  |beta| " << fmt(std::abs(m.beta), 10) << "  arg "
       << fmt(rad2deg(std::arg(m.beta)), 10) << " deg\n";
  };
  print_mode("mode_plus ", d.mode_plus);
  print_mode("mode_minus", d.mode_minus);
  if (d.mode_minus_null) {
    os << "  note          lambda_minus <= " << fmt(tol::kDegen)
       << "; minus mode is the orthogonal-complement fill\n";
  }
}

json json_decomposition(const SchmidtDecomposition& d) {
  return json{{"lambda_plus", d.lambda_plus},
              {"lambda_minus", d.lambda_minus},
              {"concurrence", d.concurrence},
              {"schmidt_number", d.schmidt_number},
              {"x", d.x_param},
              {"phi0_deg", rad2deg(d.phi0)},
              {"mode_plus", json_mode(d.mode_plus)},
              {"mode_minus", json_mode(d.mode_minus)},
              {"mode_minus_null", d.mode_minus_null}};
}

ResidualTable decomposition_residuals(const QutritState& q,
                                      const SchmidtDecomposition& d,
                                      const ToleranceSet& tols) {
  ResidualTable table;
  const CoefficientMatrix m = coefficient_matrix(q);
  table.add("kernel(mode_plus)", kernel_residual(m, d.mode_plus, d.lambda_plus),
            tols.kernel);
  if (!d.mode_minus_null) {
    table.add("kernel(mode_minus)",
              kernel_residual(m, d.mode_minus, d.lambda_minus), tols.kernel);
    table.add("orthogonality", std::abs(mode_dot(d.mode_plus, d.mode_minus)),
              tol::kOrtho);
  }
  table.add("magic identity", magic_residual(q), tols.magic);
  const QutritState back = reconstruct(d);
  const double overlap = std::abs(std::conj(back.c1) * q.c1 +
                                  std::conj(back.c2) * q.c2 +
                                  std::conj(back.c3) * q.c3);
  table.add("reconstruction", std::abs(1.0 - overlap), tols.recon);
  table.add("oracle discrepancy",
            compare_decompositions(d, con_eigen_modes(q)), tols.oracle);
  const CanonicalForm cf = canonicalize(q);
  const QutritState canon = apply_unitary(q, cf.unitary_used);
  table.add("canonical |c2'|", std::abs(canon.c2), tols.canonical);
  return table;
}

json json_canonical(const CanonicalForm& cf) {
  json u = json::array();
  for (int r = 0; r < 2; ++r) {
    u.push_back(json::array(
        {json_complex(cf.unitary_used(r, 0)), json_complex(cf.unitary_used(r, 1))}));
  }
  return json{{"lambda_plus", cf.lambda_plus},
              {"lambda_minus", cf.lambda_minus},
              {"phi_deg", rad2deg(cf.phi)},
              {"phi_undefined", cf.phi_undefined},
              {"unitary", u}};
}

int cmd_decompose(const StateInput& input, const ToleranceSet& tols,
                  bool as_json) {
  json echo;
  const QutritState q = input.resolve(&echo);
  const SchmidtDecomposition d = decompose(q);
  const ResidualTable residuals = decomposition_residuals(q, d, tols);
  const CanonicalForm cf = canonicalize(q);

  if (as_json) {
    json out{{"command", "decompose"},
             {"input", echo},
             {"decomposition", json_decomposition(d)},
             {"canonical", json_canonical(cf)},
             {"residuals", residuals.to_json()},
             {"ok", residuals.all_ok()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input\n  c1  " << fmt_complex(q.c1) << "\n  c2  "
              << fmt_complex(q.c2) << "\n  c3  " << fmt_complex(q.c3) << "\n";
    print_decomposition(std::cout, d);
    std::cout << "canonical\n  lambda_plus   " << fmt(cf.lambda_plus)
              << "\n  lambda_minus  " << fmt(cf.lambda_minus) << "\n  phi_deg       "
              << (cf.phi_undefined ? std::string("undefined (reported 0)")
                                   : fmt(rad2deg(cf.phi)))
              << "\n";
    residuals.print(std::cout);
  }
  if (!residuals.all_ok()) {
    std::cerr << "tolerance violated: " << residuals.first_violation() << "\n";
    return 1;
  }
  return 0;
}

int cmd_canonicalize(const StateInput& input, const ToleranceSet& tols,
                     bool as_json) {
  json echo;
  const QutritState q = input.resolve(&echo);
  const CanonicalForm cf = canonicalize(q);
  const QutritState canon = apply_unitary(q, cf.unitary_used);
  const QutritState target =
      make_qutrit(std::sqrt(std::max(cf.lambda_plus, 1e-300)), 0.0,
                  std::polar(std::sqrt(std::max(cf.lambda_minus, 0.0)),
                             2.0 * cf.phi));
  const double overlap = std::abs(std::conj(canon.c1) * target.c1 +
                                  std::conj(canon.c2) * target.c2 +
                                  std::conj(canon.c3) * target.c3);
  const PlateSequence plates = decompose_into_plates(cf.unitary_used);

  ResidualTable residuals;
  residuals.add("canonical |c2'|", std::abs(canon.c2), tols.canonical);
  residuals.add("canonical overlap", std::abs(1.0 - overlap), tols.canonical);

  if (as_json) {
    json out{{"command", "canonicalize"},
             {"input", echo},
             {"canonical", json_canonical(cf)},
             {"plates",
              {{"qwp1_deg", rad2deg(plates.qwp1)},
               {"hwp_deg", rad2deg(plates.hwp)},
               {"qwp2_deg", rad2deg(plates.qwp2)},
               {"global_phase_deg", rad2deg(plates.global_phase)}}},
             {"residuals", residuals.to_json()},
             {"ok", residuals.all_ok()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "canonical form\n";
    std::cout << "  lambda_plus   " << fmt(cf.lambda_plus) << "\n";
    std::cout << "  lambda_minus  " << fmt(cf.lambda_minus) << "\n";
    std::cout << "  phi_deg       "
              << (cf.phi_undefined ? std::string("undefined (reported 0)")
                                   : fmt(rad2deg(cf.phi)))
              << "\n";
    std::cout << "unitary (rows)\n";
    for (int r = 0; r < 2; ++r) {
      std::cout << "  [" << fmt_complex(cf.unitary_used(r, 0)) << ", "
                << fmt_complex(cf.unitary_used(r, 1)) << "]\n";
    }
    std::cout << "plate sequence: qwp " << fmt(rad2deg(plates.qwp1), 8)
              << " deg, hwp " << fmt(rad2deg(plates.hwp), 8) << " deg, qwp "
              << fmt(rad2deg(plates.qwp2), 8) << " deg, global phase "
              << fmt(rad2deg(plates.global_phase), 8) << " deg\n";
    residuals.print(std::cout);
  }
  if (!residuals.all_ok()) {
    std::cerr << "tolerance violated: " << residuals.first_violation() << "\n";
    return 1;
  }
  return 0;
}

int cmd_simulate(const StateInput& input, std::int64_t trials,
                 std::uint64_t seed, const std::vector<double>& angles_deg,
                 double phi_shift_deg, bool as_json) {
  json echo;
  const QutritState q = input.resolve(&echo);
  if (trials < 1) throw InvalidTrialsError("--trials must be >= 1");

  CanonicalForm cf = canonicalize(q);
  if (phi_shift_deg != 0.0) cf = shift_phase(cf, deg2rad(phi_shift_deg));
  const QutritState prepared = apply_unitary(q, cf.unitary_used);

  std::vector<std::pair<MeasurementSetting, CountRecord>> records;
  json json_records = json::array();
  std::uint64_t stream = 0;
  for (const double deg : angles_deg) {
    const MeasurementSetting setting{deg2rad(deg), {}};
    const CountRecord rec = sample_counts(prepared, setting, trials,
                                          derive_stream(seed, stream++));
    records.emplace_back(setting, rec);
    json_records.push_back({{"angle_deg", deg},
                            {"n_total", rec.n_total},
                            {"n_both_t", rec.n_both_t},
                            {"n_both_r", rec.n_both_r},
                            {"n_coinc", rec.n_coinc}});
  }
  const EstimationResult est = estimate(records);

  const double true_phi = cf.phi_undefined ? 0.0 : cf.phi;
  if (as_json) {
    json out{{"command", "simulate"},
             {"input", echo},
             {"trials", trials},
             {"seed", seed},
             {"true",
              {{"lambda_plus", cf.lambda_plus},
               {"lambda_minus", cf.lambda_minus},
               {"phi_deg", rad2deg(true_phi)},
               {"phi_undefined", cf.phi_undefined}}},
             {"records", json_records},
             {"estimate",
              {{"lambda_plus_hat", est.lambda_plus_hat},
               {"lambda_minus_hat", est.lambda_minus_hat},
               {"lambda_std_error", est.lambda_std_error},
               {"phi_hat_deg", rad2deg(est.phi_hat)},
               {"phi_std_error_deg", rad2deg(est.phi_std_error)},
               {"phi_identifiable", est.phi_identifiable},
               {"n_used", est.n_used}}}};
    if (std::isfinite(est.swap_check)) out["estimate"]["swap_check"] = est.swap_check;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "simulate  trials " << trials << "  seed " << seed << "\n";
    std::cout << "true      lambda_plus " << fmt(cf.lambda_plus)
              << "  lambda_minus " << fmt(cf.lambda_minus) << "  phi_deg "
              << (cf.phi_undefined ? std::string("undefined")
                                   : fmt(rad2deg(true_phi)))
              << "\n";
    for (const auto& r : json_records) {
      std::cout << "  angle " << fmt(r["angle_deg"].get<double>(), 6)
                << " deg  both_t " << r["n_both_t"] << "  both_r "
                << r["n_both_r"] << "  coinc " << r["n_coinc"] << "\n";
    }
    std::cout << "estimate  lambda_plus_hat " << fmt(est.lambda_plus_hat)
              << " +- " << fmt(est.lambda_std_error, 4) << "\n";
    if (est.phi_identifiable) {
      std::cout << "          phi_hat_deg " << fmt(rad2deg(est.phi_hat))
                << " +- " << fmt(rad2deg(est.phi_std_error), 4) << "\n";
    } else {
      std::cout << "          phi unidentifiable (concurrence too small)\n";
    }
    if (std::isfinite(est.swap_check)) {
      std::cout << "          90deg swap check " << fmt(est.swap_check, 4)
                << "\n";
    }
  }
  return 0;
}

int cmd_selftest(int random_states, std::uint64_t seed, bool corrupt) {
  SelftestOptions opts;
  opts.random_states = random_states;
  opts.seed = seed;
  opts.corrupt_fixture = corrupt;
  const SelftestSummary s = run_selftest(opts, std::cout);
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt decomposition toolkit for biphoton polarization qutrits"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  StateInput dec_input, canon_input, sim_input;
  ToleranceSet dec_tols, canon_tols;

  CLI::App* dec = app.add_subcommand("decompose",
                                     "analytic Schmidt decomposition with "
                                     "density-matrix cross check");
  dec_input.attach(dec);
  dec_tols.attach(dec);

  CLI::App* canon =
      app.add_subcommand("canonicalize", "reduce to the canonical two-parameter form");
  canon_input.attach(canon);
  canon_tols.attach(canon);

  CLI::App* sim = app.add_subcommand(
      "simulate", "coincidence-measurement simulation and estimation");
  sim_input.attach(sim);
  std::int64_t trials = 1000000;
  std::uint64_t seed = 1;
  std::vector<double> angles_deg{0.0, 45.0};
  double phi_shift_deg = 0.0;
  sim->add_option("--trials", trials, "trials per beam-splitter angle");
  sim->add_option("--seed", seed, "random seed");
  sim->add_option("--angles", angles_deg,
                  "beam-splitter angles in degrees (0 and 45 feed the "
                  "estimator, 90 adds the swap check)")
      ->delimiter(',');
  sim->add_option("--phi-shift", phi_shift_deg,
                  "extra canonical phase in degrees, applied by phase plates "
                  "after canonicalization");

  CLI::App* self = app.add_subcommand("selftest", "run the embedded golden suite");
  int random_states = 1000;
  std::uint64_t self_seed = 0x5eed;
  bool corrupt = false;
  self->add_option("--random", random_states, "number of random cross-check states");
  self->add_option("--seed", self_seed, "random seed");
  self->add_flag("--corrupt-fixture", corrupt,
                 "perturb one golden value (negative control; must fail)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(dec_input, dec_tols, as_json);
    if (canon->parsed()) return cmd_canonicalize(canon_input, canon_tols, as_json);
    if (sim->parsed()) {
      return cmd_simulate(sim_input, trials, seed, angles_deg, phi_shift_deg,
                          as_json);
    }
    if (self->parsed()) return cmd_selftest(random_states, self_seed, corrupt);
  } catch (const CliParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroStateError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NonFiniteError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTrialsError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MissingSettingError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
