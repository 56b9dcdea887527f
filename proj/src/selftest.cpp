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

#include "bpq/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "bpq/core.hpp"
#include "bpq/oracle.hpp"
#include "bpq/rng.hpp"
#include "bpq/transforms.hpp"

namespace bpq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt1_2 = 0.70710678118654752440084436210485;

double mode_distance_up_to_sign(const PolarizationMode& a,
                                const PolarizationMode& b) {
  const Eigen::Vector2cd va = a.vector(), vb = b.vector();
  return std::min((va - vb).norm(), (va + vb).norm());
}

class CheckTable {
 public:
  CheckTable(std::ostream& out) : out_(out) {}

  void record(const std::string& name, double worst, double limit) {
    const bool pass = worst <= limit;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[%s] %-34s worst %.3e  limit %.1e\n",
                  pass ? "PASS" : "FAIL", name.c_str(), worst, limit);
    out_ << buf;
    ++total_;
    if (!pass) ++failed_;
  }

  SelftestSummary summary() const { return {total_, failed_}; }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& options, std::ostream& out) {
  CheckTable table(out);

  // |1H,1V>: lambda = 1/2, modes (1,1)/sqrt2 and i(-1,1)/sqrt2 up to sign.
  {
    const QutritState q = make_qutrit(0.0, 1.0, 0.0);
    const SchmidtDecomposition d = decompose(q);
    PolarizationMode want_p{kSqrt1_2, kSqrt1_2};
    const PolarizationMode want_m{Complex(0.0, -kSqrt1_2), Complex(0.0, kSqrt1_2)};
    if (options.corrupt_fixture) want_p.alpha += 1e-6;
    const double worst = std::max(
        {std::abs(d.lambda_plus - 0.5), std::abs(d.lambda_minus - 0.5),
         std::abs(d.concurrence - 1.0), std::abs(d.schmidt_number - 2.0),
         mode_distance_up_to_sign(d.mode_plus, want_p),
         mode_distance_up_to_sign(d.mode_minus, want_m)});
    table.record("golden |1H,1V> decomposition", worst, 1e-12);
  }

  // c2 = 0 family: lambda = (|c1|^2, |c3|^2), modes (e^{i phi1/2}, 0) and
  // (0, e^{i phi3/2}).
  {
    const double mags[] = {0.75, 0.8, 0.85, 0.9, 0.95};
    const double phases[][2] = {{0.0, 0.0},   {0.7, -1.2}, {kPi / 2, kPi / 4},
                                {-2.5, 3.0},  {kPi, -kPi / 2}, {1.1, 2.2},
                                {-0.3, -3.0}, {2.9, 0.4}};
    double worst = 0.0;
    for (const double m1 : mags) {
      const double m3 = std::sqrt(1.0 - m1 * m1);
      for (const auto& [p1, p3] : phases) {
        const QutritState q =
            make_qutrit(std::polar(m1, p1), 0.0, std::polar(m3, p3));
        const SchmidtDecomposition d = decompose(q);
        const PolarizationMode want_p{std::polar(1.0, p1 / 2.0), 0.0};
        const PolarizationMode want_m{0.0, std::polar(1.0, p3 / 2.0)};
        worst = std::max(
            {worst, std::abs(d.lambda_plus - m1 * m1),
             std::abs(d.lambda_minus - m3 * m3),
             mode_distance_up_to_sign(d.mode_plus, want_p),
             mode_distance_up_to_sign(d.mode_minus, want_m)});
      }
    }
    table.record("golden c2=0 grid (5x8)", worst, 1e-12);
  }

  // c3 = 0 family: C = sin^2/(1+cos^2), lambda = (1 +- |cos|)^2/(2(1+cos^2)),
  // x = |cos|, modes (cos(t/2), e^{i phi} sin(t/2)) and
  // i(-sin(t/2), e^{i phi} cos(t/2)); the pair swaps roles for cos < 0.
  {
    const double thetas[] = {0.1, 0.5, kPi / 3, kPi / 2, 2.5};
    const double phis[] = {0.0, 0.7, kPi / 2, -2.0};
    double worst_scalar = 0.0, worst_mode = 0.0;
    for (const double th : thetas) {
      const double ct = std::cos(th);
      const double nn = std::sqrt(1.0 + ct * ct);
      for (const double ph : phis) {
        const QutritState q = make_qutrit(
            std::sqrt(2.0) * ct / nn, std::polar(std::sin(th) / nn, ph), 0.0);
        const SchmidtDecomposition d = decompose(q);
        const double c_want =
            std::sin(th) * std::sin(th) / (1.0 + ct * ct);
        const double lam_hi =
            (1.0 + std::abs(ct)) * (1.0 + std::abs(ct)) / (2.0 * (1.0 + ct * ct));
        worst_scalar = std::max({worst_scalar, std::abs(d.concurrence - c_want),
                                 std::abs(d.lambda_plus - lam_hi),
                                 std::abs(d.lambda_minus - (1.0 - lam_hi))});
        if (th != kPi / 2) {
          worst_scalar =
              std::max(worst_scalar, std::abs(d.x_param - std::abs(ct)));
        }
        const PolarizationMode paper_p{std::cos(th / 2.0),
                                       std::polar(std::sin(th / 2.0), ph)};
        const PolarizationMode paper_m{
            Complex(0.0, 1.0) * -std::sin(th / 2.0),
            Complex(0.0, 1.0) * std::polar(std::cos(th / 2.0), ph)};
        const PolarizationMode& want_p = ct >= 0.0 ? paper_p : paper_m;
        const PolarizationMode& want_m = ct >= 0.0 ? paper_m : paper_p;
        worst_mode =
            std::max({worst_mode, mode_distance_up_to_sign(d.mode_plus, want_p),
                      mode_distance_up_to_sign(d.mode_minus, want_m)});
      }
    }
    table.record("golden c3=0 grid scalars (5x4)", worst_scalar, 1e-12);
    table.record("golden c3=0 grid modes", worst_mode, 1e-10);
  }

  // Random cross-checks of the analytic route against the density-matrix
  // route, plus the per-state identities.
  {
    double worst_compare = 0.0, worst_kernel = 0.0, worst_magic = 0.0;
    double worst_lambda = 0.0, worst_overlap = 0.0, worst_canonical = 0.0;
    const int n = std::max(options.random_states, 1);
    for (int i = 0; i < n; ++i) {
      const QutritState q = haar_qutrit(options.seed, static_cast<std::uint64_t>(i));
      const SchmidtDecomposition d = decompose(q);
      const SchmidtDecomposition o = con_eigen_modes(q);
      worst_compare = std::max(worst_compare, compare_decompositions(d, o));

      const CoefficientMatrix m = coefficient_matrix(q);
      worst_kernel =
          std::max({worst_kernel, kernel_residual(m, d.mode_plus, d.lambda_plus),
                    d.mode_minus_null
                        ? 0.0
                        : kernel_residual(m, d.mode_minus, d.lambda_minus)});
      worst_magic = std::max(worst_magic, magic_residual(q));

      const auto [lp, lm] = lambdas(q);
      const auto eig = eig_hermitian_2x2(reduced_density_matrix(q));
      worst_lambda = std::max({worst_lambda, std::abs(lp - eig.first.value),
                               std::abs(lm - eig.second.value)});

      const QutritState back = reconstruct(d);
      const double overlap = std::abs(std::conj(back.c1) * q.c1 +
                                      std::conj(back.c2) * q.c2 +
                                      std::conj(back.c3) * q.c3);
      worst_overlap = std::max(worst_overlap, std::abs(1.0 - overlap));

      const CanonicalForm cf = canonicalize(q);
      const QutritState canon = apply_unitary(q, cf.unitary_used);
      worst_canonical =
          std::max({worst_canonical, std::abs(canon.c2),
                    std::abs(std::norm(canon.c1) - cf.lambda_plus),
                    std::abs(std::norm(canon.c3) - cf.lambda_minus)});
    }
    table.record("random: analytic vs density-matrix", worst_compare, 1e-9);
    table.record("random: kernel-equation residual", worst_kernel, 1e-10);
    table.record("random: magic identity", worst_magic, 1e-12);
    table.record("random: lambda vs rho eigenvalues", worst_lambda, 1e-12);
    table.record("random: reconstruction overlap", worst_overlap, 1e-10);
    table.record("random: canonical form residual", worst_canonical, 1e-10);
  }

  const SelftestSummary s = table.summary();
  out << (s.ok() ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
  return s;
}

}  // namespace bpq
