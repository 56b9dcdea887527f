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

#include "bpq/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "bpq/core.hpp"

namespace bpq {

namespace {

// Degenerate handoff aligned with core's branch: C >= 1 - kDegen
// corresponds to an eigenvalue gap <= sqrt(kDegen (2 - kDegen)).
const double kDegenGap = std::sqrt(tol::kDegen * (2.0 - tol::kDegen));

Eigen::Vector2cd normalized(const Eigen::Vector2cd& v) { return v / v.norm(); }

// M conj(v) = sqrt(lambda) e^{i delta} v for an eigenvector v of M M^dagger;
// e^{i delta/2} v then solves the kernel equation with a real eigenvalue.
PolarizationMode phase_fixed(const Eigen::Matrix2cd& m,
                             const Eigen::Vector2cd& v) {
  const Eigen::Vector2cd w = m * v.conjugate();
  const Complex z = v.dot(w);  // <v, w>
  const double delta = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  return mode_sign_fixed(mode_from_vector(std::polar(1.0, 0.5 * delta) * v));
}

}  // namespace

ReducedDensityMatrix reduced_density_matrix(const QutritState& q) {
  const CoefficientMatrix m = coefficient_matrix(q);
  return m * m.adjoint();
}

std::pair<EigenPair, EigenPair> eig_hermitian_2x2(const ReducedDensityMatrix& rho) {
  const double p = rho(0, 0).real();
  const double r = rho(1, 1).real();
  const Complex qc = rho(0, 1);
  const double h = 0.5 * (p - r);
  const double disc = std::hypot(h, std::abs(qc));  // half the eigenvalue gap

  const double lam_p = 0.5 * (p + r) + disc;
  // lambda_+ lambda_- = det exactly for 2x2; the quotient keeps the small
  // eigenvalue accurate when it is near zero.
  const double det = p * r - std::norm(qc);
  const double lam_m = lam_p != 0.0 ? det / lam_p : 0.5 * (p + r) - disc;

  Eigen::Vector2cd vp;
  if (disc == 0.0) {
    vp << 1.0, 0.0;
  } else if (h >= 0.0) {
    // (lambda_+ - r, conj(q)): the component scale stays >= disc.
    vp = normalized(Eigen::Vector2cd(Complex(disc + h, 0.0), std::conj(qc)));
  } else {
    vp = normalized(Eigen::Vector2cd(qc, Complex(disc - h, 0.0)));
  }
  const PolarizationMode mode_p = mode_from_vector(vp);
  const PolarizationMode mode_m = mode_orthogonal(mode_p);
  return {{lam_p, mode_p}, {lam_m, mode_m}};
}

double kernel_residual(const Eigen::Matrix2cd& m, const PolarizationMode& psi,
                       double lambda) {
  const Eigen::Vector2cd v = psi.vector();
  const double s = std::sqrt(std::max(lambda, 0.0));
  return (m * v.conjugate() - s * v).norm();
}

std::pair<PolarizationMode, PolarizationMode> takagi_degenerate_modes(
    const Eigen::Matrix2cd& m) {
  const double lambda_bar = 0.5 * (m * m.adjoint()).trace().real();
  const double s_bar = std::sqrt(std::max(lambda_bar, 0.0));

  // Fixed point of the antilinear T(a) = M conj(a) / s_bar: of a + T(a) and
  // i (a - T(a)) at least one has squared norm >= 2.
  const Eigen::Vector2cd a(1.0, 0.0);
  const Eigen::Vector2cd ta = m * a.conjugate() / s_bar;
  const Eigen::Vector2cd sym = a + ta;
  const Eigen::Vector2cd asym = Complex(0.0, 1.0) * (a - ta);
  const Eigen::Vector2cd plus =
      normalized(sym.squaredNorm() >= asym.squaredNorm() ? sym : asym);
  const PolarizationMode mode_p = mode_sign_fixed(mode_from_vector(plus));

  // The orthogonal complement is the second con-eigendirection; its phase is
  // fixed by the kernel equation like in the non-degenerate path.
  const PolarizationMode orth = mode_orthogonal(mode_p);
  const Eigen::Vector2cd o = orth.vector();
  const Eigen::Vector2cd w = m * o.conjugate();
  const Complex z = o.dot(w);
  const double delta = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  const PolarizationMode mode_m =
      mode_sign_fixed(mode_from_vector(std::polar(1.0, 0.5 * delta) * o));
  return {mode_p, mode_m};
}

SchmidtDecomposition con_eigen_modes(const QutritState& q) {
  const CoefficientMatrix m = coefficient_matrix(q);
  const auto [top, bottom] = eig_hermitian_2x2(m * m.adjoint());

  // Round-off can leave tiny negatives on a PSD spectrum; clamp before any
  // square root.
  const double lam_p = std::clamp(top.value, 0.0, 1.0);
  const double lam_m = std::clamp(bottom.value, 0.0, 1.0);

  SchmidtDecomposition d;
  d.lambda_plus = lam_p;
  d.lambda_minus = lam_m;
  d.concurrence = std::min(2.0 * std::sqrt(lam_p * lam_m), 1.0);
  d.schmidt_number = 1.0 / (lam_p * lam_p + lam_m * lam_m);
  d.phi0 = std::arg(std::conj(q.c1) * q.c2 + std::conj(q.c2) * q.c3);
  d.mode_minus_null = lam_m <= tol::kDegen;

  if (lam_p - lam_m <= kDegenGap) {
    auto [mp, mm] = takagi_degenerate_modes(m);
    d.mode_plus = mp;
    d.mode_minus = mm;
    d.x_param = 0.0;
    return d;
  }

  d.mode_plus = phase_fixed(m, top.vector.vector());
  if (d.mode_minus_null) {
    d.mode_minus = mode_sign_fixed(mode_orthogonal(d.mode_plus));
  } else {
    d.mode_minus = phase_fixed(m, bottom.vector.vector());
  }
  d.x_param = std::clamp(std::norm(d.mode_plus.alpha) - std::norm(d.mode_plus.beta),
                         -1.0, 1.0);
  return d;
}

namespace {

double mode_distance_up_to_sign(const PolarizationMode& a,
                                const PolarizationMode& b) {
  const Eigen::Vector2cd va = a.vector(), vb = b.vector();
  return std::min((va - vb).norm(), (va + vb).norm());
}

Eigen::Matrix2cd rebuild_matrix(const SchmidtDecomposition& d) {
  const Eigen::Vector2cd p = d.mode_plus.vector(), m = d.mode_minus.vector();
  return std::sqrt(std::max(d.lambda_plus, 0.0)) * (p * p.transpose()) +
         std::sqrt(std::max(d.lambda_minus, 0.0)) * (m * m.transpose());
}

}  // namespace

double compare_decompositions(const SchmidtDecomposition& a,
                              const SchmidtDecomposition& b) {
  const double dl = std::max(std::abs(a.lambda_plus - b.lambda_plus),
                             std::abs(a.lambda_minus - b.lambda_minus));
  const bool degenerate = a.concurrence >= 1.0 - tol::kDegen ||
                          b.concurrence >= 1.0 - tol::kDegen;
  if (!degenerate) {
    const double dp = mode_distance_up_to_sign(a.mode_plus, b.mode_plus);
    const double dm = (a.mode_minus_null || b.mode_minus_null)
                          ? 0.0
                          : mode_distance_up_to_sign(a.mode_minus, b.mode_minus);
    return std::max({dl, dp, dm});
  }
  const Eigen::Matrix2cd ma = rebuild_matrix(a);
  const Eigen::Matrix2cd mb = rebuild_matrix(b);
  const double dm = (ma - mb).norm();
  const double cross = std::max(
      {kernel_residual(ma, b.mode_plus, b.lambda_plus),
       kernel_residual(ma, b.mode_minus, b.lambda_minus),
       kernel_residual(mb, a.mode_plus, a.lambda_plus),
       kernel_residual(mb, a.mode_minus, a.lambda_minus)});
  return std::max({dl, dm, cross});
}

}  // namespace bpq
