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

#include "bpq/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "bpq/core.hpp"

namespace bpq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730950488016887242096981;
const Complex kI(0.0, 1.0);

}  // namespace

double wrap_angle(double phi) {
  double r = std::fmod(phi + kPi, 2.0 * kPi);
  if (r <= 0.0) r += 2.0 * kPi;
  return r - kPi;
}

bool is_unitary(const PolarizationUnitary& u, double tolerance) {
  return (u * u.adjoint() - Eigen::Matrix2cd::Identity()).norm() <= tolerance;
}

PolarizationUnitary hwp(double theta) {
  const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
  PolarizationUnitary u;
  u << c, s, s, -c;
  return u;
}

PolarizationUnitary qwp(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex phase = std::polar(1.0, -kPi / 4.0);
  PolarizationUnitary u;
  u << c * c + kI * s * s, (1.0 - kI) * s * c,  //
      (1.0 - kI) * s * c, s * s + kI * c * c;
  return phase * u;
}

PolarizationUnitary rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  PolarizationUnitary u;
  u << c, -s, s, c;
  return u;
}

QutritState apply_unitary(const QutritState& q, const PolarizationUnitary& u) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("polarization transform is not unitary");
  }
  const Eigen::Matrix2cd mp = u * coefficient_matrix(q) * u.transpose();
  // Congruence by a unitary preserves the Frobenius norm, so the triple is
  // already normalized.
  return {mp(0, 0), kSqrt2 * mp(0, 1), mp(1, 1)};
}

CanonicalForm canonicalize(const QutritState& q) {
  const SchmidtDecomposition d = decompose(q);

  Eigen::Matrix2cd modes;
  modes.col(0) = d.mode_plus.vector();
  modes.col(1) = d.mode_minus.vector();
  const Eigen::Matrix2cd u0 = modes.adjoint();

  // u0 M u0^T = diag(sqrt(lambda_+), sqrt(lambda_-)) up to round-off; the
  // residual global phase is removed by making c1' real nonnegative.
  const Eigen::Matrix2cd m1 = u0 * coefficient_matrix(q) * u0.transpose();
  const double chi = -0.5 * std::arg(m1(0, 0));

  CanonicalForm cf;
  cf.lambda_plus = d.lambda_plus;
  cf.lambda_minus = d.lambda_minus;
  cf.unitary_used = std::polar(1.0, chi) * u0;
  if (d.lambda_minus <= tol::kDegen) {
    cf.phi = 0.0;
    cf.phi_undefined = true;
  } else {
    // e^{2i phi} fixes phi mod pi; take the (-pi/2, pi/2] representative.
    // The global rephasing cancels in c3' conj(c1').
    cf.phi = 0.5 * std::arg(m1(1, 1) * std::conj(m1(0, 0)));
    cf.phi_undefined = false;
  }
  return cf;
}

CanonicalForm shift_phase(const CanonicalForm& cf, double delta_phi) {
  CanonicalForm out = cf;
  out.phi = wrap_angle(cf.phi + delta_phi);
  Eigen::Matrix2cd plate;
  plate << 1.0, 0.0, 0.0, std::polar(1.0, delta_phi);
  out.unitary_used = plate * cf.unitary_used;
  return out;
}

PlateSequence decompose_into_plates(const PolarizationUnitary& u) {
  if (!is_unitary(u)) {
    throw std::invalid_argument("plate decomposition needs a unitary matrix");
  }
  // Strip the determinant phase: su is in SU(2).
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const double mu = 0.5 * std::arg(det);
  const Eigen::Matrix2cd su = std::polar(1.0, -mu) * u;

  // su = w I - i (x sx + y sy + z sz); plate rotation axes live in the x-z
  // plane, so the product quaternion separates into (w, y) and (x, z) blocks.
  const double w = 0.5 * (su(0, 0).real() + su(1, 1).real());
  const double x = -0.5 * (su(0, 1).imag() + su(1, 0).imag());
  const double y = 0.5 * (su(1, 0).real() - su(0, 1).real());
  const double z = 0.5 * (su(1, 1).imag() - su(0, 0).imag());

  const double cq = std::hypot(w, y);
  const double sq = std::hypot(x, z);
  const double dprime = std::atan2(sq, cq);
  const double s_angle = cq > 1e-14 ? std::atan2(-y, -w) : 0.0;
  const double b_plus_d = sq > 1e-14 ? std::atan2(z, -x) : 0.0;

  const double b2 = b_plus_d - dprime;
  const double a2 = b2 + dprime + s_angle;
  const double c2 = a2 - 2.0 * s_angle;

  PlateSequence seq;
  seq.qwp1 = 0.5 * a2;
  seq.hwp = 0.5 * b2;
  seq.qwp2 = 0.5 * c2;
  // qwp hwp qwp = i G with G the solved SU(2) element equal to su.
  seq.global_phase = wrap_angle(mu - kPi / 2.0);
  return seq;
}

}  // namespace bpq
