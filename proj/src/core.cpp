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

#include "bpq/core.hpp"

#include <algorithm>
#include <cmath>

#include "bpq/oracle.hpp"

namespace bpq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730950488016887242096981;

// Below this lambda_minus the phase formula for the minus mode degenerates
// to 0/0; the mode is filled with the orthogonal complement instead. Well
// under tol::kDegen, where the null flag is raised anyway.
constexpr double kNullMinusLambda = 1e-15;

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(const QutritState& q) {
  if (!finite(q.c1) || !finite(q.c2) || !finite(q.c3)) {
    throw NonFiniteError("qutrit amplitude is not finite");
  }
}

Complex gamma_of(const QutritState& q) { return 2.0 * q.c1 * q.c3 - q.c2 * q.c2; }

double concurrence_clamped(const QutritState& q) {
  return std::min(std::abs(gamma_of(q)), 1.0);
}

// sqrt(1 - C^2) evaluated as sqrt((1-C)(1+C)); equals lambda_plus - lambda_minus.
double lambda_gap(double c) { return std::sqrt(std::max((1.0 - c) * (1.0 + c), 0.0)); }

}  // namespace

CoefficientMatrix coefficient_matrix(const QutritState& q) {
  CoefficientMatrix m;
  const Complex off = q.c2 / kSqrt2;
  m << q.c1, off, off, q.c3;
  return m;
}

QutritState make_qutrit(Complex c1, Complex c2, Complex c3) {
  QutritState q{c1, c2, c3};
  require_finite(q);
  const double n2 = std::norm(c1) + std::norm(c2) + std::norm(c3);
  if (n2 <= 0.0 || n2 < 1e-300) {
    throw ZeroStateError("qutrit amplitudes are all zero");
  }
  const double inv = 1.0 / std::sqrt(n2);
  return {c1 * inv, c2 * inv, c3 * inv};
}

double concurrence(const QutritState& q) { return concurrence_clamped(q); }

double schmidt_number(const QutritState& q) {
  const double c = concurrence_clamped(q);
  return 2.0 / (2.0 - c * c);
}

std::pair<double, double> lambdas(const QutritState& q) {
  const double gap = lambda_gap(concurrence_clamped(q));
  return {0.5 * (1.0 + gap), 0.5 * (1.0 - gap)};
}

double x_parameter(const QutritState& q) {
  const double c = concurrence_clamped(q);
  if (c >= 1.0 - tol::kDegen) {
    throw DegenerateConcurrenceError(
        "x is undefined at maximal entanglement; use the degenerate branch");
  }
  const double x = (std::norm(q.c1) - std::norm(q.c3)) / lambda_gap(c);
  return std::clamp(x, -1.0, 1.0);
}

double magic_residual(const QutritState& q) {
  const double c = concurrence_clamped(q);
  const double cross = std::abs(std::conj(q.c2) * q.c3 + q.c2 * std::conj(q.c1));
  const double pop_diff = std::norm(q.c1) - std::norm(q.c3);
  return std::abs(2.0 * cross * cross + pop_diff * pop_diff - (1.0 - c) * (1.0 + c));
}

SchmidtDecomposition decompose(const QutritState& q) {
  require_finite(q);

  const Complex gamma = gamma_of(q);
  const double conc = std::min(std::abs(gamma), 1.0);
  const double gap = lambda_gap(conc);
  const double lam_p = 0.5 * (1.0 + gap);
  const double lam_m = 0.5 * (1.0 - gap);

  SchmidtDecomposition d;
  d.lambda_plus = lam_p;
  d.lambda_minus = lam_m;
  d.concurrence = conc;
  d.schmidt_number = 2.0 / (2.0 - conc * conc);
  d.phi0 = std::arg(std::conj(q.c1) * q.c2 + std::conj(q.c2) * q.c3);
  d.mode_minus_null = lam_m <= tol::kDegen;

  if (conc >= 1.0 - tol::kDegen) {
    // Maximally entangled limit: lambda -> 1/2 and the mode pair is fixed
    // only up to a real-orthogonal remix; take the kernel-equation solution
    // at lambda = 1/2.
    auto [mp, mm] = takagi_degenerate_modes(coefficient_matrix(q));
    d.mode_plus = mp;
    d.mode_minus = mm;
    d.x_param = 0.0;
    return d;
  }

  if (std::abs(q.c2) <= tol::kBranch) {
    const bool c1_major = std::norm(q.c1) >= std::norm(q.c3);
    const Complex major = c1_major ? q.c1 : q.c3;
    const Complex minor = c1_major ? q.c3 : q.c1;
    d.lambda_plus = std::norm(major);
    d.lambda_minus = std::norm(minor);
    const Complex major_ph = std::polar(1.0, 0.5 * std::arg(major));
    d.mode_plus = c1_major ? PolarizationMode{major_ph, 0.0}
                           : PolarizationMode{0.0, major_ph};
    if (std::norm(minor) <= kNullMinusLambda) {
      d.mode_minus = mode_sign_fixed(mode_orthogonal(d.mode_plus));
    } else {
      const Complex minor_ph = std::polar(1.0, 0.5 * std::arg(minor));
      d.mode_minus = c1_major ? PolarizationMode{0.0, minor_ph}
                              : PolarizationMode{minor_ph, 0.0};
    }
    const double x = (std::norm(q.c1) - std::norm(q.c3)) / gap;
    d.x_param = std::clamp(x, -1.0, 1.0);
    return d;
  }

  // General branch. The con-eigen ratio
  //   e^{2i phi_alpha} = (c2*(2 c1 c3 - c2^2) + 2 lambda c2)
  //                      / (2 sqrt(lambda) (c2* c3 + c2 c1*))
  // is evaluated with the common factor |c2| e^{i arg c2} cancelled from
  // numerator and denominator, which keeps all terms O(1).
  const double x =
      std::clamp((std::norm(q.c1) - std::norm(q.c3)) / gap, -1.0, 1.0);
  d.x_param = x;

  const Complex u2 = std::conj(q.c2) / std::abs(q.c2);
  const Complex g = u2 * u2 * gamma;
  const Complex den = u2 * u2 * q.c3 + std::conj(q.c1);

  const double amp_major = std::sqrt(0.5 * (1.0 + x));
  const double amp_minor = std::sqrt(0.5 * (1.0 - x));

  const double phi_a_p = 0.5 * std::arg((g + 2.0 * lam_p) * std::conj(den));
  d.mode_plus = {std::polar(amp_major, phi_a_p),
                 std::polar(amp_minor, phi_a_p + d.phi0)};

  if (lam_m <= kNullMinusLambda) {
    d.mode_minus = mode_sign_fixed(mode_orthogonal(d.mode_plus));
  } else {
    const double phi_a_m = 0.5 * std::arg((g + 2.0 * lam_m) * std::conj(den));
    d.mode_minus = {std::polar(amp_minor, phi_a_m),
                    std::polar(amp_major, phi_a_m + d.phi0 + kPi)};
  }
  return d;
}

QutritState reconstruct(const SchmidtDecomposition& d) {
  const double sp = std::sqrt(std::max(d.lambda_plus, 0.0));
  const double sm = std::sqrt(std::max(d.lambda_minus, 0.0));
  const Complex ap = d.mode_plus.alpha, bp = d.mode_plus.beta;
  const Complex am = d.mode_minus.alpha, bm = d.mode_minus.beta;
  return make_qutrit(sp * ap * ap + sm * am * am,
                     kSqrt2 * (sp * ap * bp + sm * am * bm),
                     sp * bp * bp + sm * bm * bm);
}

}  // namespace bpq
