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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace bpq {

using Complex = std::complex<double>;

namespace tol {

// Tolerances shared across the library. Closed forms in double precision
// lose at most a few ulps; the branch thresholds sit far above round-off
// and far below physically meaningful amplitudes.
inline constexpr double kNorm = 1e-12;
inline constexpr double kKernel = 1e-10;
inline constexpr double kRecon = 1e-10;
inline constexpr double kOrtho = 1e-10;
inline constexpr double kBranch = 1e-8;
inline constexpr double kDegen = 1e-8;

}  // namespace tol

struct ZeroStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFiniteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateConcurrenceError : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidTrialsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingSettingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Normalized two-photon polarization state
//   |Psi> = c1 |2H> + c2 |1H,1V> + c3 |2V>.
// Construct through make_qutrit(), which enforces unit norm; the stored
// amplitudes are never silently rephased.
struct QutritState {
  Complex c1;
  Complex c2;
  Complex c3;
};

// Single-photon polarization mode (alpha, beta) in the H/V basis, unit norm.
struct PolarizationMode {
  Complex alpha;
  Complex beta;

  Eigen::Vector2cd vector() const { return {alpha, beta}; }
};

inline PolarizationMode mode_from_vector(const Eigen::Vector2cd& v) {
  return {v(0), v(1)};
}

// Hermitian inner product <a, b>.
inline Complex mode_dot(const PolarizationMode& a, const PolarizationMode& b) {
  return std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta;
}

// Unit vector orthogonal to m: (-conj(beta), conj(alpha)).
inline PolarizationMode mode_orthogonal(const PolarizationMode& m) {
  return {-std::conj(m.beta), std::conj(m.alpha)};
}

// Fixes the sign freedom of a mode that solves the kernel equation only up
// to +-1: the argument of the H component (or of the V component when the
// H component vanishes) is put into (-pi/2, pi/2].
inline PolarizationMode mode_sign_fixed(const PolarizationMode& m) {
  const Complex ref = std::abs(m.alpha) > 1e-12 ? m.alpha : m.beta;
  const double a = std::arg(ref);
  constexpr double half_pi = 1.5707963267948966;
  if (a <= -half_pi || a > half_pi) return {-m.alpha, -m.beta};
  return m;
}

// Result of the Schmidt decomposition of a qutrit. lambda_plus >= lambda_minus,
// lambda_plus + lambda_minus = 1, and both modes satisfy the kernel equation
//   M conj(psi) = sqrt(lambda) psi
// with M the coefficient matrix of the state. When mode_minus_null is set
// (lambda_minus <= tol::kDegen) the minus mode is the orthogonal complement
// of the plus mode by convention and carries no kernel-equation content.
struct SchmidtDecomposition {
  double lambda_plus = 1.0;
  double lambda_minus = 0.0;
  PolarizationMode mode_plus;
  PolarizationMode mode_minus;
  double concurrence = 0.0;
  double schmidt_number = 1.0;
  double x_param = 0.0;
  double phi0 = 0.0;
  bool mode_minus_null = false;
};

}  // namespace bpq
