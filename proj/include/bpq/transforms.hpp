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

#include <Eigen/Core>

#include "bpq/types.hpp"

namespace bpq {

// Jones matrix of a lossless polarization element.
using PolarizationUnitary = Eigen::Matrix2cd;

bool is_unitary(const PolarizationUnitary& u, double tolerance = 1e-12);

// Half-wave plate with fast axis at angle theta:
//   [ cos2theta  sin2theta ]
//   [ sin2theta -cos2theta ],  det = -1.
PolarizationUnitary hwp(double theta);

// Quarter-wave plate at angle theta:
//   e^{-i pi/4} [ cos^2 + i sin^2   (1-i) sin cos  ]
//               [ (1-i) sin cos     sin^2 + i cos^2 ].
// Two identical quarter-wave plates compose to a half-wave plate up to a
// global phase: qwp(theta)^2 = -i hwp(theta).
PolarizationUnitary qwp(double theta);

// Frame rotation [[cos, -sin], [sin, cos]].
PolarizationUnitary rotation(double theta);

// Local polarization transformation of the biphoton state: the coefficient
// matrix transforms by symmetric congruence M -> u M u^T. Entanglement
// measures (C, K, lambda) are invariant. Throws std::invalid_argument if u
// is not unitary.
QutritState apply_unitary(const QutritState& q, const PolarizationUnitary& u);

// Two-parameter canonical form (sqrt(lambda_plus), 0, e^{2i phi}
// sqrt(lambda_minus)) reachable from any qutrit by local plates, plus the
// unitary that reaches it. phi_undefined is set when lambda_minus <=
// tol::kDegen (the canonical state then does not depend on phi; it is
// reported as 0).
struct CanonicalForm {
  double lambda_plus = 1.0;
  double lambda_minus = 0.0;
  double phi = 0.0;
  bool phi_undefined = false;
  PolarizationUnitary unitary_used = PolarizationUnitary::Identity();
};

// Sends mode_plus to (1,0) and mode_minus to (0,1): u is the adjoint of the
// mode matrix, rephased so the transformed c1 is real nonnegative. Because
// the modes solve the kernel equation, the congruence u M u^T is exactly
// diag(sqrt(lambda_plus), sqrt(lambda_minus)) up to round-off, so the
// extracted phi (half of arg(c3' conj(c1'))) is ~0 for states canonicalized
// here; nonzero phi enters through shift_phase or externally prepared
// canonical states.
CanonicalForm canonicalize(const QutritState& q);

// phi -> wrap(phi + delta_phi) into (-pi, pi]; lambdas unchanged. The
// corresponding phase plate diag(1, e^{i delta_phi}) is composed into
// unitary_used so the form keeps producing its own canonical state.
CanonicalForm shift_phase(const CanonicalForm& cf, double delta_phi);

// Physical realization of an arbitrary polarization unitary as
//   u = e^{i global_phase} qwp(q1) hwp(h) qwp(q2).
// Convenience only; the matrix u is the contract-bearing object.
struct PlateSequence {
  double qwp1;
  double hwp;
  double qwp2;
  double global_phase;
};

PlateSequence decompose_into_plates(const PolarizationUnitary& u);

double wrap_angle(double phi);  // representative in (-pi, pi]

}  // namespace bpq
