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

#include <utility>

#include <Eigen/Core>

#include "bpq/types.hpp"

namespace bpq {

// Symmetric coefficient matrix of the two-photon wave function,
//   M = [ c1       c2/sqrt2 ]
//       [ c2/sqrt2 c3       ],
// with unit Frobenius norm for a normalized state. This is the kernel of
// the equation M conj(psi) = sqrt(lambda) psi that defines the Schmidt
// modes together with their phases.
using CoefficientMatrix = Eigen::Matrix2cd;

CoefficientMatrix coefficient_matrix(const QutritState& q);

// Rescales (c1, c2, c3) to unit norm, preserving relative phases exactly.
// Throws NonFiniteError for NaN/Inf input and ZeroStateError when all three
// amplitudes vanish.
QutritState make_qutrit(Complex c1, Complex c2, Complex c3);

// C = |2 c1 c3 - c2^2|, in [0, 1].
double concurrence(const QutritState& q);

// K = 2 / (2 - C^2), in [1, 2].
double schmidt_number(const QutritState& q);

// (lambda_plus, lambda_minus) = ((1 +- sqrt(1 - C^2)) / 2).
std::pair<double, double> lambdas(const QutritState& q);

// x = (|c1|^2 - |c3|^2) / sqrt(1 - C^2), in [-1, 1]. Throws
// DegenerateConcurrenceError when C >= 1 - tol::kDegen; decompose() handles
// that regime through its maximally entangled branch instead.
double x_parameter(const QutritState& q);

// Residual of the identity
//   2 |c2* c3 + c2 c1*|^2 = (1 - C^2)(1 - x^2)
// evaluated in the cancellation-free form
//   2 |c2* c3 + c2 c1*|^2 + (|c1|^2 - |c3|^2)^2 - (1 - C^2).
// Vanishes for every normalized qutrit; serves as a self-test.
double magic_residual(const QutritState& q);

// Closed-form Schmidt decomposition. Branches:
//  - maximally entangled (C >= 1 - tol::kDegen): modes from the degenerate
//    Takagi construction at lambda = 1/2 (see oracle.hpp);
//  - |c2| <= tol::kBranch: lambda = (|c1|^2, |c3|^2) sorted, modes
//    (e^{i arg(c1)/2}, 0) and (0, e^{i arg(c3)/2});
//  - general: amplitudes sqrt((1 +- x)/2); the H phase is half the argument
//    of the con-eigen ratio, with the representative in (-pi/2, pi/2]; the V
//    phase follows as phi_alpha + phi0 (+pi for the minus mode) with
//    phi0 = arg(c1* c2 + c2* c3).
SchmidtDecomposition decompose(const QutritState& q);

// Inverse map: (c1, c2, c3) = sum_{+-} sqrt(lambda) (alpha^2, sqrt2 alpha beta,
// beta^2). For d = decompose(q) the result equals q up to a global phase.
QutritState reconstruct(const SchmidtDecomposition& d);

}  // namespace bpq
