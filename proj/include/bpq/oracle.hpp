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

// rho = M M^dagger with M the coefficient matrix: Hermitian, unit trace,
// positive semidefinite up to round-off.
using ReducedDensityMatrix = Eigen::Matrix2cd;

ReducedDensityMatrix reduced_density_matrix(const QutritState& q);

struct EigenPair {
  double value;
  PolarizationMode vector;
};

// Closed-form eigendecomposition of a 2x2 Hermitian matrix. Pairs are sorted
// by descending eigenvalue; the vectors are unit-norm and exactly orthogonal
// (the second is the orthogonal complement of the first). The residual
// ||rho v - lambda v|| stays at round-off level even for near-degenerate
// spectra; only the individual vectors lose meaning there.
std::pair<EigenPair, EigenPair> eig_hermitian_2x2(const ReducedDensityMatrix& rho);

// ||M conj(psi) - sqrt(max(lambda, 0)) psi||_2.
double kernel_residual(const Eigen::Matrix2cd& m, const PolarizationMode& psi,
                       double lambda);

// Solves M conj(psi) = s psi for a 2x2 complex symmetric M whose two
// con-eigenvalues (nearly) coincide, via the fixed points of the antilinear
// map T(a) = M conj(a) / s_bar. Returns the pair (psi_plus, psi_minus),
// orthonormal and sign-fixed; exact for exactly degenerate M.
std::pair<PolarizationMode, PolarizationMode> takagi_degenerate_modes(
    const Eigen::Matrix2cd& m);

// Brute-force route to the Schmidt decomposition: eigenvectors of
// rho = M M^dagger, phase-fixed through M conj(v) = sqrt(lambda) e^{i delta} v
// so that psi = e^{i delta/2} v solves the kernel equation. Degenerate
// spectra fall back to takagi_degenerate_modes. Output is packaged exactly
// like core decompose().
SchmidtDecomposition con_eigen_modes(const QutritState& q);

// Scalar discrepancy between two decompositions of the same state: the max
// of the lambda differences and the per-mode distances minimized over the
// +-1 sign freedom. Null minus modes (lambda_minus <= tol::kDegen) are
// convention fills and are excluded from the mode comparison. In the
// degenerate regime (C >= 1 - tol::kDegen) the mode pair is only unique up
// to a real-orthogonal remix, so the comparison switches to the distance
// between the reconstructed coefficient matrices plus the cross kernel
// residuals of each pair in the other's matrix.
double compare_decompositions(const SchmidtDecomposition& a,
                              const SchmidtDecomposition& b);

}  // namespace bpq
