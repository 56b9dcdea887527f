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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bpq/types.hpp"

namespace bpq {

// Polarizing beam splitter oriented at basis_angle about the propagation
// axis, optionally preceded by a retarding element.
struct MeasurementSetting {
  double basis_angle = 0.0;
  std::optional<Eigen::Matrix2cd> extra_retardation;
};

// Outcome counts of n_total two-photon trials: both photons transmitted,
// both reflected, or one in each channel (a coincidence).
struct CountRecord {
  std::int64_t n_total = 0;
  std::int64_t n_both_t = 0;
  std::int64_t n_both_r = 0;
  std::int64_t n_coinc = 0;
};

struct EstimationResult {
  double lambda_plus_hat = 1.0;
  double lambda_minus_hat = 0.0;
  double lambda_std_error = 0.0;
  // phi estimate in [0, pi/2]; intensity-only 0/45 degree records determine
  // phi through cos(2 phi), so the sign and the mod-pi class are fixed by
  // this representative. 0 when flagged unidentifiable.
  double phi_hat = 0.0;
  double phi_std_error = 0.0;
  bool phi_identifiable = false;
  std::int64_t n_used = 0;
  // Largest mismatch between 90-degree frequencies and the swapped lambda
  // estimates; NaN when no 90-degree record was supplied.
  double swap_check = 0.0;
};

// Projective model of the splitter: rotate into the splitter basis (after
// the optional retarder) and read the populations off the transformed state:
//   (P_both_t, P_coinc, P_both_r) = (|c1'|^2, |c2'|^2, |c3'|^2).
// For the canonical state at 45 degrees this gives the coincidence rate
//   P_coinc = (1 - C cos 2phi) / 2,
// which is what estimate() inverts.
std::array<double, 3> outcome_probabilities(const QutritState& q,
                                            const MeasurementSetting& s);

// Multinomial draw of n trials, realized as sequential binomial splits in
// the fixed order (both_t, both_r, coinc). Deterministic in
// (q, s, n, seed, shards); shards sum independently drawn sub-records with
// derived sub-seeds. Throws InvalidTrialsError for n < 1.
CountRecord sample_counts_sharded(const QutritState& q,
                                  const MeasurementSetting& s, std::int64_t n,
                                  std::uint64_t seed, int shards);

CountRecord sample_counts(const QutritState& q, const MeasurementSetting& s,
                          std::int64_t n, std::uint64_t seed);

// Infinite-statistics record: counts are the rounded expectations n * p.
// With n ~ 1e15 the rounding perturbs frequencies at the 1e-15 level, which
// is what the exact round-trip tests consume.
CountRecord expected_counts(const QutritState& q, const MeasurementSetting& s,
                            std::int64_t n);

// Recovers lambda_{+-} from the 0-degree record and, when estimate_phi is
// set, phi from the 45-degree coincidence frequency via
// cos 2phi = (1 - 2 P_coinc) / C. Assumes the state was canonicalized
// (c2 = 0 in the H/V basis) before measurement. Records at matching settings
// are pooled. phi is flagged unidentifiable when the estimated per-trial
// Fisher information (C sin 2phi)^2 / (p(1-p)) falls below 0.02, which is
// the case whenever lambda_minus <~ 1.6e-3. Throws MissingSettingError when
// a required angle record is absent.
EstimationResult estimate(
    std::span<const std::pair<MeasurementSetting, CountRecord>> records,
    bool estimate_phi = true);

}  // namespace bpq
