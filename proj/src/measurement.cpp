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

#include "bpq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bpq/core.hpp"
#include "bpq/rng.hpp"
#include "bpq/transforms.hpp"

namespace bpq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kQuarterPi = kPi / 4.0;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kAngleMatchTol = 1e-12;

// Identifiability floor for the per-trial Fisher information of phi; states
// with lambda_minus <= 1e-3 stay below it for every phi.
constexpr double kPhiFisherMin = 0.02;

std::int64_t binomial_count(Rng& rng, std::int64_t n, double p) {
  p = std::clamp(p, 0.0, 1.0);
  std::int64_t k = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (rng.uniform() < p) ++k;
  }
  return k;
}

bool plain_setting_at(const MeasurementSetting& s, double angle) {
  return !s.extra_retardation.has_value() &&
         std::abs(s.basis_angle - angle) <= kAngleMatchTol;
}

}  // namespace

std::array<double, 3> outcome_probabilities(const QutritState& q,
                                            const MeasurementSetting& s) {
  Eigen::Matrix2cd u = rotation(-s.basis_angle);
  if (s.extra_retardation) {
    u = u * (*s.extra_retardation);
  }
  const QutritState t = apply_unitary(q, u);
  double pt = std::norm(t.c1), pc = std::norm(t.c2), pr = std::norm(t.c3);
  pt = std::max(pt, 0.0);
  pc = std::max(pc, 0.0);
  pr = std::max(pr, 0.0);
  return {pt, pc, pr};
}

CountRecord sample_counts_sharded(const QutritState& q,
                                  const MeasurementSetting& s, std::int64_t n,
                                  std::uint64_t seed, int shards) {
  if (n < 1) throw InvalidTrialsError("trial count must be >= 1");
  if (shards < 1) throw InvalidTrialsError("shard count must be >= 1");

  const auto [pt, pc, pr] = outcome_probabilities(q, s);

  CountRecord total;
  const std::int64_t base = n / shards;
  const std::int64_t rem = n % shards;
  for (int i = 0; i < shards; ++i) {
    const std::int64_t m = base + (i < rem ? 1 : 0);
    if (m == 0) continue;
    Rng rng(derive_stream(seed, static_cast<std::uint64_t>(i)));
    // Sequential binomial splits, fixed order (both_t, both_r, coinc).
    const std::int64_t kt = binomial_count(rng, m, pt);
    const double rest = pr + pc;
    const std::int64_t kr =
        rest > 0.0 ? binomial_count(rng, m - kt, pr / rest) : 0;
    total.n_both_t += kt;
    total.n_both_r += kr;
    total.n_coinc += m - kt - kr;
    total.n_total += m;
  }
  return total;
}

CountRecord sample_counts(const QutritState& q, const MeasurementSetting& s,
                          std::int64_t n, std::uint64_t seed) {
  return sample_counts_sharded(q, s, n, seed, 1);
}

CountRecord expected_counts(const QutritState& q, const MeasurementSetting& s,
                            std::int64_t n) {
  if (n < 1) throw InvalidTrialsError("trial count must be >= 1");
  const auto [pt, pc, pr] = outcome_probabilities(q, s);
  CountRecord rec;
  rec.n_total = n;
  rec.n_both_t = std::llround(pt * static_cast<double>(n));
  rec.n_both_r = std::llround(pr * static_cast<double>(n));
  rec.n_coinc = n - rec.n_both_t - rec.n_both_r;
  return rec;
}

EstimationResult estimate(
    std::span<const std::pair<MeasurementSetting, CountRecord>> records,
    bool estimate_phi) {
  CountRecord r0, r45, r90;
  bool have0 = false, have45 = false, have90 = false;
  auto pool = [](CountRecord& dst, const CountRecord& src) {
    dst.n_total += src.n_total;
    dst.n_both_t += src.n_both_t;
    dst.n_both_r += src.n_both_r;
    dst.n_coinc += src.n_coinc;
  };
  for (const auto& [setting, record] : records) {
    if (plain_setting_at(setting, 0.0)) {
      pool(r0, record);
      have0 = true;
    } else if (plain_setting_at(setting, kQuarterPi)) {
      pool(r45, record);
      have45 = true;
    } else if (plain_setting_at(setting, kHalfPi)) {
      pool(r90, record);
      have90 = true;
    }
  }
  if (!have0 || r0.n_total < 1) {
    throw MissingSettingError("estimation requires a 0-degree record");
  }

  EstimationResult res;
  const double n0 = static_cast<double>(r0.n_total);
  // Symmetrized so the pair sums to one; for a canonical state the 0-degree
  // coincidence rate vanishes and this reduces to the plain frequency.
  const double lp = std::clamp(
      (static_cast<double>(r0.n_both_t - r0.n_both_r) / n0 + 1.0) / 2.0, 0.0,
      1.0);
  res.lambda_plus_hat = lp;
  res.lambda_minus_hat = 1.0 - lp;
  res.lambda_std_error = std::sqrt(std::max(lp * (1.0 - lp), 0.0) / n0);
  res.n_used = r0.n_total;

  if (estimate_phi) {
    if (!have45 || r45.n_total < 1) {
      throw MissingSettingError("phi estimation requires a 45-degree record");
    }
    res.n_used += r45.n_total;
    const double n45 = static_cast<double>(r45.n_total);
    const double pc = static_cast<double>(r45.n_coinc) / n45;
    const double c_hat = 2.0 * std::sqrt(std::max(lp * (1.0 - lp), 0.0));

    double phi = 0.0;
    if (c_hat > 0.0) {
      phi = 0.5 * std::acos(std::clamp((1.0 - 2.0 * pc) / c_hat, -1.0, 1.0));
    }
    const double p_mid =
        std::clamp(pc, 0.25 / n45, 1.0 - 0.25 / n45);  // keep the variance off 0
    const double dp = c_hat * std::sin(2.0 * phi);
    const double fisher1 = dp * dp / (p_mid * (1.0 - p_mid));
    if (fisher1 >= kPhiFisherMin) {
      res.phi_identifiable = true;
      res.phi_hat = phi;
      res.phi_std_error = 1.0 / std::sqrt(n45 * fisher1);
    } else {
      res.phi_identifiable = false;
      res.phi_hat = 0.0;
      res.phi_std_error = std::numeric_limits<double>::infinity();
    }
  }

  if (have90 && r90.n_total >= 1) {
    // At 90 degrees the transmitted/reflected roles swap; report the worst
    // mismatch against the swapped lambda estimates as a consistency check.
    const double n90 = static_cast<double>(r90.n_total);
    res.swap_check = std::max(
        std::abs(static_cast<double>(r90.n_both_t) / n90 - res.lambda_minus_hat),
        std::abs(static_cast<double>(r90.n_both_r) / n90 - res.lambda_plus_hat));
    res.n_used += r90.n_total;
  } else {
    res.swap_check = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

}  // namespace bpq
