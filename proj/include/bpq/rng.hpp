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

#include <cstdint>

#include "bpq/types.hpp"

namespace bpq {

// SplitMix64 finalizer: a bijective 64-bit hash.
std::uint64_t mix64(std::uint64_t z);

// Counter-based deterministic generator (SplitMix64): the k-th output is a
// fixed hash of seed + k * golden ratio. Identical seeds give identical
// streams on every platform; floating-point derived quantities additionally
// assume a common libm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// Independent sub-stream seed for shard/index decomposition of one logical
// seed.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

// Haar-random qutrit: three complex Gaussian amplitudes, normalized.
// Deterministic in (seed, index).
QutritState haar_qutrit(std::uint64_t seed, std::uint64_t index);

}  // namespace bpq
