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
#include <iosfwd>

namespace bpq {

struct SelftestOptions {
  int random_states = 1000;
  std::uint64_t seed = 0x5eedULL;
  // Test-harness hook: perturbs one golden expectation so the run must fail.
  bool corrupt_fixture = false;
};

struct SelftestSummary {
  int total = 0;
  int failed = 0;

  bool ok() const { return failed == 0; }
};

// Runs the embedded golden suite (the worked-example fixtures plus random
// cross-checks of the analytic route against the density-matrix route) and
// prints one line per check to out.
SelftestSummary run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace bpq
