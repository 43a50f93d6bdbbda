// Copyright 2026 The tisched Authors
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

// Exhaustive optimal solver for tiny instances, used as ground truth.
//
// Every successor-closed hire set within budget is tried. For each, the
// schedule is enumerated in non-decreasing order of absolute start (ties by
// id). Each intervention starts at 0 or at the end of an intervention already
// placed on the same day, joins an existing team of that day or opens a team
// from any subset of the day's free technicians. Left-shifting any feasible
// schedule yields one of these, so the enumeration is complete.

#pragma once

#include <cstdint>

#include "tisched/model.hpp"

namespace tisched {

struct OracleLimits {
  int max_interventions = 6;
  int max_technicians = 4;
  int max_days = 4;
  std::int64_t node_budget = 50'000'000;
};

struct OracleResult {
  Time z = 0;
  Solution solution;
  std::int64_t nodes = 0;
};

/// Throws kLimitExceeded when the instance is larger than the limits, the
/// node budget runs out, or nothing is schedulable within max_days.
OracleResult brute_force_optimal(const Instance& instance, const OracleLimits& limits = {},
                                 T4Mode mode = T4Mode::kPriority);

}  // namespace tisched
