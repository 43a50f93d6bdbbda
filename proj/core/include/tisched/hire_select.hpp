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

// Choice of the outsourced interventions: a 0/1 knapsack on the weights
// mintec * duration under the budget, where hiring an intervention forces
// hiring all of its successors.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tisched/model.hpp"

namespace tisched {

struct HirePlan {
  std::vector<int> hired;  // sorted, successor-closed
  Cost total_cost = 0;
  Cost total_weight = 0;
  bool exact = true;  // proven optimal

  friend bool operator==(const HirePlan&, const HirePlan&) = default;
};

/// Above this many candidates the knapsack falls back to a greedy.
inline constexpr std::size_t kExactCandidateLimit = 30;

/// `seeds` plus every intervention reachable through successor edges, sorted.
std::vector<int> successor_closure(const Instance& instance, std::span<const int> seeds);

bool is_successor_closed(const Instance& instance, std::span<const int> hired);

/// Maximizes the hired weight subject to the budget and successor closure,
/// with every `forced` intervention (and its closure) hired.
/// Throws kInfeasibleMustHire when the forced closure alone exceeds the
/// budget.
HirePlan select_hired(const Instance& instance, std::span<const Cost> weights,
                      std::span<const int> forced);

/// The instance restricted to non-hired interventions, renumbered densely.
/// original_ids[k] is the id in the full instance of intervention k.
struct SubInstance {
  Instance instance;
  std::vector<int> original_ids;
};

/// Throws kContractViolation unless `hired` is successor-closed.
SubInstance reduce_instance(const Instance& instance, std::span<const int> hired);

}  // namespace tisched
