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

// Minimum technician counts (set multicover) and outsourcing weights.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tisched/model.hpp"

namespace tisched {

/// Requirement matrix flattened row-major: index d * levels + l.
std::vector<int> demand_of(const Instance& instance, const Intervention& intervention);

/// Demand left after `team` has contributed; entries clamp at zero.
std::vector<int> residual_demand(const Instance& instance,
                                 const Intervention& intervention,
                                 std::span<const int> team);

/// Smallest subset of `candidates` (technician ids) meeting a flattened
/// demand exactly, or nullopt when even all candidates fall short.
///
/// Branch-and-bound over technicians: the incumbent is seeded by a greedy
/// cover (largest residual coverage first, lowest id on ties), the bound is
/// the largest residual demand, and branching happens on the row with the
/// fewest remaining suppliers. Technicians with identical profiles are
/// branched on once. The greedy set is returned whenever it is optimal.
std::optional<std::vector<int>> minimum_cover(const Instance& instance,
                                              std::span<const int> demand,
                                              std::span<const int> candidates);

/// Exact minimum team size able to perform `intervention`, or nullopt when
/// the whole workforce cannot cover it.
std::optional<int> mintec(const Instance& instance, const Intervention& intervention);

inline constexpr int kUncoverable = -1;

struct PreprocessResult {
  std::vector<int> mintec;    // kUncoverable for uncoverable interventions
  std::vector<Cost> weight;   // mintec * duration, 0 when uncoverable
  std::vector<int> uncoverable;
};

PreprocessResult compute_weights(const Instance& instance);

}  // namespace tisched
