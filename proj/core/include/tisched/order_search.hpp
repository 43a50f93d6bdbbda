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

#pragma once

#include <vector>

#include "tisched/model.hpp"
#include "tisched/priority.hpp"

namespace tisched {

struct SweepEntry {
  PriorityPermutation permutation;
  Time z = 0;
};

struct OrderSearchResult {
  PriorityPermutation first;
  PriorityPermutation second;
  std::vector<SweepEntry> sweep;  // all 24 runs, lexicographic order of p
};

/// Runs the deterministic greedy once per permutation of the priorities and
/// keeps the two permutations with the smallest z (ties: lexicographically
/// smaller permutation). Expects the hired interventions already removed.
OrderSearchResult best_two_permutations(const Instance& instance,
                                        T4Mode mode = T4Mode::kPriority);

}  // namespace tisched
