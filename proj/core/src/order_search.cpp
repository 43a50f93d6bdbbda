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

#include "tisched/order_search.hpp"

#include <algorithm>
#include <tuple>

#include "tisched/construct.hpp"
#include "tisched/preprocess.hpp"

namespace tisched {

PriorityPermutation::PriorityPermutation(std::array<int, kPriorityCount> order)
    : order_(order) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, kPriorityCount>{1, 2, 3, 4}) {
    throw Error(ErrorCode::kConfig, "priority order must be a permutation of 1..4");
  }
}

Time PriorityPermutation::weight_of(int priority) const {
  for (int k = 0; k < kPriorityCount; ++k) {
    if (order_[k] == priority) return kObjectiveWeights[k];
  }
  throw Error(ErrorCode::kConfig, "priority must be in 1..4, got " + std::to_string(priority));
}

std::string PriorityPermutation::to_string() const {
  std::string text = "(";
  for (int k = 0; k < kPriorityCount; ++k) {
    if (k > 0) text += ',';
    text += std::to_string(order_[k]);
  }
  return text + ")";
}

std::vector<PriorityPermutation> PriorityPermutation::all() {
  std::array<int, kPriorityCount> order{1, 2, 3, 4};
  std::vector<PriorityPermutation> result;
  do {
    result.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

OrderSearchResult best_two_permutations(const Instance& instance, T4Mode mode) {
  const auto weights = compute_weights(instance).weight;
  OrderSearchResult result;
  for (const auto& p : PriorityPermutation::all()) {
    const auto solution = run_greedy(instance, weights, initial_criteria(instance, p), nullptr,
                                     GreedyOptions{0.0, mode});
    result.sweep.push_back({p, solution.objective.z});
  }
  std::vector<SweepEntry> ranked = result.sweep;
  std::stable_sort(ranked.begin(), ranked.end(), [](const SweepEntry& a, const SweepEntry& b) {
    return std::tie(a.z, a.permutation) < std::tie(b.z, b.permutation);
  });
  result.first = ranked[0].permutation;
  result.second = ranked[1].permutation;
  return result;
}

}  // namespace tisched
