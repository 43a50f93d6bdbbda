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

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tisched/model.hpp"

namespace tisched {

/// An ordering of the four priorities. The priority at position k receives
/// the k-th objective coefficient (28, 14, 4, 1) as its insertion weight.
class PriorityPermutation {
 public:
  /// The identity order (1, 2, 3, 4).
  PriorityPermutation() : order_{1, 2, 3, 4} {}

  /// Throws kConfig unless `order` is a permutation of 1..4.
  explicit PriorityPermutation(std::array<int, kPriorityCount> order);

  const std::array<int, kPriorityCount>& order() const { return order_; }

  /// Insertion weight of interventions with the given priority (1..4).
  Time weight_of(int priority) const;

  /// Formats as "(1,2,3,4)".
  std::string to_string() const;

  /// All 24 permutations in lexicographic order.
  static std::vector<PriorityPermutation> all();

  friend auto operator<=>(const PriorityPermutation&, const PriorityPermutation&) = default;

 private:
  std::array<int, kPriorityCount> order_;
};

inline Time weight_of(const PriorityPermutation& p, int priority) {
  return p.weight_of(priority);
}

}  // namespace tisched
