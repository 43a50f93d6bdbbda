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

// GRASP main loop and the full solve pipeline:
//
//   1. weights mintec * duration, knapsack choice of hired interventions;
//   2. deterministic greedy for the 24 priority orders, keep the best two;
//   3. for each of the two orders in turn, repeat randomized construction,
//      local search on improving constructions, and criteria updates on the
//      last interventions of each priority and their predecessors.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tisched/construct.hpp"
#include "tisched/hire_select.hpp"
#include "tisched/local_search.hpp"
#include "tisched/model.hpp"
#include "tisched/order_search.hpp"
#include "tisched/preprocess.hpp"

namespace tisched {

enum class PredUpdateMode { kDirect, kTransitive };

PredUpdateMode parse_pred_update_mode(std::string_view text);

struct SearchConfig {
  double time_limit_seconds = 60.0;
  std::optional<int> iterations;  // per order; replaces the wall clock
  std::uint64_t seed = 0;
  double alpha = 0.15;
  PredUpdateMode pred_update = PredUpdateMode::kDirect;
  T4Mode t4_mode = T4Mode::kPriority;
  bool reset_criteria = false;
  std::ostream* log = nullptr;  // receives one line per construction
};

/// Validates the numeric fields; throws kConfig.
void validate(const SearchConfig& config);

/// Either an iteration count or a wall-clock deadline, checked between
/// iterations only.
struct StopRule {
  std::optional<int> iterations;
  Deadline deadline;

  bool reached(int completed) const;
};

struct Incumbent {
  Solution best;
  Time best_z = 0;
  int iterations = 0;
  std::vector<Time> greedy_trace;  // z of each construction
  std::vector<Time> best_trace;    // incumbent z after each iteration
};

/// Adds the weight of priority lambda under `p` to the last intervention of
/// each priority lambda and to its predecessors (direct or transitive).
void update_criteria(Criteria& criteria, const Instance& instance, const Solution& solution,
                     const PriorityPermutation& p, PredUpdateMode mode = PredUpdateMode::kDirect);

/// GRASP iterations for one priority order. The first construction is the
/// deterministic greedy and always runs, even past the deadline.
Incumbent grasp_run(const Instance& instance, const PriorityPermutation& p,
                    const SearchConfig& config, const StopRule& stop, Rng& rng);

struct SolveReport {
  Solution solution;  // over the full instance, hired set included
  PreprocessResult preprocess;
  HirePlan plan;
  std::optional<OrderSearchResult> orders;  // absent when everything is hired
  std::vector<Incumbent> runs;
};

/// Runs the whole pipeline. The returned solution passes check(); a failed
/// self-check throws kContractViolation. Throws kInfeasibleMustHire when the
/// uncoverable interventions cannot be outsourced within the budget.
SolveReport solve(const Instance& instance, const SearchConfig& config);

}  // namespace tisched
