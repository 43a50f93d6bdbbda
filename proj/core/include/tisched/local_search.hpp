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

// Two-phase improvement of a feasible schedule (no hired interventions).
//
// The critical-path phase targets the last intervention of each priority and
// its ancestors: it re-places a member together with its critical
// descendants, or swaps a member's slot with a non-critical intervention of
// the same day. A move is kept only if z strictly decreases.
//
// The packing phase re-places every intervention, in start order, on its day
// or an earlier one without ending later than before. A move is kept if the
// intervention ends earlier, or ends at the same time while fewer
// technician-days are used. No t_lambda can increase.

#pragma once

#include <chrono>
#include <optional>

#include "tisched/model.hpp"

namespace tisched {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

/// The scheduled intervention of `priority` ending last (ties: lowest id),
/// or -1 when the class is empty.
int last_of_priority(const Instance& instance, const Solution& solution, int priority);

Solution critical_path_phase(const Instance& instance, Solution solution,
                             T4Mode mode = T4Mode::kPriority, Deadline deadline = {});

Solution packing_phase(const Instance& instance, Solution solution,
                       T4Mode mode = T4Mode::kPriority, Deadline deadline = {});

/// Alternates both phases until neither changes the schedule or the
/// deadline passes. The result is feasible with z no larger than the input.
Solution local_search(const Instance& instance, Solution solution,
                      T4Mode mode = T4Mode::kPriority, Deadline deadline = {});

}  // namespace tisched
