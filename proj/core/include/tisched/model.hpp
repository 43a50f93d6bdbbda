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

// Domain model of the technicians-and-interventions scheduling problem.
//
// Time is a single integer axis: day d (1-based) covers the absolute
// interval [(d-1)*hmax, d*hmax). An intervention never crosses a day
// boundary. Requirements are cumulative: requirements[i][n] is the number of
// team members whose level in domain i is at least n+1.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tisched/error.hpp"

namespace tisched {

using Time = std::int64_t;
using Cost = std::int64_t;

inline constexpr int kPriorityCount = 4;

/// Objective coefficients of t1..t4.
inline constexpr std::array<Time, kPriorityCount> kObjectiveWeights{28, 14, 4, 1};

struct Technician {
  int id = 0;
  std::vector<int> skills;            // skills[i] = level in domain i, 0 = none
  std::vector<int> unavailable_days;  // sorted, 1-based

  bool available_on(int day) const;

  friend bool operator==(const Technician&, const Technician&) = default;
};

struct Intervention {
  int id = 0;
  int duration = 1;
  int priority = 1;  // 1..4
  Cost cost = 0;
  std::vector<int> predecessors;
  std::vector<std::vector<int>> requirements;  // [domain][level index]

  bool has_demand() const;

  friend bool operator==(const Intervention&, const Intervention&) = default;
};

struct Instance {
  int hmax = 0;
  Cost budget = 0;
  int domains = 0;
  int levels = 0;
  std::vector<Technician> technicians;
  std::vector<Intervention> interventions;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws Error(kSemantic) naming the first violated invariant: dense ids,
/// skill and requirement shapes, non-increasing requirements, durations in
/// (0, hmax], priorities in 1..4, existing predecessors, acyclic precedence.
void validate(const Instance& instance);

/// successors[i] lists the interventions that have i as a predecessor.
std::vector<std::vector<int>> successor_lists(const Instance& instance);

/// Topological order of the intervention ids, or empty if there is a cycle.
std::vector<int> topological_order(const Instance& instance);

// --- time axis -------------------------------------------------------------

/// (day - 1) * hmax + start + duration. Throws kMalformedPlacement when
/// day < 1 or start < 0 and kDayOverrun when start + duration > hmax.
Time absolute_end(int day, Time start, Time duration, Time hmax);

inline constexpr Time absolute_start(int day, Time start, Time hmax) {
  return static_cast<Time>(day - 1) * hmax + start;
}

// --- teams -----------------------------------------------------------------

/// True iff for every (domain, level) at least requirements[i][n] members
/// of `team` have skill >= n + 1. Unknown ids are ignored.
bool team_covers(const Instance& instance, std::span<const int> team,
                 const Intervention& intervention);

/// Same test on explicit technician records.
bool team_covers(std::span<const Technician> team,
                 const Intervention& intervention);

// --- solutions -------------------------------------------------------------

struct Assignment {
  int intervention = 0;
  int day = 1;
  Time start = 0;
  std::vector<int> team;  // sorted technician ids

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Objective {
  std::array<Time, kPriorityCount> ending{};  // t1..t4
  Time z = 0;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Solution {
  std::vector<int> hired;
  std::vector<Assignment> assignments;
  Objective objective;  // cached; evaluate() is authoritative

  /// Sorts hired ids, assignments by intervention id and every team.
  void normalize();

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// How t4 is measured: the end of the last priority-4 intervention, or the
/// end of the last intervention of any priority.
enum class T4Mode { kPriority, kMakespan };

std::string_view to_string(T4Mode mode);
T4Mode parse_t4_mode(std::string_view text);

Time objective_value(const std::array<Time, kPriorityCount>& ending);

/// Recomputes t1..t4 and z from the assignments. Requires each assignment to
/// reference an existing intervention.
Objective evaluate(const Instance& instance, const Solution& solution,
                   T4Mode mode = T4Mode::kPriority);

// --- feasibility -----------------------------------------------------------

enum class ViolationCode {
  kTeamChanged,
  kOverlap,
  kPrecedence,
  kDayOverrun,
  kSkillShortfall,
  kBudgetExceeded,
  kTechDoubleBooked,
  kTechUnavailable,
  kMissingIntervention,
  kHiredSuccessorScheduled,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  bool contains(ViolationCode code) const;
};

/// Full feasibility check. Never throws on malformed solutions; every
/// problem becomes a report entry.
ViolationReport check(const Instance& instance, const Solution& solution);

/// check(instance, solution).empty(), stopping at the first violation.
bool is_feasible(const Instance& instance, const Solution& solution);

}  // namespace tisched
