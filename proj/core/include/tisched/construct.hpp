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

// Criteria-driven greedy insertion.
//
// A Schedule holds the partial plan: per day, a list of teams (disjoint
// technician sets fixed for the whole day) with their busy intervals.
// Interventions without any skill demand are placed without a team.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tisched/model.hpp"
#include "tisched/priority.hpp"

namespace tisched {

using Rng = std::mt19937_64;

/// Per-intervention selection score; larger is inserted first.
using Criteria = std::vector<double>;

/// C_I = weight of I's priority under `p`, for every intervention.
Criteria initial_criteria(const Instance& instance, const PriorityPermutation& p);

struct Interval {
  Time begin = 0;
  Time end = 0;  // exclusive, within-day times
};

struct Team {
  std::vector<int> members;  // sorted technician ids
  std::vector<Interval> busy;
  std::vector<int> jobs;
};

struct DayPlan {
  std::vector<Team> teams;
  std::vector<char> in_team;  // per technician
};

inline constexpr int kNoTeam = -1;

struct Placement {
  int day = 1;
  int team = kNoTeam;      // existing index, teams.size() for a new team,
                           // kNoTeam for interventions without demand
  std::vector<int> added;  // technicians joining the team (sorted)
  Time start = 0;          // within-day start
};

/// Extra restrictions used when re-placing an intervention during local
/// search. Zero / max mean unrestricted.
struct PlacementLimits {
  int max_day = 0;
  Time latest_end = std::numeric_limits<Time>::max();  // absolute
};

class Schedule {
 public:
  explicit Schedule(const Instance& instance);

  /// Rebuilds the day plans of a feasible solution over `instance`.
  static Schedule from_solution(const Instance& instance, const Solution& solution);

  const Instance& instance() const { return *instance_; }
  const std::vector<DayPlan>& days() const { return days_; }  // index day - 1

  bool is_placed(int id) const { return slots_[id].day > 0; }
  int day_of(int id) const { return slots_[id].day; }
  Time start_of(int id) const { return slots_[id].start; }
  int team_of(int id) const { return slots_[id].team; }
  Time absolute_start(int id) const;
  Time absolute_end(int id) const;

  /// Latest absolute end over placed predecessors, 0 if none.
  Time ready_time(int id) const;

  /// Earliest day, then fewest added technicians, then earliest start, then
  /// lowest team index. Predecessors must be placed. Returns nullopt only if
  /// the limits exclude every option or no team can ever cover `id`.
  std::optional<Placement> find_placement(int id, const PlacementLimits& limits = {}) const;

  /// One option per (day, team) pair, including a new team per day, for
  /// days up to limits.max_day (which must be set). Each option carries the
  /// fewest added technicians and the earliest start for that team.
  std::vector<Placement> placement_options(int id, const PlacementLimits& limits) const;

  void apply(int id, const Placement& placement);

  /// Frees the intervention's interval. A team left without interventions
  /// is dissolved; otherwise it shrinks to a smallest subset of its members
  /// that still covers the interventions it keeps. Afterwards the day's teams
  /// trade members for less versatile free technicians where coverage allows.
  void remove(int id);

  /// Assignments of the placed interventions, sorted by id. Objective left
  /// at zero.
  Solution to_solution() const;

  /// Sum over days of the technicians working in a team that day.
  int technician_days() const;

 private:
  struct Slot {
    int day = 0;  // 0 = not placed
    int team = kNoTeam;
    Time start = 0;
  };

  DayPlan& day_plan(int day);
  const DayPlan* find_day(int day) const;
  std::vector<int> free_technicians(int day) const;
  void release_versatile(int day);
  std::optional<Placement> team_option(int id, int day, int team, Time earliest,
                                       Time latest_end) const;
  void options_on_day(int id, int day, Time latest_end, std::vector<Placement>& out) const;
  Time earliest_on_day(int id, int day) const;

  const Instance* instance_;
  std::vector<std::vector<int>> demand_;  // flattened requirements
  std::vector<char> has_demand_;
  int last_unavailable_day_ = 0;
  std::vector<DayPlan> days_;
  std::vector<Slot> slots_;
};

struct GreedyOptions {
  double alpha = 0.15;  // RCL width; 0 picks the best candidate
  T4Mode t4_mode = T4Mode::kPriority;
};

/// Inserts all interventions of `instance`, one candidate at a time. A
/// candidate is an unplaced intervention whose predecessors are placed.
/// Without `rng` the candidate with maximum criteria is taken (ties: larger
/// weight, then lower id). With `rng` the pick is uniform over candidates
/// within alpha of the best criteria. The returned solution is feasible and
/// carries its evaluated objective. Throws kUnplaceable when some
/// intervention cannot be covered by the whole workforce.
Solution run_greedy(const Instance& instance, std::span<const Cost> weights,
                    const Criteria& criteria, Rng* rng, const GreedyOptions& options = {});

/// Same, computing the weights mintec * duration first.
Solution run_greedy(const Instance& instance, const Criteria& criteria, Rng* rng = nullptr,
                    const GreedyOptions& options = {});

}  // namespace tisched
