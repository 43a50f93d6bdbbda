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

#include "tisched/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

namespace tisched {

namespace {

struct OpenTeam {
  unsigned mask = 0;
  Time last_end = 0;  // within-day
};

class OracleSearch {
 public:
  OracleSearch(const Instance& instance, const OracleLimits& limits, T4Mode mode)
      : instance_(instance), limits_(limits), mode_(mode) {
    n_ = static_cast<int>(instance.interventions.size());
    const int n_tech = static_cast<int>(instance.technicians.size());
    const unsigned masks = 1u << n_tech;
    covers_.assign(n_, std::vector<char>(masks, 0));
    for (int j = 0; j < n_; ++j) {
      for (unsigned mask = 0; mask < masks; ++mask) {
        std::vector<int> team;
        for (int t = 0; t < n_tech; ++t) {
          if (mask & (1u << t)) team.push_back(t);
        }
        covers_[j][mask] = team_covers(instance, team, instance.interventions[j]) ? 1 : 0;
      }
      demand_.push_back(instance.interventions[j].has_demand());
    }
    available_.assign(limits.max_days + 1, 0);
    for (int d = 1; d <= limits.max_days; ++d) {
      for (int t = 0; t < n_tech; ++t) {
        if (instance.technicians[t].available_on(d)) available_[d] |= 1u << t;
        if (!instance.technicians[t].unavailable_days.empty()) has_calendars_ = true;
      }
    }
  }

  OracleResult run() {
    const auto succ = successor_lists(instance_);
    for (unsigned hire = 0; hire < (1u << n_); ++hire) {
      Cost cost = 0;
      bool closed = true;
      for (int j = 0; j < n_; ++j) {
        if (!(hire & (1u << j))) continue;
        cost += instance_.interventions[j].cost;
        for (int s : succ[j]) closed = closed && (hire & (1u << s));
      }
      if (!closed || cost > instance_.budget) continue;
      search(hire);
    }
    if (best_z_ == std::numeric_limits<Time>::max()) {
      throw Error(ErrorCode::kLimitExceeded,
                  "no feasible schedule within " + std::to_string(limits_.max_days) + " days");
    }
    return OracleResult{best_z_, best_, nodes_};
  }

 private:
  void search(unsigned hire) {
    hired_ = hire;
    active_count_ = 0;
    for (int j = 0; j < n_; ++j) active_count_ += (hire & (1u << j)) ? 0 : 1;
    day_.assign(n_, 0);
    start_.assign(n_, 0);
    team_.assign(n_, 0);
    teams_.assign(limits_.max_days + 1, {});
    used_.assign(limits_.max_days + 1, 0);
    ending_.fill(0);
    makespan_ = 0;
    placed_ = 0;
    last_abs_ = 0;
    last_id_ = -1;
    max_day_ = 0;
    dfs();
  }

  Time abs_start(int j) const {
    return absolute_start(day_[j], start_[j], instance_.hmax);
  }
  Time abs_end(int j) const { return abs_start(j) + instance_.interventions[j].duration; }
  bool active(int j) const { return !(hired_ & (1u << j)); }

  std::array<Time, kPriorityCount> with_makespan(std::array<Time, kPriorityCount> e,
                                                 Time makespan) const {
    if (mode_ == T4Mode::kMakespan) e[kPriorityCount - 1] = makespan;
    return e;
  }

  // Every unplaced active intervention starts no earlier than last_abs_.
  Time lower_bound() const {
    auto bound = ending_;
    Time makespan = makespan_;
    for (int j = 0; j < n_; ++j) {
      if (!active(j) || day_[j] > 0) continue;
      const auto& job = instance_.interventions[j];
      const Time end = last_abs_ + job.duration;
      bound[job.priority - 1] = std::max(bound[job.priority - 1], end);
      makespan = std::max(makespan, end);
    }
    return objective_value(with_makespan(bound, makespan));
  }

  void record() {
    const Time z = objective_value(with_makespan(ending_, makespan_));
    if (z >= best_z_) return;
    best_z_ = z;
    best_ = Solution{};
    for (int j = 0; j < n_; ++j) {
      if (!active(j)) {
        best_.hired.push_back(j);
        continue;
      }
      Assignment a;
      a.intervention = j;
      a.day = day_[j];
      a.start = start_[j];
      for (int t = 0; t < static_cast<int>(instance_.technicians.size()); ++t) {
        if (team_[j] & (1u << t)) a.team.push_back(t);
      }
      best_.assignments.push_back(std::move(a));
    }
    best_.objective.ending = with_makespan(ending_, makespan_);
    best_.objective.z = z;
  }

  void place(int j, int day, Time start, unsigned mask, int team_index, bool new_team) {
    const auto& job = instance_.interventions[j];
    // Save state.
    const auto saved_ending = ending_;
    const Time saved_makespan = makespan_;
    const Time saved_last_abs = last_abs_;
    const int saved_last_id = last_id_;
    const int saved_max_day = max_day_;
    Time saved_team_end = 0;

    day_[j] = day;
    start_[j] = start;
    team_[j] = mask;
    if (mask != 0) {
      if (new_team) {
        teams_[day].push_back({mask, start + job.duration});
        used_[day] |= mask;
      } else {
        saved_team_end = teams_[day][team_index].last_end;
        teams_[day][team_index].last_end = start + job.duration;
      }
    }
    const Time end = abs_end(j);
    ending_[job.priority - 1] = std::max(ending_[job.priority - 1], end);
    makespan_ = std::max(makespan_, end);
    last_abs_ = abs_start(j);
    last_id_ = j;
    max_day_ = std::max(max_day_, day);
    ++placed_;

    if (lower_bound() < best_z_) dfs();

    --placed_;
    max_day_ = saved_max_day;
    last_id_ = saved_last_id;
    last_abs_ = saved_last_abs;
    makespan_ = saved_makespan;
    ending_ = saved_ending;
    if (mask != 0) {
      if (new_team) {
        teams_[day].pop_back();
        used_[day] &= ~mask;
      } else {
        teams_[day][team_index].last_end = saved_team_end;
      }
    }
    day_[j] = 0;
  }

  void dfs() {
    if (++nodes_ > limits_.node_budget) {
      throw Error(ErrorCode::kLimitExceeded, "oracle node budget exhausted");
    }
    if (placed_ == active_count_) {
      record();
      return;
    }
    const Time hmax = instance_.hmax;
    const int last_day = last_id_ < 0 ? 1 : day_[last_id_];
    int day_hi = limits_.max_days;
    // Without calendars an empty day can always be removed by shifting the
    // later days down, so the next day used is at most one past the last.
    if (!has_calendars_) day_hi = std::min(day_hi, max_day_ + 1);

    for (int j = 0; j < n_; ++j) {
      if (!active(j) || day_[j] > 0) continue;
      const auto& job = instance_.interventions[j];
      Time ready = 0;
      bool blocked = false;
      for (int p : job.predecessors) {
        if (day_[p] == 0) {
          blocked = true;
          break;
        }
        ready = std::max(ready, abs_end(p));
      }
      if (blocked) continue;

      for (int day = last_day; day <= day_hi; ++day) {
        const Time offset = static_cast<Time>(day - 1) * hmax;
        std::vector<Time> starts{0};
        for (int k = 0; k < n_; ++k) {
          if (day_[k] == day) starts.push_back(start_[k] + instance_.interventions[k].duration);
        }
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

        for (Time start : starts) {
          const Time abs = offset + start;
          if (abs < ready || start + job.duration > hmax) continue;
          if (abs < last_abs_ || (abs == last_abs_ && j < last_id_)) continue;

          if (!demand_[j]) {
            place(j, day, start, 0, -1, false);
            continue;
          }
          for (int k = 0; k < static_cast<int>(teams_[day].size()); ++k) {
            const auto team = teams_[day][k];
            if (covers_[j][team.mask] && team.last_end <= start) {
              place(j, day, start, team.mask, k, false);
            }
          }
          const unsigned free = available_[day] & ~used_[day];
          for (unsigned s = free; s != 0; s = (s - 1) & free) {
            if (covers_[j][s]) place(j, day, start, s, -1, true);
          }
        }
      }
    }
  }

  const Instance& instance_;
  const OracleLimits& limits_;
  T4Mode mode_;
  int n_ = 0;
  std::vector<std::vector<char>> covers_;  // [job][technician mask]
  std::vector<char> demand_;
  std::vector<unsigned> available_;  // [day] technician mask
  bool has_calendars_ = false;

  unsigned hired_ = 0;
  int active_count_ = 0;
  std::vector<int> day_;
  std::vector<Time> start_;
  std::vector<unsigned> team_;
  std::vector<std::vector<OpenTeam>> teams_;  // [day]
  std::vector<unsigned> used_;                // [day]
  std::array<Time, kPriorityCount> ending_{};
  Time makespan_ = 0;
  int placed_ = 0;
  Time last_abs_ = 0;
  int last_id_ = -1;
  int max_day_ = 0;

  std::int64_t nodes_ = 0;
  Time best_z_ = std::numeric_limits<Time>::max();
  Solution best_;
};

}  // namespace

OracleResult brute_force_optimal(const Instance& instance, const OracleLimits& limits,
                                 T4Mode mode) {
  if (limits.max_interventions <= 0 || limits.max_technicians <= 0 || limits.max_days <= 0 ||
      limits.node_budget <= 0) {
    throw Error(ErrorCode::kConfig, "oracle limits must be positive");
  }
  if (static_cast<int>(instance.interventions.size()) > limits.max_interventions ||
      static_cast<int>(instance.technicians.size()) > limits.max_technicians) {
    throw Error(ErrorCode::kLimitExceeded,
                "instance has " + std::to_string(instance.interventions.size()) +
                    " interventions and " + std::to_string(instance.technicians.size()) +
                    " technicians, above the oracle limits");
  }
  if (limits.max_interventions > 20 || limits.max_technicians > 16) {
    throw Error(ErrorCode::kConfig, "oracle limits above 20 interventions / 16 technicians");
  }
  return OracleSearch(instance, limits, mode).run();
}

}  // namespace tisched
