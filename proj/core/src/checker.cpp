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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tisched/model.hpp"

namespace tisched {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kTeamChanged: return "TEAM_CHANGED";
    case ViolationCode::kOverlap: return "OVERLAP";
    case ViolationCode::kPrecedence: return "PRECEDENCE";
    case ViolationCode::kDayOverrun: return "DAY_OVERRUN";
    case ViolationCode::kSkillShortfall: return "SKILL_SHORTFALL";
    case ViolationCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ViolationCode::kTechDoubleBooked: return "TECH_DOUBLE_BOOKED";
    case ViolationCode::kTechUnavailable: return "TECH_UNAVAILABLE";
    case ViolationCode::kMissingIntervention: return "MISSING_INTERVENTION";
    case ViolationCode::kHiredSuccessorScheduled:
      return "HIRED_SUCCESSOR_SCHEDULED";
  }
  return "UNKNOWN";
}

bool ViolationReport::contains(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

namespace {

class Sink {
 public:
  explicit Sink(bool stop_at_first) : stop_at_first_(stop_at_first) {}

  void add(ViolationCode code, std::string detail) {
    report_.violations.push_back({code, std::move(detail)});
  }
  bool done() const { return stop_at_first_ && !report_.empty(); }
  ViolationReport take() { return std::move(report_); }

 private:
  bool stop_at_first_;
  ViolationReport report_;
};

std::string job_name(int id) { return "intervention " + std::to_string(id); }

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void run_check(const Instance& instance, const Solution& solution, Sink& sink) {
  enum class Status { kNone, kHired, kAssigned };
  const int n = static_cast<int>(instance.interventions.size());
  const int n_tech = static_cast<int>(instance.technicians.size());
  std::vector<Status> status(n, Status::kNone);
  std::vector<int> where(n, -1);  // index into solution.assignments

  Cost hired_cost = 0;
  for (int id : solution.hired) {
    if (id < 0 || id >= n) {
      sink.add(ViolationCode::kMissingIntervention,
               "hired id " + std::to_string(id) + " does not exist");
      continue;
    }
    if (status[id] != Status::kNone) {
      sink.add(ViolationCode::kMissingIntervention,
               job_name(id) + " is hired more than once");
      continue;
    }
    status[id] = Status::kHired;
    hired_cost += instance.interventions[id].cost;
  }
  if (sink.done()) return;

  const int n_assign = static_cast<int>(solution.assignments.size());
  std::vector<char> valid(n_assign, 0);
  // Normalized team per assignment (sorted, known ids only).
  std::vector<std::vector<int>> teams(n_assign);
  for (int k = 0; k < n_assign; ++k) {
    const auto& a = solution.assignments[k];
    const int id = a.intervention;
    if (id < 0 || id >= n) {
      sink.add(ViolationCode::kMissingIntervention,
               "assignment references unknown intervention " +
                   std::to_string(id));
      continue;
    }
    if (status[id] == Status::kHired) {
      sink.add(ViolationCode::kMissingIntervention,
               job_name(id) + " is both hired and scheduled");
      continue;
    }
    if (status[id] == Status::kAssigned) {
      sink.add(ViolationCode::kMissingIntervention,
               job_name(id) + " is scheduled more than once");
      continue;
    }
    status[id] = Status::kAssigned;
    where[id] = k;
    valid[k] = 1;
  }
  if (sink.done()) return;

  for (int id = 0; id < n; ++id) {
    if (status[id] == Status::kNone) {
      sink.add(ViolationCode::kMissingIntervention,
               job_name(id) + " is neither hired nor scheduled");
    }
  }
  if (hired_cost > instance.budget) {
    sink.add(ViolationCode::kBudgetExceeded,
             "hired cost " + std::to_string(hired_cost) + " exceeds budget " +
                 std::to_string(instance.budget));
  }
  if (sink.done()) return;

  // Per-assignment checks: day bounds, team validity, skills.
  for (int k = 0; k < n_assign; ++k) {
    if (!valid[k]) continue;
    const auto& a = solution.assignments[k];
    const auto& job = instance.interventions[a.intervention];
    const std::string name = job_name(a.intervention);
    if (a.day < 1 || a.start < 0) {
      sink.add(ViolationCode::kDayOverrun,
               name + " has malformed placement (day " + std::to_string(a.day) +
                   ", start " + std::to_string(a.start) + ")");
    } else if (a.start + job.duration > instance.hmax) {
      sink.add(ViolationCode::kDayOverrun,
               name + " ends at " + std::to_string(a.start + job.duration) +
                   " after HMAX " + std::to_string(instance.hmax));
    }
    auto& team = teams[k];
    for (int t : a.team) {
      if (t < 0 || t >= n_tech) {
        sink.add(ViolationCode::kTechUnavailable,
                 name + " uses unknown technician " + std::to_string(t));
        continue;
      }
      team.push_back(t);
      if (!instance.technicians[t].available_on(a.day)) {
        sink.add(ViolationCode::kTechUnavailable,
                 "technician " + std::to_string(t) + " is unavailable on day " +
                     std::to_string(a.day) + " (" + name + ")");
      }
    }
    std::sort(team.begin(), team.end());
    if (std::adjacent_find(team.begin(), team.end()) != team.end()) {
      sink.add(ViolationCode::kTechDoubleBooked,
               name + " lists a technician twice in its team");
      team.erase(std::unique(team.begin(), team.end()), team.end());
    }
    if (!team_covers(instance, team, job)) {
      sink.add(ViolationCode::kSkillShortfall,
               name + " team does not meet the skill requirements");
    }
    if (sink.done()) return;
  }

  // Precedence and the outsourcing closure rule.
  const Time hmax = instance.hmax;
  for (int k = 0; k < n_assign; ++k) {
    if (!valid[k]) continue;
    const auto& a = solution.assignments[k];
    const auto& job = instance.interventions[a.intervention];
    const Time start = absolute_start(a.day, a.start, hmax);
    for (int p : job.predecessors) {
      if (status[p] == Status::kHired) {
        sink.add(ViolationCode::kHiredSuccessorScheduled,
                 job_name(p) + " is hired but its successor " +
                     std::to_string(a.intervention) + " is scheduled");
      } else if (status[p] == Status::kAssigned) {
        const auto& pa = solution.assignments[where[p]];
        const Time pred_end = absolute_start(pa.day, pa.start, hmax) +
                              instance.interventions[p].duration;
        if (pred_end > start) {
          sink.add(ViolationCode::kPrecedence,
                   "predecessor " + std::to_string(p) + " ends at " +
                       std::to_string(pred_end) + " after " +
                       job_name(a.intervention) + " starts at " +
                       std::to_string(start));
        }
      }
    }
    if (sink.done()) return;
  }

  // Team identity and technician timelines, per day.
  std::map<int, std::map<int, std::vector<int>>> by_day_tech;
  for (int k = 0; k < n_assign; ++k) {
    if (!valid[k]) continue;
    for (int t : teams[k]) by_day_tech[solution.assignments[k].day][t].push_back(k);
  }
  std::set<std::pair<int, int>> overlapping;
  for (const auto& [day, techs] : by_day_tech) {
    for (const auto& [tech, jobs] : techs) {
      // Team membership must be fixed for the whole day.
      const auto& first = teams[jobs.front()];
      for (int k : jobs) {
        const auto& other = teams[k];
        if (other == first) continue;
        const bool nested = is_subset(first, other) || is_subset(other, first);
        sink.add(nested ? ViolationCode::kTeamChanged
                        : ViolationCode::kTechDoubleBooked,
                 "technician " + std::to_string(tech) + " works in " +
                     (nested ? "a changing team" : "two different teams") +
                     " on day " + std::to_string(day));
        break;
      }
      if (sink.done()) return;

      // Intervals of one technician must be disjoint.
      std::vector<int> order = jobs;
      auto start_of = [&](int k) { return solution.assignments[k].start; };
      auto end_of = [&](int k) {
        const auto& a = solution.assignments[k];
        return a.start + instance.interventions[a.intervention].duration;
      };
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::pair(start_of(x), x) < std::pair(start_of(y), y);
      });
      int running = -1;
      for (int k : order) {
        if (running >= 0 && start_of(k) < end_of(running)) {
          const int a = solution.assignments[running].intervention;
          const int b = solution.assignments[k].intervention;
          if (overlapping.insert(std::minmax(a, b)).second) {
            sink.add(ViolationCode::kOverlap,
                     "interventions " + std::to_string(std::min(a, b)) +
                         " and " + std::to_string(std::max(a, b)) +
                         " overlap on day " + std::to_string(day) +
                         " sharing technician " + std::to_string(tech));
          }
        }
        if (running < 0 || end_of(k) > end_of(running)) running = k;
      }
      if (sink.done()) return;
    }
  }
}

}  // namespace

ViolationReport check(const Instance& instance, const Solution& solution) {
  Sink sink(false);
  run_check(instance, solution, sink);
  return sink.take();
}

bool is_feasible(const Instance& instance, const Solution& solution) {
  Sink sink(true);
  run_check(instance, solution, sink);
  return sink.take().empty();
}

}  // namespace tisched
