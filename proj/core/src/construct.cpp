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

#include "tisched/construct.hpp"

#include <algorithm>
#include <span>
#include <tuple>

#include "tisched/preprocess.hpp"

namespace tisched {

Criteria initial_criteria(const Instance& instance, const PriorityPermutation& p) {
  Criteria criteria;
  criteria.reserve(instance.interventions.size());
  for (const auto& job : instance.interventions) {
    criteria.push_back(static_cast<double>(p.weight_of(job.priority)));
  }
  return criteria;
}

namespace {

int versatility(const Technician& tech) {
  int total = 0;
  for (int level : tech.skills) total += level;
  return total;
}

bool meets(const Instance& instance, std::span<const int> members, std::span<const int> need) {
  for (int d = 0; d < instance.domains; ++d) {
    for (int l = 0; l < instance.levels; ++l) {
      int count = 0;
      for (int t : members) count += instance.technicians[t].skills[d] > l ? 1 : 0;
      if (count < need[d * instance.levels + l]) return false;
    }
  }
  return true;
}

}  // namespace

Schedule::Schedule(const Instance& instance)
    : instance_(&instance), slots_(instance.interventions.size()) {
  for (const auto& job : instance.interventions) {
    demand_.push_back(demand_of(instance, job));
    has_demand_.push_back(job.has_demand() ? 1 : 0);
  }
  for (const auto& tech : instance.technicians) {
    if (!tech.unavailable_days.empty()) {
      last_unavailable_day_ = std::max(last_unavailable_day_, tech.unavailable_days.back());
    }
  }
}

Schedule Schedule::from_solution(const Instance& instance, const Solution& solution) {
  Schedule schedule(instance);
  std::vector<const Assignment*> order;
  for (const auto& a : solution.assignments) {
    if (a.intervention < 0 || a.intervention >= static_cast<int>(instance.interventions.size())) {
      throw Error(ErrorCode::kUnknownId,
                  "assignment references unknown intervention " + std::to_string(a.intervention));
    }
    order.push_back(&a);
  }
  std::sort(order.begin(), order.end(), [](const Assignment* x, const Assignment* y) {
    return std::tie(x->day, x->start, x->intervention) <
           std::tie(y->day, y->start, y->intervention);
  });
  for (const Assignment* a : order) {
    Placement p;
    p.day = a->day;
    p.start = a->start;
    if (!a->team.empty()) {
      std::vector<int> members = a->team;
      std::sort(members.begin(), members.end());
      const DayPlan* plan = schedule.find_day(a->day);
      const int n_teams = plan ? static_cast<int>(plan->teams.size()) : 0;
      p.team = n_teams;
      for (int k = 0; k < n_teams; ++k) {
        if (plan->teams[k].members == members) {
          p.team = k;
          break;
        }
      }
      if (p.team == n_teams) p.added = std::move(members);
    }
    schedule.apply(a->intervention, p);
  }
  return schedule;
}

Time Schedule::absolute_start(int id) const {
  const Slot& s = slots_[id];
  return tisched::absolute_start(s.day, s.start, instance_->hmax);
}

Time Schedule::absolute_end(int id) const {
  return absolute_start(id) + instance_->interventions[id].duration;
}

Time Schedule::ready_time(int id) const {
  Time ready = 0;
  for (int p : instance_->interventions[id].predecessors) {
    if (is_placed(p)) ready = std::max(ready, absolute_end(p));
  }
  return ready;
}

DayPlan& Schedule::day_plan(int day) {
  while (static_cast<int>(days_.size()) < day) {
    DayPlan plan;
    plan.in_team.assign(instance_->technicians.size(), 0);
    days_.push_back(std::move(plan));
  }
  return days_[day - 1];
}

const DayPlan* Schedule::find_day(int day) const {
  if (day < 1 || day > static_cast<int>(days_.size())) return nullptr;
  return &days_[day - 1];
}

std::vector<int> Schedule::free_technicians(int day) const {
  const DayPlan* plan = find_day(day);
  std::vector<int> free;
  for (const auto& tech : instance_->technicians) {
    if (plan != nullptr && plan->in_team[tech.id]) continue;
    if (!tech.available_on(day)) continue;
    free.push_back(tech.id);
  }
  return free;
}

Time Schedule::earliest_on_day(int id, int day) const {
  const Time offset = static_cast<Time>(day - 1) * instance_->hmax;
  return std::max<Time>(0, ready_time(id) - offset);
}

namespace {

// Earliest start >= earliest where [start, start + duration) avoids `busy`
// and ends by hmax.
std::optional<Time> earliest_gap(const std::vector<Interval>& busy, Time earliest,
                                 Time duration, Time hmax) {
  Time t = earliest;
  for (const auto& iv : busy) {
    if (iv.end <= t) continue;
    if (iv.begin >= t + duration) break;
    t = iv.end;
  }
  if (t + duration > hmax) return std::nullopt;
  return t;
}

bool all_zero(const std::vector<int>& demand) {
  return std::all_of(demand.begin(), demand.end(), [](int r) { return r == 0; });
}

}  // namespace

std::optional<Placement> Schedule::team_option(int id, int day, int team, Time earliest,
                                               Time latest_end) const {
  const auto& job = instance_->interventions[id];
  const DayPlan* plan = find_day(day);
  const int n_teams = plan ? static_cast<int>(plan->teams.size()) : 0;
  static const std::vector<Interval> kNoIntervals;
  const auto& busy = team < n_teams ? plan->teams[team].busy : kNoIntervals;

  const auto start = earliest_gap(busy, earliest, job.duration, instance_->hmax);
  if (!start) return std::nullopt;
  if (tisched::absolute_start(day, *start, instance_->hmax) + job.duration > latest_end) {
    return std::nullopt;
  }

  Placement p;
  p.day = day;
  p.team = team;
  p.start = *start;
  if (team < n_teams) {
    const auto residual = residual_demand(*instance_, job, plan->teams[team].members);
    if (!all_zero(residual)) {
      auto added = minimum_cover(*instance_, residual, free_technicians(day));
      if (!added) return std::nullopt;
      p.added = std::move(*added);
    }
  } else {
    auto added = minimum_cover(*instance_, demand_[id], free_technicians(day));
    if (!added) return std::nullopt;
    p.added = std::move(*added);
  }
  return p;
}

void Schedule::options_on_day(int id, int day, Time latest_end,
                              std::vector<Placement>& out) const {
  const Time earliest = earliest_on_day(id, day);
  if (earliest + instance_->interventions[id].duration > instance_->hmax) return;
  if (!has_demand_[id]) {
    if (tisched::absolute_start(day, earliest, instance_->hmax) +
            instance_->interventions[id].duration <= latest_end) {
      out.push_back(Placement{day, kNoTeam, {}, earliest});
    }
    return;
  }
  const DayPlan* plan = find_day(day);
  const int n_teams = plan ? static_cast<int>(plan->teams.size()) : 0;
  for (int k = 0; k <= n_teams; ++k) {
    if (auto option = team_option(id, day, k, earliest, latest_end)) {
      out.push_back(std::move(*option));
    }
  }
}

std::optional<Placement> Schedule::find_placement(int id, const PlacementLimits& limits) const {
  const Time hmax = instance_->hmax;
  const int first = static_cast<int>(ready_time(id) / hmax) + 1;
  // The first day with no teams and every technician available, after the
  // ready day, always admits a new team at start 0.
  int last = std::max({first + 1, static_cast<int>(days_.size()) + 1, last_unavailable_day_ + 1});
  if (limits.max_day > 0) last = std::min(last, limits.max_day);

  std::vector<Placement> options;
  for (int day = first; day <= last; ++day) {
    if (static_cast<Time>(day - 1) * hmax >= limits.latest_end) break;
    options.clear();
    options_on_day(id, day, limits.latest_end, options);
    if (options.empty()) continue;
    auto best = std::min_element(options.begin(), options.end(),
                                 [](const Placement& a, const Placement& b) {
                                   return std::tuple(a.added.size(), a.start, a.team) <
                                          std::tuple(b.added.size(), b.start, b.team);
                                 });
    return std::move(*best);
  }
  return std::nullopt;
}

std::vector<Placement> Schedule::placement_options(int id, const PlacementLimits& limits) const {
  if (limits.max_day <= 0) {
    throw Error(ErrorCode::kContractViolation, "placement_options needs a max_day limit");
  }
  const int first = static_cast<int>(ready_time(id) / instance_->hmax) + 1;
  std::vector<Placement> options;
  for (int day = first; day <= limits.max_day; ++day) {
    if (static_cast<Time>(day - 1) * instance_->hmax >= limits.latest_end) break;
    options_on_day(id, day, limits.latest_end, options);
  }
  return options;
}

void Schedule::apply(int id, const Placement& placement) {
  const auto& job = instance_->interventions[id];
  DayPlan& plan = day_plan(placement.day);
  Slot& slot = slots_[id];
  slot.day = placement.day;
  slot.start = placement.start;
  slot.team = placement.team;
  if (placement.team == kNoTeam) return;

  if (placement.team == static_cast<int>(plan.teams.size())) plan.teams.emplace_back();
  Team& team = plan.teams[placement.team];
  for (int t : placement.added) {
    team.members.push_back(t);
    plan.in_team[t] = 1;
  }
  std::sort(team.members.begin(), team.members.end());
  const Interval iv{placement.start, placement.start + job.duration};
  team.busy.insert(std::upper_bound(team.busy.begin(), team.busy.end(), iv,
                                    [](const Interval& a, const Interval& b) {
                                      return a.begin < b.begin;
                                    }),
                   iv);
  team.jobs.push_back(id);
}

void Schedule::remove(int id) {
  Slot& slot = slots_[id];
  if (slot.day == 0) return;
  if (slot.team != kNoTeam) {
    DayPlan& plan = days_[slot.day - 1];
    Team& team = plan.teams[slot.team];
    auto it = std::find_if(team.busy.begin(), team.busy.end(),
                           [&](const Interval& iv) { return iv.begin == slot.start; });
    if (it != team.busy.end()) team.busy.erase(it);
    std::erase(team.jobs, id);
    if (!team.jobs.empty()) {
      // Shrink to a smallest subset still covering the remaining jobs, so
      // technicians recruited for `id` become free for other teams again.
      std::vector<int> need(demand_[id].size(), 0);
      for (int j : team.jobs) {
        for (std::size_t k = 0; k < need.size(); ++k) need[k] = std::max(need[k], demand_[j][k]);
      }
      if (auto kept = minimum_cover(*instance_, need, team.members);
          kept && kept->size() < team.members.size()) {
        std::sort(kept->begin(), kept->end());
        for (int t : team.members) plan.in_team[t] = 0;
        for (int t : *kept) plan.in_team[t] = 1;
        team.members = std::move(*kept);
      }
    } else {
      for (int t : team.members) plan.in_team[t] = 0;
      const int gone = slot.team;
      plan.teams.erase(plan.teams.begin() + gone);
      for (int k = gone; k < static_cast<int>(plan.teams.size()); ++k) {
        for (int j : plan.teams[k].jobs) slots_[j].team = k;
      }
    }
  }
  const int day = slot.day;
  slot = Slot{};
  release_versatile(day);
}

// Swaps team members for strictly less versatile free technicians while
// every team still covers its interventions. Times and team sizes are
// unchanged; skilled technicians become free for other teams.
void Schedule::release_versatile(int day) {
  if (day <= 0 || day > static_cast<int>(days_.size())) return;
  DayPlan& plan = days_[day - 1];
  const auto& techs = instance_->technicians;
  for (auto& team : plan.teams) {
    std::vector<int> need(static_cast<std::size_t>(instance_->domains) * instance_->levels, 0);
    for (int j : team.jobs) {
      for (std::size_t k = 0; k < need.size(); ++k) need[k] = std::max(need[k], demand_[j][k]);
    }
    for (bool swapped = true; swapped;) {
      swapped = false;
      std::vector<int> free = free_technicians(day);
      std::stable_sort(free.begin(), free.end(), [&](int a, int b) {
        return versatility(techs[a]) < versatility(techs[b]);
      });
      for (std::size_t m = 0; m < team.members.size() && !swapped; ++m) {
        const int out = team.members[m];
        for (int in : free) {
          if (versatility(techs[in]) >= versatility(techs[out])) break;
          std::vector<int> trial = team.members;
          trial[m] = in;
          if (!meets(*instance_, trial, need)) continue;
          std::sort(trial.begin(), trial.end());
          plan.in_team[out] = 0;
          plan.in_team[in] = 1;
          team.members = std::move(trial);
          swapped = true;
          break;
        }
      }
    }
  }
}

Solution Schedule::to_solution() const {
  Solution solution;
  for (int id = 0; id < static_cast<int>(slots_.size()); ++id) {
    const Slot& s = slots_[id];
    if (s.day == 0) continue;
    Assignment a;
    a.intervention = id;
    a.day = s.day;
    a.start = s.start;
    if (s.team != kNoTeam) a.team = days_[s.day - 1].teams[s.team].members;
    solution.assignments.push_back(std::move(a));
  }
  return solution;
}

int Schedule::technician_days() const {
  int total = 0;
  for (const auto& plan : days_) {
    for (const auto& team : plan.teams) total += static_cast<int>(team.members.size());
  }
  return total;
}

Solution run_greedy(const Instance& instance, std::span<const Cost> weights,
                    const Criteria& criteria, Rng* rng, const GreedyOptions& options) {
  const int n = static_cast<int>(instance.interventions.size());
  if (static_cast<int>(criteria.size()) != n || static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kContractViolation,
                "criteria and weights must cover every intervention");
  }
  Schedule schedule(instance);
  const auto successors = successor_lists(instance);
  std::vector<int> waiting(n);
  std::vector<int> candidates;
  for (const auto& job : instance.interventions) {
    waiting[job.id] = static_cast<int>(job.predecessors.size());
    if (waiting[job.id] == 0) candidates.push_back(job.id);
  }

  auto better = [&](int a, int b) {
    if (criteria[a] != criteria[b]) return criteria[a] > criteria[b];
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  };

  std::vector<int> rcl;
  for (int placed = 0; placed < n; ++placed) {
    if (candidates.empty()) {
      throw Error(ErrorCode::kContractViolation, "precedence graph has a cycle");
    }
    int pick;
    if (rng == nullptr || options.alpha <= 0.0) {
      pick = *std::min_element(candidates.begin(), candidates.end(), better);
    } else {
      double hi = criteria[candidates.front()];
      double lo = hi;
      for (int c : candidates) {
        hi = std::max(hi, criteria[c]);
        lo = std::min(lo, criteria[c]);
      }
      const double threshold = hi - options.alpha * (hi - lo);
      rcl.clear();
      for (int c : candidates) {
        if (criteria[c] >= threshold - 1e-9) rcl.push_back(c);
      }
      std::sort(rcl.begin(), rcl.end(), better);
      pick = rcl[(*rng)() % rcl.size()];
    }

    auto placement = schedule.find_placement(pick);
    if (!placement) {
      throw Error(ErrorCode::kUnplaceable,
                  "intervention " + std::to_string(pick) +
                      " cannot be covered by the available technicians");
    }
    schedule.apply(pick, *placement);
    std::erase(candidates, pick);
    for (int s : successors[pick]) {
      if (--waiting[s] == 0) candidates.push_back(s);
    }
  }

  Solution solution = schedule.to_solution();
  solution.objective = evaluate(instance, solution, options.t4_mode);
  return solution;
}

Solution run_greedy(const Instance& instance, const Criteria& criteria, Rng* rng,
                    const GreedyOptions& options) {
  const auto pre = compute_weights(instance);
  return run_greedy(instance, pre.weight, criteria, rng, options);
}

}  // namespace tisched
