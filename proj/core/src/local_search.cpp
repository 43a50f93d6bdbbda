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

#include "tisched/local_search.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "tisched/construct.hpp"

namespace tisched {

namespace {

bool expired(const Deadline& deadline) {
  return deadline && Clock::now() >= *deadline;
}

Time end_of(const Instance& instance, const Assignment& a) {
  return absolute_start(a.day, a.start, instance.hmax) +
         instance.interventions[a.intervention].duration;
}

// Index of each intervention's assignment.
std::vector<int> index_assignments(const Instance& instance, const Solution& solution) {
  std::vector<int> where(instance.interventions.size(), -1);
  for (int k = 0; k < static_cast<int>(solution.assignments.size()); ++k) {
    where[solution.assignments[k].intervention] = k;
  }
  return where;
}

Solution finish(const Instance& instance, Solution solution, T4Mode mode) {
  solution.normalize();
  solution.objective = evaluate(instance, solution, mode);
  return solution;
}

// Best re-placement option: earliest end, then fewest added technicians.
const Placement* best_option(const Instance& instance, const std::vector<Placement>& options,
                             int id) {
  const Placement* best = nullptr;
  auto key = [&](const Placement& p) {
    return std::tuple(absolute_start(p.day, p.start, instance.hmax) +
                          instance.interventions[id].duration,
                      p.added.size(), p.day, p.team, p.start);
  };
  for (const auto& p : options) {
    if (best == nullptr || key(p) < key(*best)) best = &p;
  }
  return best;
}

// Smallest absolute start among placed successors of `id` outside `skip`.
Time successor_deadline(const Schedule& schedule, const std::vector<std::vector<int>>& succ,
                        int id, const std::vector<char>& skip) {
  Time latest = std::numeric_limits<Time>::max();
  for (int s : succ[id]) {
    if (skip[s] || !schedule.is_placed(s)) continue;
    latest = std::min(latest, schedule.absolute_start(s));
  }
  return latest;
}

// Removes `chain` and re-places it in the given order, each member on its
// old day or earlier. Returns nullopt if some member finds no slot.
std::optional<Solution> reinsert_chain(const Instance& instance, const Solution& solution,
                                       const std::vector<std::vector<int>>& succ,
                                       const std::vector<int>& chain) {
  Schedule schedule = Schedule::from_solution(instance, solution);
  std::vector<int> old_day;
  std::vector<char> pending(instance.interventions.size(), 0);
  for (int id : chain) {
    old_day.push_back(schedule.day_of(id));
    schedule.remove(id);
    pending[id] = 1;
  }
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const int id = chain[k];
    pending[id] = 0;
    PlacementLimits limits;
    limits.max_day = old_day[k];
    limits.latest_end = successor_deadline(schedule, succ, id, pending);
    const auto options = schedule.placement_options(id, limits);
    const Placement* best = best_option(instance, options, id);
    if (best == nullptr) return std::nullopt;
    schedule.apply(id, *best);
  }
  return schedule.to_solution();
}

// Rebuilds the whole schedule: `first` in the given order, then everything
// else by current start, each at its earliest-ending option. Unlike the
// constructive greedy this may open a parallel team instead of extending an
// existing one. Returns nullopt if something cannot be placed.
std::optional<Solution> rebuild(const Instance& instance, const Solution& solution,
                                const std::vector<int>& first) {
  int horizon = 0;
  for (const auto& a : solution.assignments) horizon = std::max(horizon, a.day);
  for (const auto& tech : instance.technicians) {
    if (!tech.unavailable_days.empty()) {
      horizon = std::max(horizon, tech.unavailable_days.back());
    }
  }
  std::vector<char> queued(instance.interventions.size(), 0);
  std::vector<int> order = first;
  for (int id : first) queued[id] = 1;
  std::vector<std::tuple<Time, int>> rest;
  for (const auto& a : solution.assignments) {
    if (!queued[a.intervention]) {
      rest.emplace_back(absolute_start(a.day, a.start, instance.hmax), a.intervention);
    }
  }
  std::sort(rest.begin(), rest.end());
  for (const auto& [start, id] : rest) order.push_back(id);

  Schedule schedule(instance);
  PlacementLimits limits;
  limits.max_day = horizon + 1;
  for (int id : order) {
    const auto options = schedule.placement_options(id, limits);
    const Placement* best = best_option(instance, options, id);
    if (best == nullptr) return std::nullopt;
    schedule.apply(id, *best);
  }
  return schedule.to_solution();
}

// `target` and all of its ancestors.
std::vector<char> ancestors_of(const Instance& instance, int target) {
  std::vector<char> in(instance.interventions.size(), 0);
  std::vector<int> stack{target};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (in[v]) continue;
    in[v] = 1;
    for (int p : instance.interventions[v].predecessors) stack.push_back(p);
  }
  return in;
}

// One improving critical-path move, or nullopt.
std::optional<Solution> improve_once(const Instance& instance, const Solution& solution,
                                     const std::vector<std::vector<int>>& succ, T4Mode mode,
                                     const Deadline& deadline) {
  const Time z = evaluate(instance, solution, mode).z;
  const auto where = index_assignments(instance, solution);

  for (int priority = 1; priority <= kPriorityCount; ++priority) {
    int target = last_of_priority(instance, solution, priority);
    if (mode == T4Mode::kMakespan && priority == kPriorityCount) {
      target = -1;
      Time latest = -1;
      for (const auto& a : solution.assignments) {
        const Time end = end_of(instance, a);
        if (end > latest || (end == latest && a.intervention < target)) {
          latest = end;
          target = a.intervention;
        }
      }
    }
    if (target < 0) continue;

    const auto critical = ancestors_of(instance, target);
    std::vector<int> members;
    for (int id = 0; id < static_cast<int>(critical.size()); ++id) {
      if (critical[id] && where[id] >= 0) members.push_back(id);
    }
    auto start_key = [&](int id) {
      const auto& a = solution.assignments[where[id]];
      return std::tuple(absolute_start(a.day, a.start, instance.hmax), id);
    };
    std::sort(members.begin(), members.end(),
              [&](int x, int y) { return start_key(x) < start_key(y); });

    for (int m : members) {
      if (expired(deadline)) return std::nullopt;

      // (a) re-place m and the critical interventions that depend on it.
      const auto descendants_of_m = [&] {
        std::vector<char> reach(instance.interventions.size(), 0);
        std::vector<int> stack{m};
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          if (reach[v]) continue;
          reach[v] = 1;
          for (int s : succ[v]) {
            if (critical[s]) stack.push_back(s);
          }
        }
        return reach;
      }();
      std::vector<int> chain;
      for (int id : members) {
        if (descendants_of_m[id]) chain.push_back(id);
      }
      if (auto moved = reinsert_chain(instance, solution, succ, chain)) {
        if (evaluate(instance, *moved, mode).z < z) return moved;
      }

      // (b) exchange slots with an earlier non-critical intervention.
      const auto& am = solution.assignments[where[m]];
      for (const auto& ax : solution.assignments) {
        if (critical[ax.intervention] || ax.day != am.day || ax.start >= am.start) continue;
        Solution swapped = solution;
        auto& sm = swapped.assignments[where[m]];
        auto& sx = swapped.assignments[where[ax.intervention]];
        std::swap(sm.start, sx.start);
        std::swap(sm.team, sx.team);
        if (evaluate(instance, swapped, mode).z < z && is_feasible(instance, swapped)) {
          return swapped;
        }
      }
    }

    // (c) rebuild everything around the critical set.
    if (expired(deadline)) return std::nullopt;
    if (auto rebuilt = rebuild(instance, solution, members)) {
      if (evaluate(instance, *rebuilt, mode).z < z) return rebuilt;
    }
  }
  return std::nullopt;
}

}  // namespace

int last_of_priority(const Instance& instance, const Solution& solution, int priority) {
  int best = -1;
  Time latest = -1;
  for (const auto& a : solution.assignments) {
    if (instance.interventions[a.intervention].priority != priority) continue;
    const Time end = end_of(instance, a);
    if (end > latest || (end == latest && a.intervention < best)) {
      latest = end;
      best = a.intervention;
    }
  }
  return best;
}

Solution critical_path_phase(const Instance& instance, Solution solution, T4Mode mode,
                             Deadline deadline) {
  const auto succ = successor_lists(instance);
  while (!expired(deadline)) {
    auto next = improve_once(instance, solution, succ, mode, deadline);
    if (!next) break;
    solution = std::move(*next);
  }
  return finish(instance, std::move(solution), mode);
}

Solution packing_phase(const Instance& instance, Solution solution, T4Mode mode,
                       Deadline deadline) {
  const auto succ = successor_lists(instance);
  const std::vector<char> none(instance.interventions.size(), 0);
  bool changed = true;
  while (changed && !expired(deadline)) {
    changed = false;
    std::vector<std::pair<Time, int>> order;
    for (const auto& a : solution.assignments) {
      order.emplace_back(absolute_start(a.day, a.start, instance.hmax), a.intervention);
    }
    std::sort(order.begin(), order.end());

    Schedule schedule = Schedule::from_solution(instance, solution);
    for (const auto& [start, id] : order) {
      if (expired(deadline)) break;
      const Time old_end = schedule.absolute_end(id);
      const int old_days = schedule.technician_days();
      PlacementLimits limits;
      limits.max_day = schedule.day_of(id);
      limits.latest_end = std::min(old_end, successor_deadline(schedule, succ, id, none));
      schedule.remove(id);
      const auto options = schedule.placement_options(id, limits);
      const Placement* best = best_option(instance, options, id);
      bool accept = false;
      if (best != nullptr) {
        const Time new_end = absolute_start(best->day, best->start, instance.hmax) +
                             instance.interventions[id].duration;
        const int new_days = schedule.technician_days() + static_cast<int>(best->added.size());
        accept = new_end < old_end || (new_end == old_end && new_days < old_days);
      }
      if (accept) {
        schedule.apply(id, *best);
        solution = schedule.to_solution();
        changed = true;
      } else {
        schedule = Schedule::from_solution(instance, solution);
      }
    }
  }
  return finish(instance, std::move(solution), mode);
}

Solution local_search(const Instance& instance, Solution solution, T4Mode mode,
                      Deadline deadline) {
  solution = finish(instance, std::move(solution), mode);
  while (!expired(deadline)) {
    Solution next = critical_path_phase(instance, solution, mode, deadline);
    next = packing_phase(instance, std::move(next), mode, deadline);
    if (next.assignments == solution.assignments) break;
    solution = std::move(next);
  }
  return solution;
}

}  // namespace tisched
