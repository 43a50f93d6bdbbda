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

#include "tisched/model.hpp"

#include <algorithm>
#include <sstream>

namespace tisched {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDayOverrun: return "DAY_OVERRUN";
    case ErrorCode::kMalformedPlacement: return "MALFORMED_PLACEMENT";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kSemantic: return "SEMANTIC_ERROR";
    case ErrorCode::kUnknownId: return "UNKNOWN_ID";
    case ErrorCode::kDuplicateAssignment: return "DUPLICATE_ASSIGNMENT";
    case ErrorCode::kConfig: return "CONFIG_ERROR";
    case ErrorCode::kInfeasibleMustHire: return "INFEASIBLE_MUST_HIRE";
    case ErrorCode::kUnplaceable: return "UNPLACEABLE";
    case ErrorCode::kLimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::kContractViolation: return "CONTRACT_VIOLATION";
  }
  return "UNKNOWN";
}

bool Technician::available_on(int day) const {
  return !std::binary_search(unavailable_days.begin(), unavailable_days.end(),
                             day);
}

bool Intervention::has_demand() const {
  for (const auto& row : requirements) {
    for (int r : row) {
      if (r > 0) return true;
    }
  }
  return false;
}

namespace {

[[noreturn]] void semantic(const std::string& message) {
  throw Error(ErrorCode::kSemantic, message);
}

// Returns a cycle as a closed id path (first == last), empty if acyclic.
std::vector<int> find_cycle(const Instance& instance) {
  const int n = static_cast<int>(instance.interventions.size());
  std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  // Iterative DFS following predecessor edges.
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& preds = instance.interventions[node].predecessors;
      if (next == preds.size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      const int pred = preds[next++];
      if (color[pred] == 1) {
        // parent[v] is the successor that discovered v, so walking parents
        // from node back to pred follows precedence edges forward.
        std::vector<int> cycle{pred};
        for (int v = node; v != pred; v = parent[v]) cycle.push_back(v);
        cycle.push_back(pred);
        return cycle;
      }
      if (color[pred] == 0) {
        color[pred] = 1;
        parent[pred] = node;
        stack.emplace_back(pred, 0);
      }
    }
  }
  return {};
}

}  // namespace

void validate(const Instance& instance) {
  if (instance.hmax <= 0) semantic("HMAX must be positive");
  if (instance.budget < 0) semantic("BUDGET must be non-negative");
  if (instance.domains < 0) semantic("DOMAINS must be non-negative");
  if (instance.levels < 0) semantic("LEVELS must be non-negative");

  const int n_tech = static_cast<int>(instance.technicians.size());
  for (int t = 0; t < n_tech; ++t) {
    const auto& tech = instance.technicians[t];
    if (tech.id != t) {
      semantic("technician ids must be dense 0..n-1; found id " +
               std::to_string(tech.id) + " at position " + std::to_string(t));
    }
    if (static_cast<int>(tech.skills.size()) != instance.domains) {
      semantic("technician " + std::to_string(t) + " has " +
               std::to_string(tech.skills.size()) + " skills, expected " +
               std::to_string(instance.domains));
    }
    for (int level : tech.skills) {
      if (level < 0 || level > instance.levels) {
        semantic("technician " + std::to_string(t) + " has skill level " +
                 std::to_string(level) + " outside 0.." +
                 std::to_string(instance.levels));
      }
    }
    for (std::size_t k = 0; k < tech.unavailable_days.size(); ++k) {
      if (tech.unavailable_days[k] < 1 ||
          (k > 0 && tech.unavailable_days[k] <= tech.unavailable_days[k - 1])) {
        semantic("technician " + std::to_string(t) +
                 " unavailable days must be increasing and >= 1");
      }
    }
  }

  const int n = static_cast<int>(instance.interventions.size());
  for (int i = 0; i < n; ++i) {
    const auto& job = instance.interventions[i];
    const std::string name = "intervention " + std::to_string(i);
    if (job.id != i) {
      semantic("intervention ids must be dense 0..n-1; found id " +
               std::to_string(job.id) + " at position " + std::to_string(i));
    }
    if (job.duration <= 0) semantic(name + " has non-positive duration");
    if (job.duration > instance.hmax) {
      semantic(name + " has duration " + std::to_string(job.duration) +
               " exceeding HMAX " + std::to_string(instance.hmax));
    }
    if (job.priority < 1 || job.priority > kPriorityCount) {
      semantic(name + " has priority outside 1..4");
    }
    if (job.cost < 0) semantic(name + " has negative cost");
    if (static_cast<int>(job.requirements.size()) != instance.domains) {
      semantic(name + " requirement matrix has wrong number of domains");
    }
    for (int d = 0; d < instance.domains; ++d) {
      const auto& row = job.requirements[d];
      if (static_cast<int>(row.size()) != instance.levels) {
        semantic(name + " requirement matrix has wrong number of levels");
      }
      for (int l = 0; l < instance.levels; ++l) {
        if (row[l] < 0) semantic(name + " has a negative requirement");
        if (l > 0 && row[l] > row[l - 1]) {
          semantic(name + " requirements in domain " + std::to_string(d) +
                   " increase with level (must be cumulative)");
        }
      }
    }
    std::vector<int> seen;
    for (int p : job.predecessors) {
      if (p < 0 || p >= n) {
        semantic(name + " has unknown predecessor " + std::to_string(p));
      }
      if (p == i) semantic(name + " is its own predecessor");
      seen.push_back(p);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      semantic(name + " lists a predecessor twice");
    }
  }

  if (auto cycle = find_cycle(instance); !cycle.empty()) {
    std::ostringstream out;
    out << "cycle through interventions ";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out << "->";
      out << cycle[k];
    }
    semantic(out.str());
  }
}

std::vector<std::vector<int>> successor_lists(const Instance& instance) {
  std::vector<std::vector<int>> succ(instance.interventions.size());
  for (const auto& job : instance.interventions) {
    for (int p : job.predecessors) succ[p].push_back(job.id);
  }
  for (auto& s : succ) std::sort(s.begin(), s.end());
  return succ;
}

std::vector<int> topological_order(const Instance& instance) {
  const int n = static_cast<int>(instance.interventions.size());
  std::vector<int> indegree(n);
  for (const auto& job : instance.interventions) {
    indegree[job.id] = static_cast<int>(job.predecessors.size());
  }
  const auto succ = successor_lists(instance);
  std::vector<int> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int s : succ[order[head]]) {
      if (--indegree[s] == 0) order.push_back(s);
    }
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

Time absolute_end(int day, Time start, Time duration, Time hmax) {
  if (day < 1 || start < 0 || duration < 0) {
    throw Error(ErrorCode::kMalformedPlacement,
                "placement needs day >= 1, start >= 0 and duration >= 0");
  }
  if (start + duration > hmax) {
    throw Error(ErrorCode::kDayOverrun,
                "placement ends at " + std::to_string(start + duration) +
                    " after HMAX " + std::to_string(hmax));
  }
  return absolute_start(day, start, hmax) + duration;
}

namespace {

template <typename SkillOf>
bool covers(std::size_t team_size, SkillOf skill_of,
            const Intervention& intervention) {
  for (std::size_t d = 0; d < intervention.requirements.size(); ++d) {
    const auto& row = intervention.requirements[d];
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (row[l] <= 0) continue;
      int count = 0;
      for (std::size_t k = 0; k < team_size; ++k) {
        const auto* skills = skill_of(k);
        if (skills != nullptr && d < skills->size() &&
            (*skills)[d] >= static_cast<int>(l) + 1) {
          ++count;
        }
      }
      if (count < row[l]) return false;
    }
  }
  return true;
}

}  // namespace

bool team_covers(const Instance& instance, std::span<const int> team,
                 const Intervention& intervention) {
  const int n_tech = static_cast<int>(instance.technicians.size());
  return covers(
      team.size(),
      [&](std::size_t k) -> const std::vector<int>* {
        const int t = team[k];
        return (t >= 0 && t < n_tech) ? &instance.technicians[t].skills
                                      : nullptr;
      },
      intervention);
}

bool team_covers(std::span<const Technician> team,
                 const Intervention& intervention) {
  return covers(
      team.size(),
      [&](std::size_t k) { return &team[k].skills; }, intervention);
}

void Solution::normalize() {
  std::sort(hired.begin(), hired.end());
  for (auto& a : assignments) std::sort(a.team.begin(), a.team.end());
  std::sort(assignments.begin(), assignments.end(),
            [](const Assignment& a, const Assignment& b) {
              return a.intervention < b.intervention;
            });
}

std::string_view to_string(T4Mode mode) {
  return mode == T4Mode::kPriority ? "priority" : "makespan";
}

T4Mode parse_t4_mode(std::string_view text) {
  if (text == "priority") return T4Mode::kPriority;
  if (text == "makespan") return T4Mode::kMakespan;
  throw Error(ErrorCode::kConfig,
              "t4 mode must be 'priority' or 'makespan', got '" +
                  std::string(text) + "'");
}

Time objective_value(const std::array<Time, kPriorityCount>& ending) {
  Time z = 0;
  for (int k = 0; k < kPriorityCount; ++k) z += kObjectiveWeights[k] * ending[k];
  return z;
}

Objective evaluate(const Instance& instance, const Solution& solution,
                   T4Mode mode) {
  Objective result;
  Time makespan = 0;
  for (const auto& a : solution.assignments) {
    const auto& job = instance.interventions.at(a.intervention);
    const Time end = absolute_start(a.day, a.start, instance.hmax) + job.duration;
    auto& slot = result.ending[job.priority - 1];
    slot = std::max(slot, end);
    makespan = std::max(makespan, end);
  }
  if (mode == T4Mode::kMakespan) result.ending[kPriorityCount - 1] = makespan;
  result.z = objective_value(result.ending);
  return result;
}

}  // namespace tisched
