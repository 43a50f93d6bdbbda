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

// Shared helpers for unit and acceptance tests: small instance builders and
// the brute-force oracles that DERIVED expectations are checked against.
// The oracles deliberately avoid the library's own search code.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tisched/instance_io.hpp"
#include "tisched/model.hpp"

namespace tisched::testing {

inline Technician tech(int id, std::vector<int> skills, std::vector<int> unavailable = {}) {
  return Technician{id, std::move(skills), std::move(unavailable)};
}

/// Requirements given per domain as cumulative rows.
inline Intervention job(int id, int duration, int priority, Cost cost,
                        std::vector<std::vector<int>> requirements,
                        std::vector<int> predecessors = {}) {
  Intervention out;
  out.id = id;
  out.duration = duration;
  out.priority = priority;
  out.cost = cost;
  out.requirements = std::move(requirements);
  out.predecessors = std::move(predecessors);
  return out;
}

inline Instance make_instance(int hmax, Cost budget, int domains, int levels,
                              std::vector<Technician> technicians,
                              std::vector<Intervention> interventions) {
  Instance instance;
  instance.hmax = hmax;
  instance.budget = budget;
  instance.domains = domains;
  instance.levels = levels;
  instance.technicians = std::move(technicians);
  instance.interventions = std::move(interventions);
  validate(instance);
  return instance;
}

/// Does this set of technicians meet every cumulative requirement? Counts
/// are recomputed from scratch, independent of team_covers.
inline bool covers_by_count(const Instance& instance, const std::vector<int>& team,
                            const Intervention& job) {
  for (int d = 0; d < instance.domains; ++d) {
    for (int l = 0; l < instance.levels; ++l) {
      int count = 0;
      for (int t : team) count += instance.technicians[t].skills[d] >= l + 1 ? 1 : 0;
      if (count < job.requirements[d][l]) return false;
    }
  }
  return true;
}

/// Smallest team size over all 2^T technician subsets, nullopt if none.
inline std::optional<int> brute_force_mintec(const Instance& instance, const Intervention& job) {
  const int n = static_cast<int>(instance.technicians.size());
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (best && size >= *best) continue;
    std::vector<int> team;
    for (int t = 0; t < n; ++t) {
      if (mask & (1u << t)) team.push_back(t);
    }
    if (covers_by_count(instance, team, job)) best = size;
  }
  return best;
}

struct KnapsackOptimum {
  Cost weight = 0;
  Cost cost = 0;
  std::vector<int> hired;
};

/// Maximum total weight over successor-closed subsets containing `forced`
/// whose cost fits the budget. nullopt when even the forced closure does not
/// fit.
inline std::optional<KnapsackOptimum> brute_force_knapsack(const Instance& instance,
                                                           std::span<const Cost> weights,
                                                           std::span<const int> forced) {
  const int n = static_cast<int>(instance.interventions.size());
  std::uint32_t must = 0;
  for (int f : forced) must |= 1u << f;
  std::optional<KnapsackOptimum> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & must) != must) continue;
    bool closed = true;
    Cost cost = 0;
    Cost weight = 0;
    for (int j = 0; j < n && closed; ++j) {
      // Closed under successors: a hired predecessor drags its successors.
      for (int p : instance.interventions[j].predecessors) {
        if ((mask & (1u << p)) && !(mask & (1u << j))) closed = false;
      }
      if (mask & (1u << j)) {
        cost += instance.interventions[j].cost;
        weight += weights[j];
      }
    }
    if (!closed || cost > instance.budget) continue;
    if (!best || weight > best->weight) {
      KnapsackOptimum k{weight, cost, {}};
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) k.hired.push_back(j);
      }
      best = std::move(k);
    }
  }
  return best;
}

/// z recomputed directly from the assignments (priority mode).
inline Time direct_z(const Instance& instance, const Solution& solution) {
  Time t[4] = {0, 0, 0, 0};
  for (const auto& a : solution.assignments) {
    const auto& job = instance.interventions[a.intervention];
    const Time end = (a.day - 1) * static_cast<Time>(instance.hmax) + a.start + job.duration;
    t[job.priority - 1] = std::max(t[job.priority - 1], end);
  }
  return 28 * t[0] + 14 * t[1] + 4 * t[2] + t[3];
}

/// Random instance with arbitrary cumulative requirements (possibly
/// uncoverable), for cover oracles.
inline Instance random_cover_instance(std::mt19937_64& rng, int technicians, int interventions,
                                      int domains, int levels) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Technician> techs;
  for (int t = 0; t < technicians; ++t) {
    std::vector<int> skills(domains);
    for (auto& s : skills) s = pick(0, levels);
    techs.push_back(tech(t, std::move(skills)));
  }
  std::vector<Intervention> jobs;
  for (int j = 0; j < interventions; ++j) {
    std::vector<std::vector<int>> req(domains, std::vector<int>(levels, 0));
    for (int d = 0; d < domains; ++d) {
      int cap = pick(0, 4);
      for (int l = 0; l < levels; ++l) {
        cap = pick(0, cap);
        req[d][l] = cap;
      }
    }
    jobs.push_back(job(j, pick(1, 60), pick(1, 4), pick(1, 50), std::move(req)));
  }
  return make_instance(120, 0, domains, levels, std::move(techs), std::move(jobs));
}

/// Random precedence DAG over `n` interventions with random costs and a
/// random budget, for knapsack oracles. Requirements are irrelevant here.
inline Instance random_knapsack_instance(std::mt19937_64& rng, int n) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Intervention> jobs;
  Cost total = 0;
  const int density = pick(0, 30);  // percent
  for (int j = 0; j < n; ++j) {
    std::vector<int> preds;
    for (int i = 0; i < j; ++i) {
      if (pick(0, 99) < density) preds.push_back(i);
    }
    const Cost cost = pick(0, 40);
    total += cost;
    jobs.push_back(job(j, 30, pick(1, 4), cost, {{0}}, std::move(preds)));
  }
  std::vector<Technician> techs{tech(0, {1})};
  return make_instance(120, pick(0, static_cast<int>(total)), 1, 1, std::move(techs),
                       std::move(jobs));
}

}  // namespace tisched::testing
