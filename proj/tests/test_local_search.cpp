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

#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tisched/construct.hpp"
#include "tisched/local_search.hpp"
#include "tisched/oracle.hpp"

using namespace tisched;
using testing::job;
using testing::tech;

TEST_CASE("single intervention at the origin does not move") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 60, 1, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 0, {0}}};
  CHECK(critical_path_phase(instance, s).assignments == s.assignments);
  CHECK(local_search(instance, s).assignments == s.assignments);
}

TEST_CASE("an artificial gap before the last priority-1 job is closed") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 60, 1, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 30, {0}}};
  const Time before = evaluate(instance, s).z;
  const Solution after = local_search(instance, s);
  CHECK(after.objective.z < before);
  CHECK(after.objective.z == 28 * 60);
  CHECK(check(instance, after).empty());
}

TEST_CASE("a critical job blocked by a non-critical one swaps slots") {
  // One technician: a priority-4 job occupies [0,60) and delays the
  // priority-1 job to [60,120).
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 60, 1, 1, {{1}}), job(1, 60, 4, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 60, {0}}, {1, 1, 0, {0}}};
  const Time before = evaluate(instance, s).z;
  CHECK(before == 28 * 120 + 60);
  const Solution after = critical_path_phase(instance, s);
  CHECK(after.objective.ending[0] == 60);
  CHECK(after.objective.z == 28 * 60 + 120);
  CHECK(after.objective.z == brute_force_optimal(instance).z);
  CHECK(check(instance, after).empty());
}

TEST_CASE("packing pulls an idle day-2 job into a free day-1 slot") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 30, 2, 1, {{1}}), job(1, 30, 3, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 0, {0}}, {1, 2, 0, {0}}};
  const Objective before = evaluate(instance, s);
  const Solution after = packing_phase(instance, s);
  CHECK(after.assignments[1].day == 1);
  for (int l = 0; l < kPriorityCount; ++l) {
    CHECK(after.objective.ending[l] <= before.ending[l]);
  }
  CHECK(check(instance, after).empty());
}

TEST_CASE("back-to-back packing is a fixpoint") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 60, 1, 1, {{1}}), job(1, 60, 1, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 0, {0}}, {1, 1, 60, {0}}};
  CHECK(packing_phase(instance, s).assignments == s.assignments);
  CHECK(local_search(instance, s).assignments == s.assignments);
}

TEST_CASE("local search is monotone and feasible on random greedy output") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 60; ++round) {
    GeneratorConfig config;
    config.interventions = 25;
    config.technicians = 6;
    config.density = 0.1;
    config.budget_fraction = 0.0;
    config.seed = 100 + static_cast<std::uint64_t>(round);
    const Instance instance = generate_instance(config);
    Criteria criteria(instance.interventions.size());
    for (auto& c : criteria) c = std::uniform_real_distribution<double>(0, 50)(rng);
    Rng greedy_rng(round);
    const Solution start = run_greedy(instance, criteria, &greedy_rng, GreedyOptions{1.0});
    for (const T4Mode mode : {T4Mode::kPriority, T4Mode::kMakespan}) {
      const Solution out = local_search(instance, start, mode);
      CHECK(out.objective.z <= evaluate(instance, start, mode).z);
      CHECK(check(instance, out).empty());
    }
  }
}

TEST_CASE("last_of_priority picks the latest end, lowest id on ties") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1}), tech(1, {1})},
      {job(0, 60, 1, 1, {{1}}), job(1, 60, 1, 1, {{1}}), job(2, 30, 2, 1, {{1}})});
  Solution s;
  s.assignments = {{0, 1, 0, {0}}, {1, 1, 0, {1}}, {2, 1, 60, {0}}};
  CHECK(last_of_priority(instance, s, 1) == 0);
  CHECK(last_of_priority(instance, s, 2) == 2);
  CHECK(last_of_priority(instance, s, 3) == -1);
}
