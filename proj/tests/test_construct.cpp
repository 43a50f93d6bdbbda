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
#include "tisched/oracle.hpp"

using namespace tisched;
using testing::job;
using testing::tech;

TEST_CASE("first placement goes to day 1 at 0") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1}), tech(1, {1})}, {job(0, 60, 1, 1, {{2}})});
  Schedule schedule(instance);
  const auto placement = schedule.find_placement(0);
  REQUIRE(placement);
  CHECK(placement->day == 1);
  CHECK(placement->start == 0);
  CHECK(placement->added == std::vector<int>{0, 1});
}

TEST_CASE("ready time across a day boundary") {
  // Predecessor ends at absolute 165 with hmax 120.
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})},
      {job(0, 45, 1, 1, {{1}}), job(1, 30, 1, 1, {{1}}, {0})});
  Schedule schedule(instance);
  schedule.apply(0, Placement{2, 0, {0}, 0});
  CHECK(schedule.absolute_end(0) == 165);
  CHECK(schedule.ready_time(1) == 165);
  const auto placement = schedule.find_placement(1);
  REQUIRE(placement);
  CHECK(placement->day == 2);
  CHECK(placement->start >= 45);
  schedule.apply(1, *placement);
  CHECK(check(instance, schedule.to_solution()).empty());
}

TEST_CASE("a day's team is augmented when a job needs more technicians") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1}), tech(1, {1})},
      {job(0, 60, 1, 1, {{1}}), job(1, 60, 1, 1, {{2}})});
  Schedule schedule(instance);
  const auto first = schedule.find_placement(0);
  REQUIRE(first);
  CHECK(first->added == std::vector<int>{0});
  schedule.apply(0, *first);

  const auto second = schedule.find_placement(1);
  REQUIRE(second);
  CHECK(second->day == 1);
  CHECK(second->team == 0);
  CHECK(second->added == std::vector<int>{1});
  CHECK(second->start == 60);
  schedule.apply(1, *second);
  CHECK(schedule.absolute_end(1) == 120);
  const Solution solution = schedule.to_solution();
  CHECK(check(instance, solution).empty());
  // The exhaustive optimum agrees that t1 = 120 is the best possible.
  CHECK(brute_force_optimal(instance).z == 28 * 120);
}

TEST_CASE("a chain spills onto the next day") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})},
      {job(0, 60, 1, 1, {{1}}), job(1, 60, 1, 1, {{1}}, {0}), job(2, 60, 1, 1, {{1}}, {1})});
  const Solution s = run_greedy(instance, initial_criteria(instance, PriorityPermutation{}));
  REQUIRE(s.assignments.size() == 3);
  Schedule schedule = Schedule::from_solution(instance, s);
  CHECK(schedule.absolute_end(0) == 60);
  CHECK(schedule.absolute_end(1) == 120);
  CHECK(schedule.absolute_end(2) == 180);
  CHECK(schedule.day_of(2) == 2);
  CHECK(check(instance, s).empty());
  CHECK(brute_force_optimal(instance).z == s.objective.z);
}

TEST_CASE("interventions without demand get no team") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 30, 1, 1, {{0}})});
  const Solution s = run_greedy(instance, initial_criteria(instance, PriorityPermutation{}));
  REQUIRE(s.assignments.size() == 1);
  CHECK(s.assignments[0].team.empty());
  CHECK(s.assignments[0].start == 0);
  CHECK(s.objective.z == 28 * 30);
}

TEST_CASE("calendars push work past unavailable days") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1}, {1, 2})}, {job(0, 30, 1, 1, {{1}})});
  const Solution s = run_greedy(instance, initial_criteria(instance, PriorityPermutation{}));
  REQUIRE(s.assignments.size() == 1);
  CHECK(s.assignments[0].day == 3);
  CHECK(check(instance, s).empty());
}

TEST_CASE("initial criteria follow the permutation") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})}, {job(0, 30, 1, 1, {{1}}), job(1, 30, 4, 1, {{1}})});
  CHECK(initial_criteria(instance, PriorityPermutation{}) == Criteria{28, 1});
  CHECK(initial_criteria(instance, PriorityPermutation({2, 3, 4, 1})) == Criteria{1, 4});
}

TEST_CASE("empty instance gives an empty solution") {
  Instance instance;
  instance.hmax = 120;
  instance.domains = 1;
  instance.levels = 1;
  instance.technicians = {tech(0, {1})};
  const Solution s = run_greedy(instance, Criteria{});
  CHECK(s.assignments.empty());
  CHECK(s.objective.z == 0);
}

TEST_CASE("greedy is feasible and reproducible") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig config;
    config.interventions = 40;
    config.technicians = 8;
    config.density = 0.08;
    config.seed = seed;
    const Instance instance = generate_instance(config);
    const Criteria criteria = initial_criteria(instance, PriorityPermutation{});
    Rng a(seed);
    Rng b(seed);
    const Solution first = run_greedy(instance, criteria, &a, GreedyOptions{0.5});
    const Solution second = run_greedy(instance, criteria, &b, GreedyOptions{0.5});
    CHECK(first == second);
    CHECK(check(instance, first).empty());
    CHECK(first.objective == evaluate(instance, first));
  }
}

TEST_CASE("remove dissolves an emptied team and keeps others") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1}), tech(1, {1})},
      {job(0, 30, 1, 1, {{1}}), job(1, 30, 1, 1, {{1}})});
  Schedule schedule(instance);
  schedule.apply(0, Placement{1, 0, {0}, 0});
  schedule.apply(1, Placement{1, 1, {1}, 0});
  CHECK(schedule.technician_days() == 2);
  schedule.remove(0);
  CHECK_FALSE(schedule.is_placed(0));
  CHECK(schedule.days()[0].teams.size() == 1);
  CHECK(schedule.team_of(1) == 0);
  CHECK(schedule.technician_days() == 1);
}
