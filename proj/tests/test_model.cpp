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

#include <array>

#include "doctest.h"
#include "support.hpp"
#include "tisched/priority.hpp"

using namespace tisched;
using testing::job;
using testing::tech;

TEST_CASE("absolute_end maps day and start onto one time axis") {
  CHECK(absolute_end(1, 0, 60, 120) == 60);
  CHECK(absolute_end(2, 30, 15, 120) == 165);
  CHECK(absolute_end(1, 60, 60, 120) == 120);  // ending exactly at hmax is fine
  try {
    absolute_end(1, 100, 30, 120);
    FAIL("expected an overrun");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDayOverrun);
  }
  CHECK_THROWS_AS(absolute_end(0, 0, 10, 120), Error);
  CHECK_THROWS_AS(absolute_end(1, -5, 10, 120), Error);
}

TEST_CASE("team_covers counts technicians per level threshold") {
  const auto none = job(0, 10, 1, 0, {{0, 0}});
  const auto two_basic = job(1, 10, 1, 0, {{2, 0}});
  const auto two_and_one_expert = job(2, 10, 1, 0, {{2, 1}});
  const Instance instance = testing::make_instance(
      120, 0, 1, 2, {tech(0, {2}), tech(1, {1}), tech(2, {0})},
      {none, two_basic, two_and_one_expert});

  const std::vector<int> empty;
  CHECK(team_covers(instance, empty, none));
  const std::vector<int> lone_expert{0};
  CHECK_FALSE(team_covers(instance, lone_expert, two_basic));
  const std::vector<int> expert_and_basic{0, 1};
  CHECK(team_covers(instance, expert_and_basic, two_and_one_expert));
  const std::vector<int> basic_and_none{1, 2};
  CHECK_FALSE(team_covers(instance, basic_and_none, two_and_one_expert));

  // Cross-check every subset against the counting oracle.
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> team;
    for (int t = 0; t < 3; ++t) {
      if (mask & (1u << t)) team.push_back(t);
    }
    for (const auto& j : instance.interventions) {
      CHECK(team_covers(instance, team, j) == testing::covers_by_count(instance, team, j));
    }
  }
}

TEST_CASE("objective weights 28, 14, 4, 1 with empty classes at zero") {
  CHECK(objective_value({120, 240, 240, 360}) == 8040);
  CHECK(objective_value({0, 0, 0, 0}) == 0);
  CHECK(objective_value({60, 0, 0, 0}) == 1680);

  const Instance instance = testing::make_instance(
      120, 100, 1, 1, {tech(0, {1})},
      {job(0, 60, 1, 5, {{1}}), job(1, 30, 4, 5, {{1}})});
  Solution all_hired;
  all_hired.hired = {0, 1};
  CHECK(evaluate(instance, all_hired).z == 0);

  Solution s;
  s.hired = {1};
  s.assignments = {{0, 1, 0, {0}}};
  CHECK(evaluate(instance, s).z == 1680);

  // Makespan mode replaces t4 by the overall last end.
  Solution both;
  both.assignments = {{0, 1, 0, {0}}, {1, 1, 60, {0}}};
  CHECK(evaluate(instance, both, T4Mode::kPriority).ending == std::array<Time, 4>{60, 0, 0, 90});
  Solution late_p1;
  late_p1.assignments = {{0, 1, 30, {0}}, {1, 1, 0, {0}}};
  CHECK(evaluate(instance, late_p1, T4Mode::kPriority).ending[3] == 30);
  CHECK(evaluate(instance, late_p1, T4Mode::kMakespan).ending[3] == 90);
}

TEST_CASE("validate rejects malformed instances") {
  auto expect_semantic = [](Instance instance) {
    try {
      validate(instance);
      FAIL("expected a semantic error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kSemantic);
    }
  };
  Instance base;
  base.hmax = 120;
  base.domains = 1;
  base.levels = 2;
  base.technicians = {tech(0, {1})};
  base.interventions = {job(0, 30, 1, 1, {{1, 0}}), job(1, 30, 1, 1, {{1, 0}}, {0})};
  CHECK_NOTHROW(validate(base));

  auto cycle = base;
  cycle.interventions[0].predecessors = {1};
  expect_semantic(cycle);

  auto increasing = base;
  increasing.interventions[0].requirements = {{0, 1}};
  expect_semantic(increasing);

  auto too_long = base;
  too_long.interventions[0].duration = 121;
  expect_semantic(too_long);

  auto bad_priority = base;
  bad_priority.interventions[1].priority = 5;
  expect_semantic(bad_priority);

  auto bad_skill = base;
  bad_skill.technicians[0].skills = {3};
  expect_semantic(bad_skill);
}

TEST_CASE("successor lists and topological order respect precedence") {
  const Instance instance = testing::make_instance(
      120, 0, 1, 1, {tech(0, {1})},
      {job(0, 10, 1, 1, {{0}}, {2}), job(1, 10, 1, 1, {{0}}, {0}), job(2, 10, 1, 1, {{0}})});
  const auto succ = successor_lists(instance);
  CHECK(succ[2] == std::vector<int>{0});
  CHECK(succ[0] == std::vector<int>{1});
  CHECK(topological_order(instance) == std::vector<int>{2, 0, 1});
}

TEST_CASE("priority permutations map positions onto 28, 14, 4, 1") {
  const PriorityPermutation identity;
  CHECK(identity.weight_of(1) == 28);
  CHECK(identity.weight_of(2) == 14);
  CHECK(identity.weight_of(3) == 4);
  CHECK(identity.weight_of(4) == 1);

  const PriorityPermutation p({3, 4, 1, 2});
  CHECK(p.weight_of(3) == 28);
  CHECK(p.weight_of(4) == 14);
  CHECK(p.weight_of(1) == 4);
  CHECK(p.weight_of(2) == 1);
  CHECK(PriorityPermutation({2, 3, 4, 1}).weight_of(1) == 1);
  CHECK(p.to_string() == "(3,4,1,2)");

  const auto all = PriorityPermutation::all();
  REQUIRE(all.size() == 24);
  CHECK(all.front() == identity);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& q : all) {
    Time sum = 0;
    for (int priority = 1; priority <= 4; ++priority) sum += q.weight_of(priority);
    CHECK(sum == 47);
  }
  CHECK_THROWS_AS(PriorityPermutation({1, 1, 2, 3}), Error);
}
