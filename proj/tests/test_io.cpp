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

#include <functional>
#include <string>

#include "doctest.h"
#include "support.hpp"

using namespace tisched;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kConfig;
}

const char* const kMinimal = R"(HMAX 120
BUDGET 0
DOMAINS 1
LEVELS 1
TECHNICIANS 1
0 1
INTERVENTIONS 1
0 30 1 5 P R 0
)";

}  // namespace

TEST_CASE("minimal instance document") {
  const Instance instance = parse_instance(kMinimal);
  CHECK(instance.technicians.size() == 1);
  CHECK(instance.interventions.size() == 1);
  CHECK_FALSE(instance.interventions[0].has_demand());
  CHECK(parse_instance(serialize_instance(instance)) == instance);
}

TEST_CASE("comments, calendars and predecessors parse") {
  const Instance instance = parse_instance(R"(# five interventions, five technicians
HMAX 120
BUDGET 30
DOMAINS 3
LEVELS 2
TECHNICIANS 5
0 2 1 0
1 1 1 1 U 2 4
2 0 2 1
3 1 0 2
4 2 2 2   # the expert
INTERVENTIONS 5
0 30 1 10 P R 1 0 0 0 0 0
1 60 2 10 P 0 R 1 1 0 0 0 0
2 45 3 10 P 0 R 0 0 2 1 0 0
3 15 4 10 P 1 2 R 0 0 0 0 1 1
4 90 1 10 P R 0 0 0 0 0 0
)");
  CHECK(instance.interventions.size() == 5);
  CHECK(instance.technicians.size() == 5);
  CHECK(instance.domains == 3);
  CHECK(instance.levels == 2);
  CHECK(instance.technicians[1].unavailable_days == std::vector<int>{2, 4});
  CHECK(instance.interventions[3].predecessors == std::vector<int>{1, 2});
  CHECK(instance.interventions[2].requirements[1] == std::vector<int>{2, 1});
  CHECK(parse_instance(serialize_instance(instance)) == instance);
}

TEST_CASE("parse errors carry line numbers, semantic errors are separate") {
  std::string cycle = kMinimal;
  cycle.replace(cycle.find("INTERVENTIONS 1"), std::string::npos,
                "INTERVENTIONS 2\n0 30 1 5 P 1 R 0\n1 30 1 5 P 0 R 0\n");
  CHECK(code_of([&] { parse_instance(cycle); }) == ErrorCode::kSemantic);

  std::string garbled = kMinimal;
  garbled.replace(garbled.find("HMAX 120"), 8, "HMAX x");
  CHECK(code_of([&] { parse_instance(garbled); }) == ErrorCode::kParse);
  try {
    parse_instance(garbled);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("per-level requirement rows are converted to cumulative counts") {
  const char* doc = R"(HMAX 120
BUDGET 0
DOMAINS 1
LEVELS 3
TECHNICIANS 1
0 3
INTERVENTIONS 1
0 30 1 5 P R 1 0 2
)";
  ParseOptions options;
  options.per_level_requirements = true;
  CHECK(parse_instance(doc, options).interventions[0].requirements[0] ==
        std::vector<int>{3, 2, 2});
}

TEST_CASE("solution documents round-trip") {
  const Instance instance = testing::make_instance(
      120, 100, 1, 1, {testing::tech(0, {1}), testing::tech(1, {1})},
      {testing::job(0, 30, 1, 1, {{1}}), testing::job(1, 30, 2, 1, {{1}}),
       testing::job(2, 30, 3, 1, {{2}}), testing::job(3, 30, 4, 1, {{1}})});
  Solution s;
  s.hired = {3};
  s.assignments = {{0, 1, 0, {0}}, {1, 1, 30, {0}}, {2, 2, 45, {0, 1}}};
  s.objective = evaluate(instance, s);
  const Solution back = parse_solution(serialize_solution(s), instance);
  CHECK(back == s);

  Solution everything;
  everything.hired = {0, 1, 2, 3};
  everything.objective = evaluate(instance, everything);
  CHECK(parse_solution(serialize_solution(everything), instance) == everything);

  CHECK(code_of([&] { parse_solution("HIRED\n999 1 0 T 0\n", instance); }) ==
        ErrorCode::kUnknownId);
  CHECK(code_of([&] { parse_solution("HIRED\n0 1 0 T 0\n0 1 30 T 0\n", instance); }) ==
        ErrorCode::kDuplicateAssignment);
}

TEST_CASE("generator is seeded and shaped") {
  GeneratorConfig config;
  config.seed = 7;
  CHECK(generate_instance(config) == generate_instance(config));
  config.seed = 8;
  const Instance other = generate_instance(config);
  config.seed = 7;
  CHECK_FALSE(other == generate_instance(config));

  config.interventions = 20;
  config.technicians = 7;
  config.domains = 3;
  config.levels = 2;
  const Instance shaped = generate_instance(config);
  CHECK(shaped.interventions.size() == 20);
  CHECK(shaped.technicians.size() == 7);
  CHECK(shaped.domains == 3);
  CHECK(shaped.levels == 2);

  config.density = 0.0;
  for (const auto& j : generate_instance(config).interventions) CHECK(j.predecessors.empty());

  config.density = 1.5;
  CHECK(code_of([&] { validate(config); }) == ErrorCode::kConfig);
}
