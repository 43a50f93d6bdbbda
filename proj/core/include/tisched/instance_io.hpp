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

// Text formats for instances and solutions, and a seeded instance generator.
//
// Instance document (blank lines and '#' comments are ignored):
//
//   HMAX <int>
//   BUDGET <int>
//   DOMAINS <int>
//   LEVELS <int>
//   TECHNICIANS <count>
//   <id> <C(t,1)> ... <C(t,D)> [U <day>...]
//   INTERVENTIONS <count>
//   <id> <duration> <priority> <cost> P <pred ids...> R <D*L ints row-major>
//
// Solution document:
//
//   HIRED <ids...>
//   <intervention id> <day> <start> T <technician ids...>
//   OBJ <t1> <t2> <t3> <t4> <z>
//
// The OBJ line is informative; the checker always recomputes it.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "tisched/model.hpp"

namespace tisched {

struct ParseOptions {
  /// Interpret R rows as counts of technicians at exactly each level and
  /// convert them to the cumulative form by suffix summation.
  bool per_level_requirements = false;
};

/// Parses and validates an instance. Syntax errors throw kParse with a
/// 1-based line number; invariant violations throw kSemantic.
Instance parse_instance(std::string_view text, const ParseOptions& options = {});
std::string serialize_instance(const Instance& instance);

/// Parses a solution and validates every id against `instance`.
/// Throws kParse, kUnknownId or kDuplicateAssignment.
Solution parse_solution(std::string_view text, const Instance& instance);
std::string serialize_solution(const Solution& solution);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Instance load_instance(const std::filesystem::path& path,
                       const ParseOptions& options = {});
Solution load_solution(const std::filesystem::path& path,
                       const Instance& instance);

struct GeneratorConfig {
  int interventions = 20;
  int technicians = 7;
  int domains = 3;
  int levels = 2;
  double density = 0.05;  // probability of each edge i -> j, i < j
  int hmax = 120;
  int min_duration = 15;
  int max_duration = 60;
  Cost min_cost = 1;
  Cost max_cost = 100;
  double budget_fraction = 0.1;  // budget = fraction * total cost
  std::array<double, kPriorityCount> priority_weights{1.0, 1.0, 1.0, 1.0};
  int max_required_level = 0;  // 0 means `levels`
  int max_team_demand = 2;     // per (domain, level) requirement cap
  std::uint64_t seed = 1;
};

/// Throws kConfig for non-positive counts, density outside [0, 1], empty
/// ranges, or max_required_level > levels.
void validate(const GeneratorConfig& config);

/// Deterministic for a fixed config. Every intervention is coverable by the
/// full workforce, and precedence edges only run from lower to higher id.
Instance generate_instance(const GeneratorConfig& config);

}  // namespace tisched
