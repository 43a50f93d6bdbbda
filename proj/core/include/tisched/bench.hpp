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

// Benchmark harness: solve every instance of a directory and compare with a
// table of best known objective values.
//
// The gap is (obj - best) / obj, truncated (not rounded) to three decimals.
// For example best 34395 and obj 43860 give 0.215 (0.2158 truncated).

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tisched/grasp.hpp"

namespace tisched {

struct Gap {
  std::int64_t thousandths = 0;

  double value() const { return static_cast<double>(thousandths) / 1000.0; }
  /// "0" for a zero gap, otherwise a fixed three-decimal number.
  std::string to_string() const;

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// nullopt when obj is 0 and best is not (undefined ratio).
std::optional<Gap> compute_gap(Time best, Time obj);

struct BenchRow {
  std::string instance;
  int interventions = 0;
  int technicians = 0;
  int domains = 0;
  int levels = 0;
  std::optional<Time> best;
  Time obj = 0;
  std::optional<Gap> gap;
};

/// Lines "<instance>,<best>"; a non-numeric first line is taken as header.
std::map<std::string, Time> parse_reference_csv(std::string_view text);

/// Solves every regular file of `dir` (sorted by name). The instance name is
/// the file stem.
std::vector<BenchRow> run_bench(const std::filesystem::path& dir,
                                const std::map<std::string, Time>& reference,
                                const SearchConfig& config);

/// Aligned text table: instance, int., tec., dom., lev., best obj, obj., gap.
std::string format_table(const std::vector<BenchRow>& rows);

}  // namespace tisched
