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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tisched/instance_io.hpp"

namespace tisched {

namespace {

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorCode::kConfig, message);
}

// Distribution helpers written out by hand: std:: distributions are not
// guaranteed to produce the same sequence across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

void validate(const GeneratorConfig& c) {
  if (c.interventions <= 0 || c.technicians <= 0 || c.domains <= 0 || c.levels <= 0) {
    config_error("generator counts must all be positive");
  }
  if (!(c.density >= 0.0 && c.density <= 1.0)) config_error("density must lie in [0, 1]");
  if (c.hmax <= 0) config_error("hmax must be positive");
  if (c.min_duration <= 0 || c.min_duration > c.max_duration) {
    config_error("duration range must satisfy 0 < min <= max");
  }
  if (c.max_duration > c.hmax) config_error("max_duration cannot exceed hmax");
  if (c.min_cost < 0 || c.min_cost > c.max_cost) {
    config_error("cost range must satisfy 0 <= min <= max");
  }
  if (!(c.budget_fraction >= 0.0)) config_error("budget_fraction must be non-negative");
  if (c.max_required_level < 0 || c.max_required_level > c.levels) {
    config_error("max_required_level " + std::to_string(c.max_required_level) +
                 " exceeds the " + std::to_string(c.levels) +
                 " available levels; requirements would be uncoverable");
  }
  if (c.max_team_demand <= 0) config_error("max_team_demand must be positive");
  double total = 0.0;
  for (double w : c.priority_weights) {
    if (!(w >= 0.0)) config_error("priority weights must be non-negative");
    total += w;
  }
  if (total <= 0.0) config_error("at least one priority weight must be positive");
}

Instance generate_instance(const GeneratorConfig& config) {
  validate(config);
  Draw draw(config.seed);
  const int D = config.domains;
  const int L = config.levels;
  const int top_level = config.max_required_level == 0 ? L : config.max_required_level;

  Instance instance;
  instance.hmax = config.hmax;
  instance.domains = D;
  instance.levels = L;

  for (int t = 0; t < config.technicians; ++t) {
    Technician tech;
    tech.id = t;
    for (int d = 0; d < D; ++d) tech.skills.push_back(static_cast<int>(draw.uniform(0, L)));
    instance.technicians.push_back(std::move(tech));
  }
  // Every domain gets at least one expert.
  for (int d = 0; d < D; ++d) instance.technicians[d % config.technicians].skills[d] = L;

  // available[d][l] = technicians with level >= l + 1 in domain d
  std::vector<std::vector<int>> available(D, std::vector<int>(L, 0));
  for (const auto& tech : instance.technicians) {
    for (int d = 0; d < D; ++d) {
      for (int l = 0; l < tech.skills[d]; ++l) ++available[d][l];
    }
  }

  const double weight_total = std::accumulate(config.priority_weights.begin(),
                                              config.priority_weights.end(), 0.0);
  Cost total_cost = 0;
  for (int i = 0; i < config.interventions; ++i) {
    Intervention job;
    job.id = i;
    job.duration = static_cast<int>(draw.uniform(config.min_duration, config.max_duration));
    double pick = draw.unit() * weight_total;
    job.priority = kPriorityCount;
    for (int k = 0; k < kPriorityCount; ++k) {
      if (pick < config.priority_weights[k]) {
        job.priority = k + 1;
        break;
      }
      pick -= config.priority_weights[k];
    }
    job.cost = draw.uniform(config.min_cost, config.max_cost);
    total_cost += job.cost;

    job.requirements.assign(D, std::vector<int>(L, 0));
    std::vector<int> demanded;
    for (int d = 0; d < D; ++d) {
      if (draw.chance(0.5)) demanded.push_back(d);
    }
    if (demanded.empty()) demanded.push_back(static_cast<int>(draw.uniform(0, D - 1)));
    for (int d : demanded) {
      int level = static_cast<int>(draw.uniform(1, top_level));
      while (level > 0 && available[d][level - 1] == 0) --level;
      if (level == 0) continue;
      auto& row = job.requirements[d];
      const int bump = draw.chance(0.3) ? 1 : 0;
      row[level - 1] = std::min({1 + bump, config.max_team_demand, available[d][level - 1]});
      for (int l = level - 2; l >= 0; --l) {
        const int extra = draw.chance(0.3) ? 1 : 0;
        row[l] = std::min(row[l + 1] + extra, std::min(config.max_team_demand, available[d][l]));
        row[l] = std::max(row[l], row[l + 1]);
      }
    }

    for (int p = 0; p < i; ++p) {
      if (draw.chance(config.density)) job.predecessors.push_back(p);
    }
    instance.interventions.push_back(std::move(job));
  }
  instance.budget = static_cast<Cost>(
      std::floor(config.budget_fraction * static_cast<double>(total_cost)));
  validate(instance);
  return instance;
}

}  // namespace tisched
