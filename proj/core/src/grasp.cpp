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

#include "tisched/grasp.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace tisched {

PredUpdateMode parse_pred_update_mode(std::string_view text) {
  if (text == "direct") return PredUpdateMode::kDirect;
  if (text == "transitive") return PredUpdateMode::kTransitive;
  throw Error(ErrorCode::kConfig,
              "predecessor update must be 'direct' or 'transitive', got '" + std::string(text) +
                  "'");
}

void validate(const SearchConfig& config) {
  if (!config.iterations && !(config.time_limit_seconds > 0.0)) {
    throw Error(ErrorCode::kConfig, "time limit must be positive");
  }
  if (config.iterations && *config.iterations <= 0) {
    throw Error(ErrorCode::kConfig, "iteration count must be positive");
  }
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
    throw Error(ErrorCode::kConfig, "alpha must lie in [0, 1]");
  }
}

bool StopRule::reached(int completed) const {
  if (iterations) return completed >= *iterations;
  if (deadline) return Clock::now() >= *deadline;
  return true;
}

void update_criteria(Criteria& criteria, const Instance& instance, const Solution& solution,
                     const PriorityPermutation& p, PredUpdateMode mode) {
  for (int priority = 1; priority <= kPriorityCount; ++priority) {
    const int last = last_of_priority(instance, solution, priority);
    if (last < 0) continue;
    const auto bonus = static_cast<double>(p.weight_of(priority));
    criteria[last] += bonus;
    if (mode == PredUpdateMode::kDirect) {
      for (int pred : instance.interventions[last].predecessors) criteria[pred] += bonus;
      continue;
    }
    std::vector<char> seen(instance.interventions.size(), 0);
    std::vector<int> stack(instance.interventions[last].predecessors);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      criteria[v] += bonus;
      for (int pred : instance.interventions[v].predecessors) stack.push_back(pred);
    }
  }
}

Incumbent grasp_run(const Instance& instance, const PriorityPermutation& p,
                    const SearchConfig& config, const StopRule& stop, Rng& rng) {
  const auto weights = compute_weights(instance).weight;
  const Criteria initial = initial_criteria(instance, p);
  Criteria criteria = initial;
  const GreedyOptions greedy_options{config.alpha, config.t4_mode};

  Incumbent incumbent;
  incumbent.best_z = std::numeric_limits<Time>::max();
  for (int iteration = 0; iteration == 0 || !stop.reached(iteration); ++iteration) {
    if (config.reset_criteria) criteria = initial;
    Rng* source = iteration == 0 ? nullptr : &rng;
    Solution greedy = run_greedy(instance, weights, criteria, source, greedy_options);

    bool searched = false;
    if (greedy.objective.z < incumbent.best_z) {
      incumbent.best = local_search(instance, greedy, config.t4_mode, stop.deadline);
      incumbent.best_z = incumbent.best.objective.z;
      searched = true;
    }
    update_criteria(criteria, instance, greedy, p, config.pred_update);

    incumbent.iterations = iteration + 1;
    incumbent.greedy_trace.push_back(greedy.objective.z);
    incumbent.best_trace.push_back(incumbent.best_z);
    if (config.log != nullptr) {
      *config.log << "iter=" << iteration + 1 << " z=" << greedy.objective.z
                  << " best=" << incumbent.best_z << " phase=" << (searched ? "ls" : "greedy")
                  << '\n';
    }
  }
  return incumbent;
}

SolveReport solve(const Instance& instance, const SearchConfig& config) {
  validate(config);
  const auto started = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(config.time_limit_seconds));

  SolveReport report;
  report.preprocess = compute_weights(instance);
  report.plan = select_hired(instance, report.preprocess.weight, report.preprocess.uncoverable);
  const SubInstance sub = reduce_instance(instance, report.plan.hired);

  Solution best;
  if (!sub.instance.interventions.empty()) {
    report.orders = best_two_permutations(sub.instance, config.t4_mode);
    const PriorityPermutation orders[] = {report.orders->first, report.orders->second};
    for (int k = 0; k < 2; ++k) {
      StopRule stop;
      if (config.iterations) {
        stop.iterations = config.iterations;
      } else {
        // Half of what is left to the first order, the rest to the second.
        const auto end = started + budget;
        const auto now = Clock::now();
        stop.deadline = k == 0 ? now + (end - now) / 2 : end;
      }
      std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                        static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(k)};
      Rng rng(seq);
      if (config.log != nullptr) *config.log << "# order " << orders[k].to_string() << '\n';
      report.runs.push_back(grasp_run(sub.instance, orders[k], config, stop, rng));
    }
    const Incumbent* winner = &report.runs[0];
    if (report.runs[1].best_z < winner->best_z) winner = &report.runs[1];
    best = winner->best;
    for (auto& a : best.assignments) a.intervention = sub.original_ids[a.intervention];
  }

  best.hired = report.plan.hired;
  best.normalize();
  best.objective = evaluate(instance, best, config.t4_mode);
  const auto violations = check(instance, best);
  if (!violations.empty()) {
    throw Error(ErrorCode::kContractViolation,
                "solver produced an infeasible solution: " +
                    std::string(to_string(violations.violations.front().code)) + " " +
                    violations.violations.front().detail);
  }
  report.solution = std::move(best);
  return report;
}

}  // namespace tisched
