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

// tisched command line: solve, check, oracle, gen and bench.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tisched/bench.hpp"
#include "tisched/grasp.hpp"
#include "tisched/instance_io.hpp"
#include "tisched/oracle.hpp"

namespace {

using namespace tisched;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;

void print_objective(std::ostream& out, const Objective& objective) {
  for (Time t : objective.ending) out << t << ' ';
  out << objective.z << '\n';
}

struct SolveArgs {
  std::string instance;
  std::string out;
  double time_limit = 60.0;
  std::uint64_t seed = 0;
  double alpha = 0.15;
  std::optional<int> iterations;
  std::string t4_mode = "priority";
  std::string pred_update = "direct";
  bool reset_criteria = false;
  bool verbose = false;
};

int run_solve(const SolveArgs& args) {
  const Instance instance = load_instance(args.instance);
  SearchConfig config;
  config.time_limit_seconds = args.time_limit;
  config.seed = args.seed;
  config.alpha = args.alpha;
  config.iterations = args.iterations;
  config.t4_mode = parse_t4_mode(args.t4_mode);
  config.pred_update = parse_pred_update_mode(args.pred_update);
  config.reset_criteria = args.reset_criteria;
  if (args.verbose) config.log = &std::cerr;

  const SolveReport report = solve(instance, config);
  if (args.verbose) {
    std::cerr << "# hired " << report.plan.hired.size() << " cost=" << report.plan.total_cost
              << " weight=" << report.plan.total_weight
              << (report.plan.exact ? " exact" : " heuristic") << '\n';
    if (report.orders) {
      for (const auto& entry : report.orders->sweep) {
        std::cerr << "sweep " << entry.permutation.to_string() << " z=" << entry.z << '\n';
      }
      std::cerr << "# p1=" << report.orders->first.to_string()
                << " p2=" << report.orders->second.to_string() << '\n';
    }
  }

  // solve() already self-checks; re-parse the serialized text as well so the
  // file on disk is exactly what `check` would read.
  const std::string text = serialize_solution(report.solution);
  const auto reread = check(instance, parse_solution(text, instance));
  if (!reread.empty()) {
    throw Error(ErrorCode::kContractViolation, "serialized solution fails the checker");
  }
  write_text_file(args.out, text);
  print_objective(std::cout, report.solution.objective);
  return kExitOk;
}

int run_check(const std::string& instance_path, const std::string& solution_path,
              const std::string& t4_mode) {
  const Instance instance = load_instance(instance_path);
  const Solution solution = load_solution(solution_path, instance);
  const auto report = check(instance, solution);
  print_objective(std::cout, evaluate(instance, solution, parse_t4_mode(t4_mode)));
  for (const auto& v : report.violations) {
    std::cout << to_string(v.code) << ' ' << v.detail << '\n';
  }
  return report.empty() ? kExitOk : kExitViolations;
}

int run_oracle(const std::string& instance_path, int max_days, std::int64_t node_budget,
               const std::string& out, const std::string& t4_mode) {
  const Instance instance = load_instance(instance_path);
  OracleLimits limits;
  limits.max_interventions = 20;
  limits.max_technicians = 16;
  limits.max_days = max_days > 0 ? max_days
                                  : std::max<int>(1, static_cast<int>(instance.interventions.size()));
  limits.node_budget = node_budget;
  const OracleResult result = brute_force_optimal(instance, limits, parse_t4_mode(t4_mode));
  if (!out.empty()) write_text_file(out, serialize_solution(result.solution));
  print_objective(std::cout, result.solution.objective);
  std::cerr << "nodes=" << result.nodes << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Technician and intervention scheduling solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--instance", solve_args.instance, "Instance file")->required();
  solve_cmd->add_option("--out", solve_args.out, "Solution file to write")->required();
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "Seconds for the whole run")
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.seed, "Random seed")->capture_default_str();
  solve_cmd->add_option("--alpha", solve_args.alpha, "RCL width in [0, 1]")
      ->capture_default_str();
  solve_cmd->add_option("--iterations", solve_args.iterations,
                        "GRASP iterations per order (replaces the time limit)");
  solve_cmd->add_option("--t4-mode", solve_args.t4_mode, "priority|makespan")
      ->capture_default_str();
  solve_cmd->add_option("--pred-update", solve_args.pred_update, "direct|transitive")
      ->capture_default_str();
  solve_cmd->add_flag("--reset-criteria", solve_args.reset_criteria,
                      "Reset selection criteria before every construction");
  solve_cmd->add_flag("-v,--verbose", solve_args.verbose, "Log the order sweep and iterations");

  std::string check_instance, check_solution, check_t4 = "priority";
  auto* check_cmd = app.add_subcommand("check", "Validate a solution file");
  check_cmd->add_option("--instance", check_instance, "Instance file")->required();
  check_cmd->add_option("--solution", check_solution, "Solution file")->required();
  check_cmd->add_option("--t4-mode", check_t4, "priority|makespan")->capture_default_str();

  std::string oracle_instance, oracle_out, oracle_t4 = "priority";
  int oracle_days = 0;
  std::int64_t oracle_nodes = OracleLimits{}.node_budget;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a tiny instance");
  oracle_cmd->add_option("--instance", oracle_instance, "Instance file")->required();
  oracle_cmd->add_option("--max-days", oracle_days,
                         "Days to enumerate (default: one per intervention)");
  oracle_cmd->add_option("--node-budget", oracle_nodes, "Search node limit")
      ->capture_default_str();
  oracle_cmd->add_option("--out", oracle_out, "Write the optimal solution here");
  oracle_cmd->add_option("--t4-mode", oracle_t4, "priority|makespan")->capture_default_str();

  GeneratorConfig gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--interventions", gen.interventions)->capture_default_str();
  gen_cmd->add_option("--technicians", gen.technicians)->capture_default_str();
  gen_cmd->add_option("--domains", gen.domains)->capture_default_str();
  gen_cmd->add_option("--levels", gen.levels)->capture_default_str();
  gen_cmd->add_option("--density", gen.density, "Precedence edge probability")
      ->capture_default_str();
  gen_cmd->add_option("--budget-fraction", gen.budget_fraction)->capture_default_str();
  gen_cmd->add_option("--hmax", gen.hmax)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Instance file to write")->required();

  std::string bench_dir, bench_ref;
  SearchConfig bench_config;
  bench_config.time_limit_seconds = 1200.0;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a directory and compare with best known");
  bench_cmd->add_option("--dir", bench_dir, "Directory of instance files")->required();
  bench_cmd->add_option("--ref", bench_ref, "CSV of instance,best")->required();
  bench_cmd->add_option("--time-limit", bench_config.time_limit_seconds, "Seconds per instance")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_config.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*check_cmd) return run_check(check_instance, check_solution, check_t4);
    if (*oracle_cmd) {
      return run_oracle(oracle_instance, oracle_days, oracle_nodes, oracle_out, oracle_t4);
    }
    if (*gen_cmd) {
      write_text_file(gen_out, serialize_instance(generate_instance(gen)));
      return kExitOk;
    }
    if (*bench_cmd) {
      const auto reference = parse_reference_csv(read_text_file(bench_ref));
      std::cout << format_table(run_bench(bench_dir, reference, bench_config));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
