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

// Microbenchmarks for the solver's hot paths.

#include <benchmark/benchmark.h>

#include <random>

#include "tisched/grasp.hpp"
#include "tisched/instance_io.hpp"

namespace {

using namespace tisched;

Instance make(int interventions, int technicians, std::uint64_t seed = 17) {
  GeneratorConfig config;
  config.interventions = interventions;
  config.technicians = technicians;
  config.domains = 4;
  config.levels = 3;
  config.density = 0.05;
  config.seed = seed;
  return generate_instance(config);
}

void BM_Mintec(benchmark::State& state) {
  const Instance instance = make(100, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_weights(instance));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Mintec)->Arg(5)->Arg(10)->Arg(20);

void BM_SelectHired(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance instance = make(n, 10);
  const auto weights = compute_weights(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_hired(instance, weights.weight, weights.uncoverable));
  }
}
BENCHMARK(BM_SelectHired)->Arg(20)->Arg(60)->Arg(100);

void BM_Greedy(benchmark::State& state) {
  const Instance instance = make(static_cast<int>(state.range(0)), 12);
  const Criteria criteria = initial_criteria(instance, PriorityPermutation{});
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_greedy(instance, criteria, &rng));
  }
}
BENCHMARK(BM_Greedy)->Arg(20)->Arg(50)->Arg(100);

void BM_LocalSearch(benchmark::State& state) {
  const Instance instance = make(static_cast<int>(state.range(0)), 12);
  const Solution start = run_greedy(instance, initial_criteria(instance, PriorityPermutation{}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_search(instance, start));
  }
}
BENCHMARK(BM_LocalSearch)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OrderSearch(benchmark::State& state) {
  const Instance instance = make(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_two_permutations(instance));
  }
}
BENCHMARK(BM_OrderSearch)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Check(benchmark::State& state) {
  const Instance instance = make(static_cast<int>(state.range(0)), 12);
  const Solution s = run_greedy(instance, initial_criteria(instance, PriorityPermutation{}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(instance, s));
  }
}
BENCHMARK(BM_Check)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
