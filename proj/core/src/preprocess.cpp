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

#include "tisched/preprocess.hpp"

#include <algorithm>
#include <numeric>

namespace tisched {

std::vector<int> demand_of(const Instance& instance, const Intervention& intervention) {
  std::vector<int> demand(static_cast<std::size_t>(instance.domains) * instance.levels, 0);
  for (int d = 0; d < instance.domains; ++d) {
    for (int l = 0; l < instance.levels; ++l) {
      demand[d * instance.levels + l] = intervention.requirements[d][l];
    }
  }
  return demand;
}

std::vector<int> residual_demand(const Instance& instance,
                                 const Intervention& intervention,
                                 std::span<const int> team) {
  auto demand = demand_of(instance, intervention);
  for (int t : team) {
    const auto& skills = instance.technicians[t].skills;
    for (int d = 0; d < instance.domains; ++d) {
      for (int l = 0; l < skills[d]; ++l) {
        auto& r = demand[d * instance.levels + l];
        if (r > 0) --r;
      }
    }
  }
  return demand;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Instance& instance, std::span<const int> demand,
              std::span<const int> candidates) {
    for (std::size_t r = 0; r < demand.size(); ++r) {
      if (demand[r] > 0) {
        rows_.push_back(static_cast<int>(r));
        residual_.push_back(demand[r]);
      }
    }
    const int L = instance.levels;
    std::vector<int> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int t : sorted) {
      std::vector<int> serves;
      const auto& skills = instance.technicians[t].skills;
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int d = rows_[k] / L;
        const int l = rows_[k] % L;
        if (skills[d] >= l + 1) serves.push_back(static_cast<int>(k));
      }
      if (!serves.empty()) {
        ids_.push_back(t);
        serves_.push_back(std::move(serves));
      }
    }
    suppliers_.resize(rows_.size());
    for (std::size_t c = 0; c < serves_.size(); ++c) {
      for (int k : serves_[c]) suppliers_[k].push_back(static_cast<int>(c));
    }
    state_.assign(ids_.size(), kFree);
  }

  std::optional<std::vector<int>> solve() {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (static_cast<int>(suppliers_[k].size()) < residual_[k]) return std::nullopt;
    }
    best_ = greedy();
    dfs();
    std::vector<int> team;
    for (int c : best_) team.push_back(ids_[c]);
    std::sort(team.begin(), team.end());
    return team;
  }

 private:
  enum State : char { kFree, kChosen, kExcluded };

  int score(int c, const std::vector<int>& residual) const {
    int s = 0;
    for (int k : serves_[c]) s += residual[k] > 0 ? 1 : 0;
    return s;
  }

  std::vector<int> greedy() const {
    std::vector<int> residual = residual_;
    std::vector<char> used(ids_.size(), 0);
    std::vector<int> chosen;
    while (std::any_of(residual.begin(), residual.end(), [](int r) { return r > 0; })) {
      int pick = -1;
      int pick_score = 0;
      for (std::size_t c = 0; c < ids_.size(); ++c) {
        if (used[c]) continue;
        const int s = score(static_cast<int>(c), residual);
        if (s > pick_score) {
          pick = static_cast<int>(c);
          pick_score = s;
        }
      }
      // Feasibility was checked up front, so some candidate always helps.
      used[pick] = 1;
      chosen.push_back(pick);
      for (int k : serves_[pick]) {
        if (residual[k] > 0) --residual[k];
      }
    }
    return chosen;
  }

  void dfs() {
    int max_residual = 0;
    for (int r : residual_) max_residual = std::max(max_residual, r);
    if (max_residual == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + max_residual >= best_.size()) return;

    // Row with the least slack between remaining suppliers and demand.
    int row = -1;
    int row_slack = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (residual_[k] == 0) continue;
      int open = 0;
      for (int c : suppliers_[k]) open += state_[c] == kFree ? 1 : 0;
      const int slack = open - residual_[k];
      if (slack < 0) return;
      if (row < 0 || slack < row_slack) {
        row = static_cast<int>(k);
        row_slack = slack;
      }
    }

    std::vector<int> branch;
    for (int c : suppliers_[row]) {
      if (state_[c] == kFree) branch.push_back(c);
    }
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      return score(a, residual_) > score(b, residual_);
    });

    std::vector<int> excluded_here;
    std::vector<const std::vector<int>*> tried;
    for (int c : branch) {
      const bool duplicate = std::any_of(tried.begin(), tried.end(),
                                         [&](const auto* p) { return *p == serves_[c]; });
      if (!duplicate) {
        tried.push_back(&serves_[c]);
        state_[c] = kChosen;
        current_.push_back(c);
        std::vector<int> touched;
        for (int k : serves_[c]) {
          if (residual_[k] > 0) {
            --residual_[k];
            touched.push_back(k);
          }
        }
        dfs();
        for (int k : touched) ++residual_[k];
        current_.pop_back();
      }
      state_[c] = kExcluded;
      excluded_here.push_back(c);
      int open = 0;
      for (int s : suppliers_[row]) open += state_[s] == kFree ? 1 : 0;
      if (open < residual_[row]) break;
    }
    for (int c : excluded_here) state_[c] = kFree;
  }

  std::vector<int> rows_;       // flattened demand index per active row
  std::vector<int> residual_;   // per active row
  std::vector<int> ids_;        // technician id per candidate
  std::vector<std::vector<int>> serves_;     // candidate -> rows
  std::vector<std::vector<int>> suppliers_;  // row -> candidates
  std::vector<State> state_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

std::optional<std::vector<int>> minimum_cover(const Instance& instance,
                                              std::span<const int> demand,
                                              std::span<const int> candidates) {
  return CoverSearch(instance, demand, candidates).solve();
}

std::optional<int> mintec(const Instance& instance, const Intervention& intervention) {
  std::vector<int> everyone(instance.technicians.size());
  std::iota(everyone.begin(), everyone.end(), 0);
  const auto demand = demand_of(instance, intervention);
  auto team = minimum_cover(instance, demand, everyone);
  if (!team) return std::nullopt;
  return static_cast<int>(team->size());
}

PreprocessResult compute_weights(const Instance& instance) {
  PreprocessResult result;
  for (const auto& job : instance.interventions) {
    const auto count = mintec(instance, job);
    if (!count) {
      result.mintec.push_back(kUncoverable);
      result.weight.push_back(0);
      result.uncoverable.push_back(job.id);
      continue;
    }
    result.mintec.push_back(*count);
    result.weight.push_back(static_cast<Cost>(*count) * job.duration);
  }
  return result;
}

}  // namespace tisched
