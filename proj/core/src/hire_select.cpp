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

#include "tisched/hire_select.hpp"

#include <algorithm>
#include <numeric>

namespace tisched {

std::vector<int> successor_closure(const Instance& instance, std::span<const int> seeds) {
  const auto succ = successor_lists(instance);
  std::vector<char> in(instance.interventions.size(), 0);
  std::vector<int> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (in[v]) continue;
    in[v] = 1;
    for (int s : succ[v]) {
      if (!in[s]) stack.push_back(s);
    }
  }
  std::vector<int> closure;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) closure.push_back(static_cast<int>(i));
  }
  return closure;
}

bool is_successor_closed(const Instance& instance, std::span<const int> hired) {
  std::vector<char> in(instance.interventions.size(), 0);
  for (int id : hired) in[id] = 1;
  for (const auto& job : instance.interventions) {
    for (int p : job.predecessors) {
      if (in[p] && !in[job.id]) return false;
    }
  }
  return true;
}

namespace {

// Products of weight and cost can exceed 64 bits.
__extension__ using Wide = __int128;

class Knapsack {
 public:
  Knapsack(const Instance& instance, std::span<const Cost> weights, std::span<const int> forced)
      : instance_(instance), weights_(weights.begin(), weights.end()) {
    const int n = static_cast<int>(instance.interventions.size());
    included_.assign(n, 0);
    for (int id : successor_closure(instance, forced)) {
      included_[id] = 1;
      cost_ += cost_of(id);
      weight_ += weights_[id];
    }
    if (cost_ > instance.budget) {
      throw Error(ErrorCode::kInfeasibleMustHire,
                  "uncoverable interventions cost " + std::to_string(cost_) +
                      " to outsource, above the budget of " + std::to_string(instance.budget));
    }
    forced_ = included_;
    forced_cost_ = cost_;
    forced_weight_ = weight_;
    const Cost residual = instance.budget - cost_;

    closure_.resize(n);
    for (int i = 0; i < n; ++i) {
      if (included_[i] || weights_[i] <= 0) continue;
      const int seed[] = {i};
      Cost cc = 0;
      Cost cw = 0;
      for (int m : successor_closure(instance, seed)) {
        if (included_[m]) continue;
        closure_[i].push_back(m);
        cc += cost_of(m);
        cw += weights_[m];
      }
      if (cc <= residual) candidates_.push_back({i, cc, cw});
    }
    // Descending closure ratio weight / cost; free closures first.
    std::stable_sort(candidates_.begin(), candidates_.end(), [](const Item& a, const Item& b) {
      return static_cast<Wide>(a.weight) * b.cost > static_cast<Wide>(b.weight) * a.cost;
    });
    by_item_ratio_.resize(candidates_.size());
    std::iota(by_item_ratio_.begin(), by_item_ratio_.end(), 0);
    std::stable_sort(by_item_ratio_.begin(), by_item_ratio_.end(), [&](int a, int b) {
      const int x = candidates_[a].id;
      const int y = candidates_[b].id;
      return static_cast<Wide>(weights_[x]) * cost_of(y) >
             static_cast<Wide>(weights_[y]) * cost_of(x);
    });
    excluded_.assign(n, 0);
  }

  bool small() const { return candidates_.size() <= kExactCandidateLimit; }

  HirePlan exact() {
    best_included_ = included_;
    best_cost_ = cost_;
    best_weight_ = weight_;
    branch(0);
    return plan(best_included_, true);
  }

  HirePlan heuristic() {
    // Ratio greedy over successor closures.
    std::vector<int> roots;
    for (;;) {
      int pick = -1;
      Cost pick_cost = 0;
      Cost pick_weight = 0;
      for (int k = 0; k < static_cast<int>(candidates_.size()); ++k) {
        const int id = candidates_[k].id;
        if (included_[id]) continue;
        auto [mc, mw] = marginal(id, included_);
        if (cost_ + mc > instance_.budget || mw <= 0) continue;
        if (pick < 0 || static_cast<Wide>(mw) * pick_cost >
                            static_cast<Wide>(pick_weight) * mc) {
          pick = id;
          pick_cost = mc;
          pick_weight = mw;
        }
      }
      if (pick < 0) break;
      add(pick, included_);
      cost_ += pick_cost;
      weight_ += pick_weight;
      roots.push_back(pick);
    }

    // Single swap: drop one chosen root, add one unchosen candidate.
    const auto& forced = forced_;
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& cand : candidates_) {
        if (included_[cand.id]) continue;
        for (std::size_t r = 0; r < roots.size() && !improved; ++r) {
          std::vector<char> trial = forced;
          Cost trial_cost = forced_cost_;
          Cost trial_weight = forced_weight_;
          for (std::size_t q = 0; q < roots.size(); ++q) {
            if (q == r) continue;
            auto [mc, mw] = marginal(roots[q], trial);
            trial_cost += mc;
            trial_weight += mw;
            add(roots[q], trial);
          }
          auto [mc, mw] = marginal(cand.id, trial);
          trial_cost += mc;
          trial_weight += mw;
          if (trial_cost <= instance_.budget && trial_weight > weight_) {
            add(cand.id, trial);
            included_ = std::move(trial);
            cost_ = trial_cost;
            weight_ = trial_weight;
            roots[r] = cand.id;
            improved = true;
          }
        }
        if (improved) break;
      }
    }
    return plan(included_, false);
  }

 private:
  struct Item {
    int id;
    Cost cost;    // closure cost beyond the forced set
    Cost weight;  // closure weight beyond the forced set
  };

  Cost cost_of(int id) const { return instance_.interventions[id].cost; }

  std::pair<Cost, Cost> marginal(int id, const std::vector<char>& in) const {
    Cost c = 0;
    Cost w = 0;
    for (int m : closure_[id]) {
      if (in[m]) continue;
      c += cost_of(m);
      w += weights_[m];
    }
    return {c, w};
  }

  void add(int id, std::vector<char>& in) const {
    for (int m : closure_[id]) in[m] = 1;
  }

  // Fractional knapsack over individual undecided items; precedence ignored.
  Cost upper_bound(std::size_t depth) const {
    Cost bound = weight_;
    Cost room = instance_.budget - cost_;
    for (int k : by_item_ratio_) {
      if (static_cast<std::size_t>(k) < depth) continue;
      const int id = candidates_[k].id;
      if (included_[id] || excluded_[id]) continue;
      const Cost c = cost_of(id);
      const Cost w = weights_[id];
      if (c <= room) {
        bound += w;
        room -= c;
      } else {
        bound += static_cast<Cost>(static_cast<Wide>(w) * room / c);
        break;
      }
    }
    return bound;
  }

  void branch(std::size_t depth) {
    if (weight_ > best_weight_ || (weight_ == best_weight_ && cost_ < best_cost_)) {
      best_included_ = included_;
      best_weight_ = weight_;
      best_cost_ = cost_;
    }
    if (depth == candidates_.size()) return;
    const Cost bound = upper_bound(depth);
    if (bound < best_weight_ || (bound == best_weight_ && cost_ >= best_cost_)) return;

    const int id = candidates_[depth].id;
    if (included_[id]) {
      branch(depth + 1);
      return;
    }

    // Include: take the whole closure unless it meets an excluded item.
    bool blocked = false;
    Cost add_cost = 0;
    Cost add_weight = 0;
    std::vector<int> added;
    for (int m : closure_[id]) {
      if (included_[m]) continue;
      if (excluded_[m]) {
        blocked = true;
        break;
      }
      added.push_back(m);
      add_cost += cost_of(m);
      add_weight += weights_[m];
    }
    if (!blocked && cost_ + add_cost <= instance_.budget) {
      for (int m : added) included_[m] = 1;
      cost_ += add_cost;
      weight_ += add_weight;
      branch(depth + 1);
      cost_ -= add_cost;
      weight_ -= add_weight;
      for (int m : added) included_[m] = 0;
    }

    excluded_[id] = 1;
    branch(depth + 1);
    excluded_[id] = 0;
  }

  HirePlan plan(const std::vector<char>& in, bool exact) const {
    HirePlan result;
    result.exact = exact;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (!in[i]) continue;
      result.hired.push_back(static_cast<int>(i));
      result.total_cost += cost_of(static_cast<int>(i));
      result.total_weight += weights_[i];
    }
    return result;
  }

  const Instance& instance_;
  std::vector<Cost> weights_;
  std::vector<std::vector<int>> closure_;  // closure minus forced set
  std::vector<Item> candidates_;
  std::vector<int> by_item_ratio_;  // candidate indices by individual ratio

  std::vector<char> included_;
  std::vector<char> excluded_;
  Cost cost_ = 0;
  Cost weight_ = 0;

  std::vector<char> forced_;
  Cost forced_cost_ = 0;
  Cost forced_weight_ = 0;

  std::vector<char> best_included_;
  Cost best_cost_ = 0;
  Cost best_weight_ = 0;
};

}  // namespace

HirePlan select_hired(const Instance& instance, std::span<const Cost> weights,
                      std::span<const int> forced) {
  if (weights.size() != instance.interventions.size()) {
    throw Error(ErrorCode::kContractViolation, "one weight per intervention is required");
  }
  Knapsack knapsack(instance, weights, forced);
  return knapsack.small() ? knapsack.exact() : knapsack.heuristic();
}

SubInstance reduce_instance(const Instance& instance, std::span<const int> hired) {
  if (!is_successor_closed(instance, hired)) {
    throw Error(ErrorCode::kContractViolation, "hire set is not successor-closed");
  }
  const int n = static_cast<int>(instance.interventions.size());
  std::vector<char> out(n, 0);
  for (int id : hired) out[id] = 1;
  std::vector<int> new_id(n, -1);
  SubInstance sub;
  sub.instance.hmax = instance.hmax;
  sub.instance.budget = instance.budget;
  sub.instance.domains = instance.domains;
  sub.instance.levels = instance.levels;
  sub.instance.technicians = instance.technicians;
  for (int i = 0; i < n; ++i) {
    if (out[i]) continue;
    new_id[i] = static_cast<int>(sub.original_ids.size());
    sub.original_ids.push_back(i);
  }
  for (int old : sub.original_ids) {
    Intervention job = instance.interventions[old];
    job.id = new_id[old];
    for (int& p : job.predecessors) p = new_id[p];  // closure keeps predecessors
    sub.instance.interventions.push_back(std::move(job));
  }
  return sub;
}

}  // namespace tisched
