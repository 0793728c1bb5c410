// Copyright 2026 The PSMC Authors
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

#include "psmc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

using Mask = std::uint32_t;

class Enumerator {
 public:
  Enumerator(const Instance& inst, const OracleLimits& limits) : inst_(inst), limits_(limits) {
    if (limits.max_sets < 1) throw std::invalid_argument("OracleLimits.max_sets must be >= 1");
    if (inst.num_sets() > limits.max_sets || inst.num_sets() > 30) {
      throw BudgetExceeded("oracle enumeration capped at " + std::to_string(limits.max_sets) +
                           " sets, instance has " + std::to_string(inst.num_sets()));
    }
    element_masks_.assign(inst.num_elements(), 0);
    for (Index e = 0; e < inst.num_elements(); ++e) {
      for (Index s : inst.sets_containing(e)) element_masks_[e] |= Mask{1} << s;
    }
    sorted_costs_ = inst.costs();
    std::sort(sorted_costs_.begin(), sorted_costs_.end());
    start_ = std::chrono::steady_clock::now();
  }

  bool fully_covers(Mask mask, Index e) const {
    return std::popcount(mask & element_masks_[e]) >= inst_.req(e);
  }

  Index count_covered(Mask mask) const {
    Index c = 0;
    for (Index e = 0; e < inst_.num_elements(); ++e) c += fully_covers(mask, e) ? 1 : 0;
    return c;
  }

  Cost cost_of(std::span<const Index> idx) const {
    Cost c = 0;
    for (Index s : idx) c += inst_.cost(s);
    return c;
  }

  // Sum of the k cheapest costs: a lower bound on any k-set selection.
  Cost cheapest_k(Index k) const {
    Cost c = 0;
    for (Index i = 0; i < k; ++i) c += sorted_costs_[i];
    return c;
  }

  // Visits every k-subset, k from k_min to m, in popcount-then-lex order.
  // `layer_guard(k)` returning false stops before layer k. `visit` returning
  // false stops the enumeration.
  void run(Index k_min, const std::function<bool(Index)>& layer_guard,
           const std::function<bool(std::span<const Index>, Mask)>& visit) {
    const Index m = inst_.num_sets();
    std::vector<Index> idx;
    std::uint64_t ticks = 0;
    for (Index k = k_min; k <= m; ++k) {
      if (!layer_guard(k)) return;
      idx.resize(k);
      for (Index i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        if ((++ticks & 0x3ff) == 0) check_clock();
        Mask mask = 0;
        for (Index s : idx) mask |= Mask{1} << s;
        if (!visit(idx, mask)) return;
        Index i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

 private:
  void check_clock() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > limits_.time_budget_seconds) {
      throw BudgetExceeded("oracle exceeded its time budget of " +
                           std::to_string(limits_.time_budget_seconds) + " s");
    }
  }

  const Instance& inst_;
  const OracleLimits& limits_;
  std::vector<Mask> element_masks_;
  std::vector<Cost> sorted_costs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SubCollection exact_mdsc(const Instance& inst, const OracleLimits& limits) {
  const Index coverable = feasibility_check(inst);
  if (coverable == 0) throw Infeasible("no element can be fully covered");
  Enumerator en(inst, limits);

  std::optional<Density> best;
  std::vector<Index> best_idx;
  en.run(
      1,
      [&](Index k) {
        if (!limits.prune || !best) return true;
        return !(Density{en.cheapest_k(k), coverable} > *best);
      },
      [&](std::span<const Index> idx, Mask mask) {
        const Index covered = en.count_covered(mask);
        if (covered == 0) return true;
        const Density d{en.cost_of(idx), covered};
        if (!best || d < *best) {
          best = d;
          best_idx.assign(idx.begin(), idx.end());
        }
        return true;
      });
  return coverage(inst, best_idx);
}

SubCollection exact_partial_cover(const Instance& inst, Index target, const OracleLimits& limits) {
  if (target <= 0) return coverage(inst, {});
  if (feasibility_check(inst) < target) {
    throw Infeasible("at most " + std::to_string(feasibility_check(inst)) +
                     " elements can be fully covered, " + std::to_string(target) + " required");
  }
  Enumerator en(inst, limits);
  std::optional<Cost> best;
  std::vector<Index> best_idx;
  en.run(
      1,
      [&](Index k) {
        if (!limits.prune || !best) return true;
        return en.cheapest_k(k) <= *best;
      },
      [&](std::span<const Index> idx, Mask mask) {
        const Cost c = en.cost_of(idx);
        if (best && c >= *best) return true;
        if (en.count_covered(mask) >= target) {
          best = c;
          best_idx.assign(idx.begin(), idx.end());
        }
        return true;
      });
  return coverage(inst, best_idx);
}

SubCollection exact_psmc(const Instance& inst, const OracleLimits& limits) {
  return exact_partial_cover(inst, inst.target(), limits);
}

SubCollection exact_multicover(const Instance& inst, std::span<const Index> targets,
                               const OracleLimits& limits) {
  for (Index e : targets) {
    if (e < 0 || e >= inst.num_elements()) throw InvalidInstance("target element out of range");
    if (!inst.coverable(e)) {
      throw Infeasible("element " + std::to_string(e) + " lies in fewer than r_e sets");
    }
  }
  if (targets.empty()) return coverage(inst, {});
  Enumerator en(inst, limits);
  std::optional<Cost> best;
  std::vector<Index> best_idx;
  en.run(
      1,
      [&](Index k) {
        if (!limits.prune || !best) return true;
        return en.cheapest_k(k) <= *best;
      },
      [&](std::span<const Index> idx, Mask mask) {
        const Cost c = en.cost_of(idx);
        if (best && c >= *best) return true;
        for (Index e : targets) {
          if (!en.fully_covers(mask, e)) return true;
        }
        best = c;
        best_idx.assign(idx.begin(), idx.end());
        return true;
      });
  return coverage(inst, best_idx);
}

}  // namespace psmc
