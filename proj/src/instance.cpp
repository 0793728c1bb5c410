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

#include "psmc/instance.hpp"

#include <algorithm>
#include <string>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

void sort_unique(std::vector<Index>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Instance::Instance(Index n, std::vector<std::vector<Index>> sets, std::vector<Cost> costs,
                   std::vector<Index> reqs, Rational q)
    : n_(n), sets_(std::move(sets)), costs_(std::move(costs)), reqs_(std::move(reqs)), q_(q) {
  if (n_ < 1) throw InvalidInstance("instance needs at least one element");
  if (costs_.size() != sets_.size()) {
    throw InvalidInstance("costs has " + std::to_string(costs_.size()) + " entries for " +
                          std::to_string(sets_.size()) + " sets");
  }
  if (reqs_.size() != static_cast<std::size_t>(n_)) {
    throw InvalidInstance("reqs has " + std::to_string(reqs_.size()) + " entries for n = " +
                          std::to_string(n_));
  }
  if (!(q_ > Rational(0)) || q_ > Rational(1)) {
    throw InvalidInstance("q must lie in (0, 1], got " + q_.str());
  }
  for (Cost c : costs_) {
    if (c < 0) throw InvalidInstance("set costs must be nonnegative");
  }
  for (Index r : reqs_) {
    if (r < 1) throw InvalidInstance("covering requirements must be >= 1");
    r_max_ = std::max(r_max_, r);
  }
  containing_.assign(n_, {});
  for (Index s = 0; s < num_sets(); ++s) {
    auto& members = sets_[s];
    sort_unique(members);
    for (Index e : members) {
      if (e < 0 || e >= n_) {
        throw InvalidInstance("set " + std::to_string(s) + " holds element " + std::to_string(e) +
                              " outside [0, " + std::to_string(n_) + ")");
      }
      containing_[e].push_back(s);
    }
  }
}

Index Instance::target() const { return static_cast<Index>((q_ * Rational(n_)).ceil()); }

SubCollection coverage(const Instance& inst, std::vector<Index> chosen) {
  sort_unique(chosen);
  SubCollection out;
  std::vector<Index> counts(inst.num_elements(), 0);
  for (Index s : chosen) {
    if (s < 0 || s >= inst.num_sets()) {
      throw InvalidInstance("set index " + std::to_string(s) + " out of range");
    }
    out.cost += inst.cost(s);
    for (Index e : inst.set(s)) ++counts[e];
  }
  for (Index e = 0; e < inst.num_elements(); ++e) {
    if (counts[e] >= inst.req(e)) out.covered.push_back(e);
  }
  out.chosen = std::move(chosen);
  if (!out.covered.empty()) {
    out.density = Density{out.cost, static_cast<Index>(out.covered.size())};
  }
  return out;
}

Index feasibility_check(const Instance& inst) {
  Index count = 0;
  for (Index e = 0; e < inst.num_elements(); ++e) {
    if (inst.coverable(e)) ++count;
  }
  return count;
}

ResidualState ResidualState::initial(std::shared_ptr<const Instance> base) {
  ResidualState st;
  st.residual_reqs = base->reqs();
  st.remaining_target = base->target();
  st.q_prime = Rational(st.remaining_target, base->num_elements());
  st.base = std::move(base);
  return st;
}

ResidualState residual_update(const ResidualState& state, const SubCollection& picked) {
  const Instance& inst = *state.base;
  ResidualState next = state;
  std::vector<char> is_covered(inst.num_elements(), 0);
  for (Index e : state.already_covered) is_covered[e] = 1;
  std::vector<char> is_chosen(inst.num_sets(), 0);
  for (Index s : state.chosen) is_chosen[s] = 1;

  for (Index s : picked.chosen) {
    if (s < 0 || s >= inst.num_sets()) {
      throw InvalidInstance("set index " + std::to_string(s) + " out of range");
    }
    if (is_chosen[s]) continue;
    is_chosen[s] = 1;
    next.chosen.push_back(s);
    for (Index e : inst.set(s)) {
      if (is_covered[e]) continue;
      if (--next.residual_reqs[e] == 0) {
        is_covered[e] = 1;
        next.already_covered.push_back(e);
      }
    }
  }
  sort_unique(next.chosen);
  sort_unique(next.already_covered);
  const Index covered = static_cast<Index>(next.already_covered.size());
  next.remaining_target = std::max<Index>(0, inst.target() - covered);
  next.q_prime = Rational(next.remaining_target, inst.num_elements());
  return next;
}

ReducedInstance reduce(const ResidualState& state) {
  const Instance& inst = *state.base;
  std::vector<char> is_chosen(inst.num_sets(), 0);
  for (Index s : state.chosen) is_chosen[s] = 1;

  ReducedInstance out;
  std::vector<Index> new_id(inst.num_elements(), -1);
  for (Index e = 0; e < inst.num_elements(); ++e) {
    const Index r = state.residual_reqs[e];
    if (r == 0) continue;
    Index free_degree = 0;
    for (Index s : inst.sets_containing(e)) free_degree += is_chosen[s] ? 0 : 1;
    if (free_degree < r) continue;
    new_id[e] = static_cast<Index>(out.element_map.size());
    out.element_map.push_back(e);
  }
  if (out.element_map.empty()) return out;

  std::vector<std::vector<Index>> sets;
  std::vector<Cost> costs;
  for (Index s = 0; s < inst.num_sets(); ++s) {
    if (is_chosen[s]) continue;
    std::vector<Index> members;
    for (Index e : inst.set(s)) {
      if (new_id[e] >= 0) members.push_back(new_id[e]);
    }
    if (members.empty()) continue;
    sets.push_back(std::move(members));
    costs.push_back(inst.cost(s));
    out.set_map.push_back(s);
  }
  std::vector<Index> reqs;
  reqs.reserve(out.element_map.size());
  for (Index e : out.element_map) reqs.push_back(state.residual_reqs[e]);
  out.instance = std::make_shared<const Instance>(static_cast<Index>(out.element_map.size()),
                                                  std::move(sets), std::move(costs),
                                                  std::move(reqs));
  return out;
}

}  // namespace psmc
