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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "psmc/rational.hpp"

namespace psmc {

using Cost = std::int64_t;
using Index = std::int32_t;

// A partial set multi-cover instance (E, S, c, r, q) with E = {0, ..., n-1}.
//
// Immutable after construction. The constructor sorts every set and removes
// duplicate members (a set covers an element at most once), then validates:
// members in [0, n), c_S >= 0, r_e >= 1 and 0 < q <= 1. Violations raise
// InvalidInstance.
class Instance {
 public:
  Instance(Index n, std::vector<std::vector<Index>> sets, std::vector<Cost> costs,
           std::vector<Index> reqs, Rational q = Rational(1));

  Index num_elements() const { return n_; }
  Index num_sets() const { return static_cast<Index>(sets_.size()); }
  const std::vector<std::vector<Index>>& sets() const { return sets_; }
  std::span<const Index> set(Index s) const { return sets_[s]; }
  const std::vector<Cost>& costs() const { return costs_; }
  Cost cost(Index s) const { return costs_[s]; }
  const std::vector<Index>& reqs() const { return reqs_; }
  Index req(Index e) const { return reqs_[e]; }
  const Rational& q() const { return q_; }
  Index r_max() const { return r_max_; }

  // Sets containing e, ascending.
  std::span<const Index> sets_containing(Index e) const { return containing_[e]; }
  Index degree(Index e) const { return static_cast<Index>(containing_[e].size()); }
  // degree(e) >= r_e.
  bool coverable(Index e) const { return degree(e) >= reqs_[e]; }

  // ceil(q n), the number of elements a feasible solution fully covers.
  Index target() const;

 private:
  Index n_;
  std::vector<std::vector<Index>> sets_;
  std::vector<Cost> costs_;
  std::vector<Index> reqs_;
  Rational q_;
  Index r_max_ = 0;
  std::vector<std::vector<Index>> containing_;
};

// Exact density c / k. Ordering is by cross-multiplication.
struct Density {
  Cost cost = 0;
  Index covered = 1;

  Rational value() const { return Rational(cost, covered); }
  double to_double() const { return static_cast<double>(cost) / covered; }
  friend bool operator==(const Density& a, const Density& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Density& a, const Density& b) {
    const __int128 lhs = static_cast<__int128>(a.cost) * b.covered;
    const __int128 rhs = static_cast<__int128>(b.cost) * a.covered;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// A chosen sub-collection together with what it fully covers.
struct SubCollection {
  std::vector<Index> chosen;   // sorted set indices
  std::vector<Index> covered;  // sorted fully covered elements
  Cost cost = 0;
  std::optional<Density> density;  // empty when nothing is covered
};

// Recomputes covered/cost/density of `chosen` against `inst`. Duplicate or
// unsorted indices are normalized; out-of-range indices raise InvalidInstance.
SubCollection coverage(const Instance& inst, std::vector<Index> chosen);

// |{e : degree(e) >= r_e}|. PSMC is feasible iff this is >= target().
Index feasibility_check(const Instance& inst);

// State of the instance after a partial selection F ("reduced instance").
// Sets in F stay in `chosen` and are never counted twice.
struct ResidualState {
  std::shared_ptr<const Instance> base;
  std::vector<Index> residual_reqs;      // max(0, r_e - |F_e|)
  std::vector<Index> already_covered;    // sorted
  std::vector<Index> chosen;             // sorted sets of F
  Index remaining_target = 0;            // max(0, ceil(qn) - |C(F)|)
  Rational q_prime;                      // remaining_target / n

  static ResidualState initial(std::shared_ptr<const Instance> base);
};

// Adds `picked` to F. Residual requirements drop by one per newly chosen set
// containing a not yet covered element; elements reaching zero become covered.
ResidualState residual_update(const ResidualState& state, const SubCollection& picked);

// The reduced instance handed to an MDSC subroutine: uncovered elements whose
// residual requirement can still be met by unchosen sets, and the unchosen sets
// restricted to them (sets left empty are dropped). Maps translate back.
struct ReducedInstance {
  std::shared_ptr<const Instance> instance;  // null when no element remains
  std::vector<Index> element_map;            // reduced element -> base element
  std::vector<Index> set_map;                // reduced set -> base set
};

ReducedInstance reduce(const ResidualState& state);

}  // namespace psmc
