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

#include <span>

#include "psmc/instance.hpp"

namespace psmc {

// Caps for exhaustive enumeration.
struct OracleLimits {
  Index max_sets = 20;
  double time_budget_seconds = 60.0;
  // Stop enumerating popcount layers once the k cheapest sets alone are
  // worse than the incumbent. Turning it off must not change any answer.
  bool prune = true;
};

// Brute-force ground truth. Sub-collections are enumerated by popcount, then
// lexicographically by index list; the first optimum met in that order wins,
// so all answers are deterministic.

// Minimum density over every nonempty sub-collection that fully covers at
// least one element.
SubCollection exact_mdsc(const Instance& inst, const OracleLimits& limits = {});

// Minimum cost sub-collection fully covering >= inst.target() elements.
SubCollection exact_psmc(const Instance& inst, const OracleLimits& limits = {});

// Same with an explicit coverage count; target 0 yields the empty selection.
SubCollection exact_partial_cover(const Instance& inst, Index target,
                                  const OracleLimits& limits = {});

// Minimum cost sub-collection fully covering every element of `targets`.
SubCollection exact_multicover(const Instance& inst, std::span<const Index> targets,
                               const OracleLimits& limits = {});

}  // namespace psmc
