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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psmc/instance.hpp"
#include "psmc/mdsc_approx.hpp"
#include "psmc/oracles.hpp"

namespace psmc {

// Anything that returns a low-density sub-collection of an instance. It is
// called on reduced instances, so its indices are local to its argument.
using MdscSolver = std::function<SubCollection(const Instance&)>;

MdscSolver exact_mdsc_solver(OracleLimits limits = {});
MdscSolver approx_mdsc_solver(MdscApproxOptions options = {});

struct GreedyIteration {
  SubCollection picked;       // base set indices; covered = newly fully covered elements
  Index remaining_before = 0;  // n_{i-1}
  Index remaining_after = 0;   // n_i, clamped at 0
  std::optional<Rational> bound_rhs;  // alpha * opt / n_{i-1}
};

struct GreedyTrace {
  std::vector<GreedyIteration> iterations;
  Rational epsilon;
  Rational q;
  Index n = 0;
  Index target = 0;  // n_0 = ceil(q n)
  Index goal = 0;    // ceil((1 - eps) q n)
  Index final_coverage = 0;
  Cost total_cost = 0;

  Index t() const { return static_cast<Index>(iterations.size()); }
};

struct BoundHint {
  Cost opt = 0;
  Rational alpha = Rational(1);
};

struct GreedyResult {
  SubCollection solution;
  GreedyTrace trace;
};

// Picks MDSC solutions on the reduced instance until ceil((1 - eps) q n)
// elements are fully covered (the integer form of q' > eps q).
// Throws Infeasible when the goal is out of reach, SolverStalled when `mdsc`
// returns a pick that covers nothing new.
GreedyResult greedy_solve(const Instance& inst, const Rational& epsilon, const MdscSolver& mdsc,
                          std::optional<BoundHint> hint = std::nullopt);

struct BoundCheck {
  std::string name;
  bool ok = true;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

struct BicriteriaReport {
  std::vector<BoundCheck> checks;
  Cost opt = 0;
  Rational alpha = Rational(1);

  bool ok() const;
  // Throws BoundViolation naming the first failed check.
  void throw_if_failed() const;
};

// Checks on a finished trace, with opt the exact PSMC optimum:
//   coverage        final coverage >= ceil((1 - eps) q n)
//   loop            n_{t-1} > eps * n_0
//   per_iteration   c(R_i) / (n_{i-1} - n_i) <= alpha opt / n_{i-1}, i < t
//   prefix          sum_{i<t} c(R_i) <= alpha ln(1/eps) opt
//   last            c(R_t) <= alpha (1 + (1-q)/(eps q)) opt
//   total           c(F) <= alpha (1 + ln(1/eps) + (1-q)/(eps q)) opt
BicriteriaReport verify_bicriteria(const GreedyTrace& trace, Cost opt,
                                   const Rational& alpha = Rational(1));

// 1 + ln(1/eps) + (1 - q)/(eps q).
double bicriteria_factor(const Rational& q, const Rational& epsilon);

}  // namespace psmc
