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

#include <utility>
#include <vector>

#include "psmc/instance.hpp"

namespace psmc::lp {

enum class Sense { kLessEq, kEqual, kGreaterEq };

// min c^T x  s.t.  rows,  x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<Index, double>> terms;
    Sense sense = Sense::kGreaterEq;
    double rhs = 0.0;
  };

  std::vector<double> objective;
  std::vector<Row> rows;

  Index num_vars() const { return static_cast<Index>(objective.size()); }
  Index add_var(double cost) {
    objective.push_back(cost);
    return num_vars() - 1;
  }
  Index add_row(std::vector<std::pair<Index, double>> terms, Sense sense, double rhs) {
    rows.push_back(Row{std::move(terms), sense, rhs});
    return static_cast<Index>(rows.size()) - 1;
  }
};

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double reduced_cost_tol = 1e-9;
  double pivot_tol = 1e-9;
  int max_pivots = 200'000;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  // One multiplier per row, signed so that c - A^T duals >= 0 at optimality:
  // >= rows get nonnegative duals, <= rows nonpositive ones.
  std::vector<double> duals;
  int pivots = 0;
};

// Two-phase dense tableau simplex with Bland's rule. Throws IterationLimit
// when max_pivots is reached.
LpResult solve(const LinearProgram& program, const SimplexOptions& options = {});

}  // namespace psmc::lp
