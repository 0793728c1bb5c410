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

#include <iosfwd>
#include <string>
#include <vector>

#include "psmc/instance.hpp"
#include "psmc/simplex.hpp"

namespace psmc::lp {

inline constexpr double kFeasibilityTol = 1e-7;
inline constexpr double kObjectiveTol = 1e-6;

// r_e distinct sets that all contain `element`. The same family of sets under
// two different elements is two different columns.
struct CoverSetColumn {
  Index element = 0;
  std::vector<Index> sets;  // sorted, size r_e

  friend bool operator==(const CoverSetColumn&, const CoverSetColumn&) = default;
  friend auto operator<=>(const CoverSetColumn&, const CoverSetColumn&) = default;
};

struct FractionalSolution {
  std::vector<double> x;                // per set
  std::vector<double> y;                // per element
  std::vector<CoverSetColumn> columns;  // generated pool (empty for the natural LP)
  std::vector<double> l;                // per column
  double objective = 0.0;
};

// Multipliers of the cover-set LP:
//   a   for  sum_e y_e = 1,
//   f_e for  sum_{Q in pool_e} l_Q >= y_e,
//   d   for  x_S >= sum_{Q in pool_e, S in Q} l_Q,  stored as d[e][S] (0 when e not in S).
struct DualValues {
  double a = 0.0;
  std::vector<double> f;
  std::vector<std::vector<double>> d;
  std::vector<bool> has_y;  // false for elements that no cover-set can serve
};

struct ColumnGenerationRound {
  int iteration = 0;
  double objective = 0.0;
  std::size_t pool_size = 0;
  std::size_t added = 0;
};

struct Lp1Result {
  FractionalSolution solution;
  DualValues duals;
  std::vector<ColumnGenerationRound> trace;
};

struct Lp1Options {
  // Cap on pricing rounds; 0 means 10 * m * n.
  int max_rounds = 0;
  double tol = kFeasibilityTol;
};

// min sum c_S x_S  s.t.  sum_e y_e = 1,  sum_{S ni e} x_S >= r_e y_e,  0 <= x, y <= 1.
FractionalSolution solve_natural_lp(const Instance& inst);

// The cover-set LP solved by column generation over a restricted master that
// is seeded with, for every coverable e, the r_e cheapest sets containing e.
// Elements with degree < r_e get no y variable.
Lp1Result solve_lp1(const Instance& inst, const Lp1Options& options = {});

// For every e with a y variable: the r_e sets containing e with the smallest
// d[e][S] (ties to the lower index). Returned when their d-sum is < f_e - tol,
// ascending by element. Empty output certifies the cover-set dual constraints.
std::vector<CoverSetColumn> price_columns(const Instance& inst, const DualValues& duals,
                                          double tol = kFeasibilityTol);

// Every r_e-subset of the sets containing e (the family Omega_e), in
// lexicographic order. Exponential; for small instances only.
std::vector<CoverSetColumn> enumerate_cover_sets(const Instance& inst, Index element);

// g(e, Q) = sum_{S in Q} d[e][S].
double cover_set_weight(const DualValues& duals, const CoverSetColumn& column);

struct DualCheck {
  bool ok = true;
  double max_violation = 0.0;
  std::string first_failure;
};

// Checks every dual constraint family within tol, plus strong duality
// a == objective within kObjectiveTol.
DualCheck check_dual_certificate(const Instance& inst, const DualValues& duals, double objective,
                                 double tol = kFeasibilityTol);

// Checks the primal constraints of the cover-set LP for `sol` within tol.
DualCheck check_lp1_primal(const Instance& inst, const FractionalSolution& sol,
                           double tol = kFeasibilityTol);

// iteration,objective,pool_size,added
void write_trace_csv(std::ostream& os, const std::vector<ColumnGenerationRound>& trace);

}  // namespace psmc::lp
