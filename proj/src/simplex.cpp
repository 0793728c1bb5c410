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

#include "psmc/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "psmc/errors.hpp"

namespace psmc::lp {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& program, const SimplexOptions& options)
      : options_(options), num_rows_(static_cast<Index>(program.rows.size())) {
    const Index nv = program.num_vars();
    // Column layout: structural variables, then per row a slack/surplus
    // column (not for equalities) and an artificial column (not for <=).
    num_cols_ = nv;
    slack_col_.assign(num_rows_, -1);
    identity_col_.assign(num_rows_, -1);
    flipped_.assign(num_rows_, false);
    for (Index i = 0; i < num_rows_; ++i) {
      Sense sense = program.rows[i].sense;
      if (program.rows[i].rhs < 0) {
        flipped_[i] = true;
        if (sense == Sense::kLessEq) {
          sense = Sense::kGreaterEq;
        } else if (sense == Sense::kGreaterEq) {
          sense = Sense::kLessEq;
        }
      }
      senses_.push_back(sense);
      if (sense != Sense::kEqual) slack_col_[i] = num_cols_++;
    }
    for (Index i = 0; i < num_rows_; ++i) {
      if (senses_[i] == Sense::kLessEq) {
        identity_col_[i] = slack_col_[i];
      } else {
        identity_col_[i] = num_cols_++;
      }
    }
    artificial_.assign(num_cols_, false);
    for (Index i = 0; i < num_rows_; ++i) {
      if (senses_[i] != Sense::kLessEq) artificial_[identity_col_[i]] = true;
    }

    width_ = num_cols_ + 1;
    cells_.assign(static_cast<std::size_t>(num_rows_) * width_, 0.0);
    basis_.assign(num_rows_, -1);
    for (Index i = 0; i < num_rows_; ++i) {
      const double sign = flipped_[i] ? -1.0 : 1.0;
      for (const auto& [var, coef] : program.rows[i].terms) {
        if (var < 0 || var >= nv) throw std::invalid_argument("LP row references unknown variable");
        at(i, var) += sign * coef;
      }
      rhs(i) = sign * program.rows[i].rhs;
      if (senses_[i] == Sense::kGreaterEq) at(i, slack_col_[i]) = -1.0;
      if (senses_[i] == Sense::kLessEq) at(i, slack_col_[i]) = 1.0;
      at(i, identity_col_[i]) = 1.0;
      basis_[i] = identity_col_[i];
    }
    structural_ = nv;
  }

  LpResult run(const std::vector<double>& objective) {
    LpResult result;
    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1(num_cols_, 0.0);
    bool any_artificial = false;
    for (Index j = 0; j < num_cols_; ++j) {
      if (artificial_[j]) {
        phase1[j] = 1.0;
        any_artificial = true;
      }
    }
    if (any_artificial) {
      const bool bounded = iterate(phase1, /*allow_artificial=*/true);
      (void)bounded;  // phase 1 is bounded below by 0
      double infeasibility = 0.0;
      for (Index i = 0; i < num_rows_; ++i) {
        if (artificial_[basis_[i]]) infeasibility += rhs(i);
      }
      if (infeasibility > options_.feasibility_tol) {
        result.status = LpStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      drive_out_artificials();
    }

    std::vector<double> phase2(num_cols_, 0.0);
    for (Index j = 0; j < structural_; ++j) phase2[j] = objective[j];
    if (!iterate(phase2, /*allow_artificial=*/false)) {
      result.status = LpStatus::kUnbounded;
      result.pivots = pivots_;
      return result;
    }

    result.status = LpStatus::kOptimal;
    result.x.assign(structural_, 0.0);
    for (Index i = 0; i < num_rows_; ++i) {
      if (basis_[i] < structural_) result.x[basis_[i]] = std::max(0.0, rhs(i));
    }
    result.objective = 0.0;
    for (Index j = 0; j < structural_; ++j) result.objective += objective[j] * result.x[j];
    result.duals.assign(num_rows_, 0.0);
    for (Index r = 0; r < num_rows_; ++r) {
      double pi = 0.0;
      for (Index i = 0; i < num_rows_; ++i) pi += phase2[basis_[i]] * at(i, identity_col_[r]);
      result.duals[r] = flipped_[r] ? -pi : pi;
    }
    result.pivots = pivots_;
    return result;
  }

 private:
  double& at(Index i, Index j) { return cells_[static_cast<std::size_t>(i) * width_ + j]; }
  double at(Index i, Index j) const { return cells_[static_cast<std::size_t>(i) * width_ + j]; }
  double& rhs(Index i) { return at(i, num_cols_); }
  double rhs(Index i) const { return at(i, num_cols_); }

  void pivot(Index row, Index col) {
    if (++pivots_ > options_.max_pivots) {
      throw IterationLimit("simplex exceeded " + std::to_string(options_.max_pivots) + " pivots");
    }
    const double p = at(row, col);
    for (Index j = 0; j < width_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (Index i = 0; i < num_rows_; ++i) {
      if (i == row) continue;
      const double factor = at(i, col);
      if (factor == 0.0) continue;
      for (Index j = 0; j < width_; ++j) {
        double& v = at(i, j);
        v -= factor * at(row, j);
        if (std::fabs(v) < 1e-13) v = 0.0;
      }
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  // Bland's rule: lowest-index improving column, ratio ties to the lowest
  // basic index. Returns false on an unbounded ray.
  bool iterate(const std::vector<double>& cost, bool allow_artificial) {
    std::vector<double> reduced(num_cols_);
    while (true) {
      for (Index j = 0; j < num_cols_; ++j) {
        double d = cost[j];
        for (Index i = 0; i < num_rows_; ++i) d -= cost[basis_[i]] * at(i, j);
        reduced[j] = d;
      }
      Index entering = -1;
      for (Index j = 0; j < num_cols_; ++j) {
        if (!allow_artificial && artificial_[j]) continue;
        if (reduced[j] < -options_.reduced_cost_tol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Index leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < num_rows_; ++i) {
        const double a = at(i, entering);
        if (a <= options_.pivot_tol) continue;
        const double ratio = std::max(0.0, rhs(i)) / a;
        if (leaving < 0 || ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          leaving = i;
        } else if (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leaving]) {
          leaving = i;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void drive_out_artificials() {
    for (Index i = 0; i < num_rows_; ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (Index j = 0; j < num_cols_; ++j) {
        if (artificial_[j]) continue;
        if (std::fabs(at(i, j)) > options_.pivot_tol) {
          pivot(i, j);
          break;
        }
      }
      // A row with no usable entry is redundant; its artificial stays at 0.
    }
  }

  const SimplexOptions& options_;
  Index num_rows_;
  Index num_cols_ = 0;
  Index structural_ = 0;
  Index width_ = 0;
  int pivots_ = 0;
  std::vector<Sense> senses_;
  std::vector<Index> slack_col_;
  std::vector<Index> identity_col_;
  std::vector<bool> flipped_;
  std::vector<bool> artificial_;
  std::vector<Index> basis_;
  std::vector<double> cells_;
};

}  // namespace

LpResult solve(const LinearProgram& program, const SimplexOptions& options) {
  Tableau tableau(program, options);
  return tableau.run(program.objective);
}

}  // namespace psmc::lp
