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

#include "psmc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "psmc/errors.hpp"

namespace psmc::lp {

namespace {

std::vector<Index> cheapest_sets(std::span<const Index> containing, Index r,
                                 const auto& weight_of) {
  std::vector<Index> sets(containing.begin(), containing.end());
  std::stable_sort(sets.begin(), sets.end(), [&](Index a, Index b) {
    const auto wa = weight_of(a);
    const auto wb = weight_of(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  sets.resize(r);
  std::sort(sets.begin(), sets.end());
  return sets;
}

void note_failure(DualCheck& check, double violation, const std::string& what) {
  if (violation <= check.max_violation) return;
  check.max_violation = violation;
  if (check.ok) check.first_failure = what;
  check.ok = false;
}

}  // namespace

FractionalSolution solve_natural_lp(const Instance& inst) {
  const Index n = inst.num_elements();
  const Index m = inst.num_sets();
  bool any_support = false;
  for (Index e = 0; e < n; ++e) any_support = any_support || inst.degree(e) >= 1;
  if (!any_support) throw Infeasible("no element belongs to any set");

  LinearProgram program;
  for (Index s = 0; s < m; ++s) program.add_var(static_cast<double>(inst.cost(s)));
  for (Index e = 0; e < n; ++e) program.add_var(0.0);
  const auto y_var = [m](Index e) { return m + e; };

  std::vector<std::pair<Index, double>> sum_y;
  for (Index e = 0; e < n; ++e) sum_y.emplace_back(y_var(e), 1.0);
  program.add_row(std::move(sum_y), Sense::kEqual, 1.0);
  for (Index e = 0; e < n; ++e) {
    std::vector<std::pair<Index, double>> terms;
    for (Index s : inst.sets_containing(e)) terms.emplace_back(s, 1.0);
    terms.emplace_back(y_var(e), -static_cast<double>(inst.req(e)));
    program.add_row(std::move(terms), Sense::kGreaterEq, 0.0);
  }
  for (Index v = 0; v < m + n; ++v) program.add_row({{v, 1.0}}, Sense::kLessEq, 1.0);

  const LpResult res = solve(program);
  if (res.status != LpStatus::kOptimal) throw Infeasible("natural LP has no optimum");
  FractionalSolution sol;
  sol.x.assign(res.x.begin(), res.x.begin() + m);
  sol.y.assign(res.x.begin() + m, res.x.end());
  sol.objective = res.objective;
  return sol;
}

Lp1Result solve_lp1(const Instance& inst, const Lp1Options& options) {
  const Index n = inst.num_elements();
  const Index m = inst.num_sets();
  std::vector<Index> y_elements;
  for (Index e = 0; e < n; ++e) {
    if (inst.coverable(e)) y_elements.push_back(e);
  }
  if (y_elements.empty()) throw Infeasible("no element can be fully covered");

  std::vector<CoverSetColumn> pool;
  std::set<CoverSetColumn> in_pool;
  for (Index e : y_elements) {
    CoverSetColumn col{e, cheapest_sets(inst.sets_containing(e), inst.req(e),
                                        [&](Index s) { return inst.cost(s); })};
    in_pool.insert(col);
    pool.push_back(std::move(col));
  }

  const int max_rounds = options.max_rounds > 0 ? options.max_rounds : std::max(1, 10 * m * n);
  Lp1Result out;
  for (int round = 1;; ++round) {
    if (round > max_rounds) {
      throw IterationLimit("column generation exceeded " + std::to_string(max_rounds) +
                           " pricing rounds");
    }
    // Restricted master over the current pool.
    LinearProgram program;
    for (Index s = 0; s < m; ++s) program.add_var(static_cast<double>(inst.cost(s)));
    std::vector<Index> y_var(n, -1);
    for (Index e : y_elements) y_var[e] = program.add_var(0.0);
    std::vector<std::vector<Index>> pool_of(n);
    std::vector<Index> l_var(pool.size());
    for (std::size_t q = 0; q < pool.size(); ++q) {
      l_var[q] = program.add_var(0.0);
      pool_of[pool[q].element].push_back(static_cast<Index>(q));
    }

    std::vector<std::pair<Index, double>> sum_y;
    for (Index e : y_elements) sum_y.emplace_back(y_var[e], 1.0);
    const Index row_sum = program.add_row(std::move(sum_y), Sense::kEqual, 1.0);
    std::vector<Index> row_f(n, -1);
    for (Index e : y_elements) {
      std::vector<std::pair<Index, double>> terms;
      for (Index q : pool_of[e]) terms.emplace_back(l_var[q], 1.0);
      terms.emplace_back(y_var[e], -1.0);
      row_f[e] = program.add_row(std::move(terms), Sense::kGreaterEq, 0.0);
    }
    std::vector<std::vector<std::pair<Index, Index>>> row_d(n);  // (set, row)
    for (Index e : y_elements) {
      for (Index s : inst.sets_containing(e)) {
        std::vector<std::pair<Index, double>> terms{{s, 1.0}};
        for (Index q : pool_of[e]) {
          const auto& sets = pool[q].sets;
          if (std::binary_search(sets.begin(), sets.end(), s)) terms.emplace_back(l_var[q], -1.0);
        }
        row_d[e].emplace_back(s, program.add_row(std::move(terms), Sense::kGreaterEq, 0.0));
      }
    }

    const LpResult res = solve(program);
    if (res.status != LpStatus::kOptimal) {
      throw Infeasible("restricted master has no optimum");
    }

    FractionalSolution& sol = out.solution;
    sol.x.assign(res.x.begin(), res.x.begin() + m);
    sol.y.assign(n, 0.0);
    for (Index e : y_elements) sol.y[e] = res.x[y_var[e]];
    sol.columns = pool;
    sol.l.resize(pool.size());
    for (std::size_t q = 0; q < pool.size(); ++q) sol.l[q] = res.x[l_var[q]];
    sol.objective = res.objective;

    DualValues& duals = out.duals;
    duals.a = res.duals[row_sum];
    duals.f.assign(n, 0.0);
    duals.d.assign(n, std::vector<double>(m, 0.0));
    duals.has_y.assign(n, false);
    for (Index e : y_elements) {
      duals.has_y[e] = true;
      duals.f[e] = res.duals[row_f[e]];
      for (const auto& [s, row] : row_d[e]) duals.d[e][s] = res.duals[row];
    }

    std::size_t added = 0;
    for (auto& col : price_columns(inst, duals, options.tol)) {
      if (in_pool.insert(col).second) {
        pool.push_back(std::move(col));
        ++added;
      }
    }
    out.trace.push_back({round, sol.objective, pool.size(), added});
    // Violations that are already pooled are simplex round-off.
    if (added == 0) break;
  }
  return out;
}

std::vector<CoverSetColumn> price_columns(const Instance& inst, const DualValues& duals,
                                          double tol) {
  std::vector<CoverSetColumn> out;
  for (Index e = 0; e < inst.num_elements(); ++e) {
    if (!duals.has_y[e] || !inst.coverable(e)) continue;
    CoverSetColumn col{e, cheapest_sets(inst.sets_containing(e), inst.req(e),
                                        [&](Index s) { return duals.d[e][s]; })};
    if (cover_set_weight(duals, col) < duals.f[e] - tol) out.push_back(std::move(col));
  }
  return out;
}

std::vector<CoverSetColumn> enumerate_cover_sets(const Instance& inst, Index element) {
  const auto containing = inst.sets_containing(element);
  const Index k = inst.req(element);
  const Index d = static_cast<Index>(containing.size());
  std::vector<CoverSetColumn> out;
  if (k > d) return out;
  std::vector<Index> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    CoverSetColumn col{element, {}};
    for (Index i : idx) col.sets.push_back(containing[i]);
    out.push_back(std::move(col));
    Index i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double cover_set_weight(const DualValues& duals, const CoverSetColumn& column) {
  double g = 0.0;
  for (Index s : column.sets) g += duals.d[column.element][s];
  return g;
}

DualCheck check_dual_certificate(const Instance& inst, const DualValues& duals, double objective,
                                 double tol) {
  DualCheck check;
  const Index n = inst.num_elements();
  for (Index e = 0; e < n; ++e) {
    if (!duals.has_y[e]) continue;
    if (duals.f[e] < -tol) note_failure(check, -duals.f[e], "f_e < 0 at e=" + std::to_string(e));
    if (duals.a > duals.f[e] + tol) {
      note_failure(check, duals.a - duals.f[e], "a > f_e at e=" + std::to_string(e));
    }
    for (Index s : inst.sets_containing(e)) {
      if (duals.d[e][s] < -tol) {
        note_failure(check, -duals.d[e][s], "d < 0 at (e,S)=(" + std::to_string(e) + "," +
                                                std::to_string(s) + ")");
      }
    }
  }
  for (Index s = 0; s < inst.num_sets(); ++s) {
    double load = 0.0;
    for (Index e : inst.set(s)) {
      if (!duals.has_y[e]) continue;
      load += duals.d[e][s];
      if (duals.d[e][s] > inst.cost(s) + tol) {
        note_failure(check, duals.d[e][s] - inst.cost(s), "d_{S_e} > c_S at S=" + std::to_string(s));
      }
    }
    if (load > inst.cost(s) + tol) {
      note_failure(check, load - inst.cost(s), "sum_e d_{S_e} > c_S at S=" + std::to_string(s));
    }
  }
  for (const auto& col : price_columns(inst, duals, tol)) {
    note_failure(check, duals.f[col.element] - cover_set_weight(duals, col),
                 "g(e, Q_min) < f_e at e=" + std::to_string(col.element));
  }
  const double gap = std::fabs(duals.a - objective);
  if (gap > kObjectiveTol * std::max(1.0, std::fabs(objective))) {
    note_failure(check, gap, "duality gap " + std::to_string(gap));
  }
  return check;
}

DualCheck check_lp1_primal(const Instance& inst, const FractionalSolution& sol, double tol) {
  DualCheck check;
  const Index n = inst.num_elements();
  const double total_y = std::accumulate(sol.y.begin(), sol.y.end(), 0.0);
  if (std::fabs(total_y - 1.0) > tol) note_failure(check, std::fabs(total_y - 1.0), "sum y != 1");
  for (double v : sol.x) if (v < -tol) note_failure(check, -v, "x < 0");
  for (double v : sol.y) if (v < -tol) note_failure(check, -v, "y < 0");
  for (double v : sol.l) if (v < -tol) note_failure(check, -v, "l < 0");
  std::vector<double> served(n, 0.0);
  std::vector<std::vector<double>> load(n, std::vector<double>(inst.num_sets(), 0.0));
  for (std::size_t q = 0; q < sol.columns.size(); ++q) {
    const auto& col = sol.columns[q];
    served[col.element] += sol.l[q];
    for (Index s : col.sets) load[col.element][s] += sol.l[q];
  }
  for (Index e = 0; e < n; ++e) {
    if (served[e] < sol.y[e] - tol) {
      note_failure(check, sol.y[e] - served[e], "cover-set mass < y_e at e=" + std::to_string(e));
    }
    for (Index s = 0; s < inst.num_sets(); ++s) {
      if (sol.x[s] < load[e][s] - tol) {
        note_failure(check, load[e][s] - sol.x[s], "x_S < load at (e,S)=(" + std::to_string(e) +
                                                       "," + std::to_string(s) + ")");
      }
    }
  }
  return check;
}

void write_trace_csv(std::ostream& os, const std::vector<ColumnGenerationRound>& trace) {
  os << "iteration,objective,pool_size,added\n";
  for (const auto& r : trace) {
    std::ostringstream obj;
    obj.precision(12);
    obj << r.objective;
    os << r.iteration << ',' << obj.str() << ',' << r.pool_size << ',' << r.added << '\n';
  }
}

}  // namespace psmc::lp
