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

#include "psmc/greedy.hpp"

#include <algorithm>
#include <cmath>

#include "psmc/errors.hpp"

namespace psmc {

MdscSolver exact_mdsc_solver(OracleLimits limits) {
  return [limits](const Instance& inst) { return exact_mdsc(inst, limits); };
}

MdscSolver approx_mdsc_solver(MdscApproxOptions options) {
  return [options](const Instance& inst) { return mdsc_approx_solve(inst, options).output; };
}

GreedyResult greedy_solve(const Instance& inst, const Rational& epsilon, const MdscSolver& mdsc,
                          std::optional<BoundHint> hint) {
  if (!(epsilon > Rational(0)) || !(epsilon < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " + epsilon.str());
  }
  GreedyResult result;
  GreedyTrace& trace = result.trace;
  trace.epsilon = epsilon;
  trace.q = inst.q();
  trace.n = inst.num_elements();
  trace.target = inst.target();
  trace.goal =
      static_cast<Index>(((Rational(1) - epsilon) * inst.q() * Rational(inst.num_elements())).ceil());
  if (feasibility_check(inst) < trace.goal) {
    throw Infeasible("at most " + std::to_string(feasibility_check(inst)) +
                     " elements can be fully covered, " + std::to_string(trace.goal) + " required");
  }

  // Non-owning handle: the residual state never outlives this call.
  const std::shared_ptr<const Instance> base(std::shared_ptr<const Instance>{}, &inst);
  ResidualState state = ResidualState::initial(base);
  while (static_cast<Index>(state.already_covered.size()) < trace.goal) {
    const ReducedInstance reduced = reduce(state);
    if (!reduced.instance) throw Infeasible("no remaining element can be fully covered");
    const SubCollection local = mdsc(*reduced.instance);
    std::vector<Index> picked_sets;
    picked_sets.reserve(local.chosen.size());
    for (Index s : local.chosen) picked_sets.push_back(reduced.set_map.at(s));
    std::sort(picked_sets.begin(), picked_sets.end());

    SubCollection step;
    step.chosen = picked_sets;
    for (Index s : step.chosen) step.cost += inst.cost(s);
    ResidualState next = residual_update(state, step);
    std::set_difference(next.already_covered.begin(), next.already_covered.end(),
                        state.already_covered.begin(), state.already_covered.end(),
                        std::back_inserter(step.covered));
    if (step.covered.empty()) {
      throw SolverStalled("MDSC pick {" + std::to_string(step.chosen.size()) +
                          " sets} fully covers no new element");
    }
    step.density = Density{step.cost, static_cast<Index>(step.covered.size())};

    GreedyIteration it;
    it.remaining_before = state.remaining_target;
    it.remaining_after = next.remaining_target;
    if (hint && it.remaining_before > 0) {
      it.bound_rhs = hint->alpha * Rational(hint->opt) / Rational(it.remaining_before);
    }
    trace.total_cost += step.cost;
    it.picked = std::move(step);
    trace.iterations.push_back(std::move(it));
    state = std::move(next);
  }

  result.solution = coverage(inst, state.chosen);
  trace.final_coverage = static_cast<Index>(result.solution.covered.size());
  return result;
}

double bicriteria_factor(const Rational& q, const Rational& epsilon) {
  return 1.0 + std::log(1.0 / epsilon.to_double()) +
         ((Rational(1) - q) / (epsilon * q)).to_double();
}

bool BicriteriaReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

void BicriteriaReport::throw_if_failed() const {
  for (const auto& c : checks) {
    if (!c.ok) {
      throw BoundViolation("bound '" + c.name + "' violated: " + std::to_string(c.lhs) + " > " +
                           std::to_string(c.rhs) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
}

BicriteriaReport verify_bicriteria(const GreedyTrace& trace, Cost opt, const Rational& alpha) {
  BicriteriaReport report;
  report.opt = opt;
  report.alpha = alpha;
  const auto add_exact = [&](std::string name, const Rational& lhs, const Rational& rhs,
                             std::string detail = {}) {
    report.checks.push_back(
        {std::move(name), lhs <= rhs, lhs.to_double(), rhs.to_double(), std::move(detail)});
  };
  // ln() bounds compare in floating point with a relative slack of 1e-9.
  const auto add_float = [&](std::string name, double lhs, double rhs) {
    const bool ok = lhs <= rhs + 1e-9 * std::max(1.0, std::fabs(rhs));
    report.checks.push_back({std::move(name), ok, lhs, rhs, {}});
  };

  const Rational& eps = trace.epsilon;
  const Rational& q = trace.q;
  const Rational opt_r(opt);
  const Index t = trace.t();

  add_exact("coverage", Rational(trace.goal), Rational(trace.final_coverage));
  if (t == 0) return report;

  // Strict inequality n_{t-1} > eps * n_0.
  const Index n_last = trace.iterations.back().remaining_before;
  {
    const Rational lhs = eps * Rational(trace.target);
    report.checks.push_back({"loop", lhs < Rational(n_last), lhs.to_double(),
                             static_cast<double>(n_last), "eps*n_0 < n_{t-1}"});
  }

  Cost prefix = 0;
  for (Index i = 0; i + 1 < t; ++i) {
    const auto& it = trace.iterations[i];
    const Index gained = it.remaining_before - it.remaining_after;
    const Rational lhs(it.picked.cost, gained);
    const Rational rhs = alpha * opt_r / Rational(it.remaining_before);
    add_exact("per_iteration", lhs, rhs, "i=" + std::to_string(i + 1));
    prefix += it.picked.cost;
  }
  const double ln_inv_eps = std::log(1.0 / eps.to_double());
  add_float("prefix", static_cast<double>(prefix), alpha.to_double() * ln_inv_eps * opt);

  const Rational last_factor = Rational(1) + (Rational(1) - q) / (eps * q);
  add_exact("last", Rational(trace.iterations.back().picked.cost), alpha * last_factor * opt_r);
  add_float("total", static_cast<double>(trace.total_cost),
            alpha.to_double() * bicriteria_factor(q, eps) * opt);
  return report;
}

}  // namespace psmc
