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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "psmc/errors.hpp"
#include "psmc/generators.hpp"
#include "psmc/greedy.hpp"
#include "psmc/oracles.hpp"

using namespace psmc;

namespace {

double full_factor(const Rational& q, const Rational& eps) {
  const double qd = q.to_double();
  const double ed = eps.to_double();
  return 1.0 + std::log(1.0 / ed) + (1.0 - qd) / (ed * qd);
}

// Lowest cost / newly-covered over subsets of the sets not yet chosen, where an
// uncovered element counts once the chosen and new sets together reach r_e.
double brute_step_density(const Instance& inst, const std::set<Index>& chosen) {
  const Index m = inst.num_sets();
  std::vector<Index> hits(inst.num_elements(), 0);
  for (Index s : chosen) {
    for (Index e : inst.set(s)) ++hits[e];
  }
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool clash = false;
    Cost cost = 0;
    std::vector<Index> extra(inst.num_elements(), 0);
    for (Index s = 0; s < m; ++s) {
      if (!(mask >> s & 1u)) continue;
      if (chosen.count(s)) clash = true;
      cost += inst.cost(s);
      for (Index e : inst.set(s)) ++extra[e];
    }
    if (clash) continue;
    Index fresh = 0;
    for (Index e = 0; e < inst.num_elements(); ++e) {
      if (hits[e] < inst.req(e) && hits[e] + extra[e] >= inst.req(e)) ++fresh;
    }
    if (fresh > 0) best = std::min(best, static_cast<double>(cost) / fresh);
  }
  return best;
}

}  // namespace

TEST_CASE("three-element example finishes in one iteration") {
  const auto inst = gen_appendix_flaw();
  const auto res = greedy_solve(inst, Rational(1, 10), exact_mdsc_solver());
  CHECK(res.trace.t() == 1);
  CHECK(res.solution.cost == 3);
  CHECK(res.solution.covered.size() == 3);
  const auto opt = exact_psmc(inst);
  CHECK(opt.cost == 3);
  const auto report = verify_bicriteria(res.trace, opt.cost);
  CHECK(report.ok());
  for (const auto& c : report.checks) CHECK_MESSAGE(c.ok, c.name);
}

TEST_CASE("random seed 1 meets coverage and the cost factor") {
  const auto inst = gen_random(1, RandomParams{8, 6, 2, Rational(3, 4), 10});
  const Rational eps(1, 4);
  const auto res = greedy_solve(inst, eps, exact_mdsc_solver());
  CHECK(res.solution.covered.size() >= 5);
  const auto opt = exact_psmc(inst);
  CHECK(static_cast<double>(res.solution.cost) <=
        full_factor(inst.q(), eps) * static_cast<double>(opt.cost) + 1e-9);
  CHECK(verify_bicriteria(res.trace, opt.cost).ok());
}

TEST_CASE("greedy bounds hold across random instances") {
  int runs = 0;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    RandomParams p;
    p.n = 4 + static_cast<Index>(seed % 7);
    p.m = 3 + static_cast<Index>((seed / 7) % 5);
    p.r_max = 1 + static_cast<Index>(seed % 3);
    p.q = seed % 2 == 0 ? Rational(1, 2) : Rational(3, 4);
    const auto inst = gen_random(seed, p);
    Cost opt = 0;
    try {
      opt = exact_psmc(inst).cost;
    } catch (const Infeasible&) {
      continue;
    }
    for (const Rational eps : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
      CAPTURE(seed);
      CAPTURE(eps.str());
      const auto res = greedy_solve(inst, eps, exact_mdsc_solver(), BoundHint{opt});
      const auto report = verify_bicriteria(res.trace, opt);
      for (const auto& c : report.checks) CHECK_MESSAGE(c.ok, c.name);
      CHECK(static_cast<double>(res.solution.cost) <=
            full_factor(inst.q(), eps) * static_cast<double>(opt) + 1e-9);
      ++runs;
    }
  }
  CHECK(runs >= 600);
}

TEST_CASE("trace invariants") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto inst = gen_random(seed, RandomParams{7, 6, 2, Rational(3, 4), 10});
    if (feasibility_check(inst) < inst.target()) continue;
    const auto res = greedy_solve(inst, Rational(1, 4), exact_mdsc_solver());
    const auto& tr = res.trace;
    CAPTURE(seed);
    CHECK(tr.t() <= inst.target());
    CHECK(tr.target == inst.target());
    Cost total = 0;
    std::set<Index> chosen;
    Index covered = 0;
    Index before = tr.target;
    for (const auto& it : tr.iterations) {
      CHECK(it.remaining_before == before);
      CHECK(it.remaining_after < it.remaining_before);
      before = it.remaining_after;
      CHECK(it.picked.density.has_value());
      // Every step is an exact minimum-density pick on what is left.
      const double step = static_cast<double>(it.picked.cost) /
                          static_cast<double>(it.picked.covered.size());
      CHECK(step == doctest::Approx(brute_step_density(inst, chosen)));
      for (Index s : it.picked.chosen) CHECK(chosen.insert(s).second);
      total += it.picked.cost;
      covered += static_cast<Index>(it.picked.covered.size());
    }
    CHECK(total == tr.total_cost);
    CHECK(total == res.solution.cost);
    CHECK(covered == tr.final_coverage);
    CHECK(static_cast<Index>(res.solution.covered.size()) == tr.final_coverage);
    CHECK(tr.final_coverage >= tr.goal);
  }
}

TEST_CASE("a single iteration leaves the per-iteration and prefix checks vacuous") {
  const auto inst = gen_example1(100);
  const auto res = greedy_solve(inst, Rational(1, 2), exact_mdsc_solver());
  REQUIRE(res.trace.t() == 1);
  const auto report = verify_bicriteria(res.trace, exact_psmc(inst).cost);
  CHECK(report.ok());
  for (const auto& c : report.checks) {
    if (c.name == "prefix") CHECK(c.lhs == 0.0);
    CHECK(c.name != "per_iteration");
  }
}

TEST_CASE("bound checks fail when opt is understated") {
  const auto inst = gen_random(3, RandomParams{8, 6, 2, Rational(3, 4), 10});
  const auto res = greedy_solve(inst, Rational(1, 4), exact_mdsc_solver());
  const auto report = verify_bicriteria(res.trace, 0);
  CHECK_FALSE(report.ok());
  CHECK_THROWS_AS(report.throw_if_failed(), BoundViolation);
}

TEST_CASE("approximate MDSC inside the greedy still reaches the goal") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = gen_random(seed, RandomParams{8, 6, 2, Rational(3, 4), 10});
    if (feasibility_check(inst) < inst.target()) continue;
    const auto res = greedy_solve(inst, Rational(1, 4), approx_mdsc_solver());
    CHECK(res.trace.final_coverage >= res.trace.goal);
  }
}

TEST_CASE("greedy errors") {
  const auto inst = gen_appendix_flaw();
  CHECK_THROWS_AS(greedy_solve(inst, Rational(0), exact_mdsc_solver()), std::invalid_argument);
  CHECK_THROWS_AS(greedy_solve(inst, Rational(1), exact_mdsc_solver()), std::invalid_argument);
  const MdscSolver lazy = [](const Instance&) { return SubCollection{}; };
  CHECK_THROWS_AS(greedy_solve(inst, Rational(1, 10), lazy), SolverStalled);
  const Instance stuck(2, {{0}, {1}}, {1, 1}, {2, 1});
  CHECK_THROWS_AS(greedy_solve(stuck, Rational(1, 10), exact_mdsc_solver()), Infeasible);
}

TEST_CASE("factor formula") {
  CHECK(bicriteria_factor(Rational(1), Rational(1, 2)) == doctest::Approx(1.0 + std::log(2.0)));
  CHECK(bicriteria_factor(Rational(1, 2), Rational(1, 4)) ==
        doctest::Approx(full_factor(Rational(1, 2), Rational(1, 4))));
}
