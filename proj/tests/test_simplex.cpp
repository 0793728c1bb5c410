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

#include <random>

#include "psmc/simplex.hpp"

using namespace psmc;
using namespace psmc::lp;

TEST_CASE("simplex on small programs") {
  SUBCASE("covering row") {
    LinearProgram p;
    p.add_var(1.0);
    p.add_var(2.0);
    p.add_row({{0, 1.0}, {1, 1.0}}, Sense::kGreaterEq, 1.0);
    const auto r = solve(p);
    REQUIRE(r.status == LpStatus::kOptimal);
    CHECK(r.objective == doctest::Approx(1.0));
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.duals[0] == doctest::Approx(1.0));
  }
  SUBCASE("negative right-hand side flips the row") {
    LinearProgram p;
    p.add_var(1.0);
    p.add_row({{0, -1.0}}, Sense::kLessEq, -2.0);
    const auto r = solve(p);
    REQUIRE(r.status == LpStatus::kOptimal);
    CHECK(r.objective == doctest::Approx(2.0));
    CHECK(r.duals[0] == doctest::Approx(-1.0));
  }
  SUBCASE("equality with a free-sign dual") {
    // min -x0 + x1, x0 + x1 = 1: x0 = 1, dual -1.
    LinearProgram p;
    p.add_var(-1.0);
    p.add_var(1.0);
    p.add_row({{0, 1.0}, {1, 1.0}}, Sense::kEqual, 1.0);
    const auto r = solve(p);
    CHECK(r.objective == doctest::Approx(-1.0));
    CHECK(r.duals[0] == doctest::Approx(-1.0));
  }
  SUBCASE("infeasible") {
    LinearProgram p;
    p.add_var(1.0);
    p.add_row({{0, 1.0}}, Sense::kLessEq, 1.0);
    p.add_row({{0, 1.0}}, Sense::kGreaterEq, 2.0);
    CHECK(solve(p).status == LpStatus::kInfeasible);
  }
  SUBCASE("unbounded") {
    LinearProgram p;
    p.add_var(-1.0);
    p.add_row({{0, 1.0}}, Sense::kGreaterEq, 1.0);
    CHECK(solve(p).status == LpStatus::kUnbounded);
  }
  SUBCASE("redundant equality rows") {
    LinearProgram p;
    p.add_var(1.0);
    p.add_var(1.0);
    p.add_row({{0, 1.0}, {1, 1.0}}, Sense::kEqual, 2.0);
    p.add_row({{0, 2.0}, {1, 2.0}}, Sense::kEqual, 4.0);
    const auto r = solve(p);
    REQUIRE(r.status == LpStatus::kOptimal);
    CHECK(r.objective == doctest::Approx(2.0));
  }
  SUBCASE("Beale's cycling example terminates under Bland's rule") {
    LinearProgram p;
    p.add_var(-0.75);
    p.add_var(20.0);
    p.add_var(-0.5);
    p.add_var(6.0);
    p.add_row({{0, 0.25}, {1, -8.0}, {2, -1.0}, {3, 9.0}}, Sense::kLessEq, 0.0);
    p.add_row({{0, 0.5}, {1, -12.0}, {2, -0.5}, {3, 3.0}}, Sense::kLessEq, 0.0);
    p.add_row({{2, 1.0}}, Sense::kLessEq, 1.0);
    const auto r = solve(p);
    REQUIRE(r.status == LpStatus::kOptimal);
    CHECK(r.objective == doctest::Approx(-1.25));
  }
}

TEST_CASE("random covering LPs satisfy strong duality and dual feasibility") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 2 + static_cast<int>(rng() % 6);
    const int nr = 1 + static_cast<int>(rng() % 6);
    LinearProgram p;
    for (int j = 0; j < nv; ++j) p.add_var(0.1 + unit(rng));
    std::vector<std::vector<double>> a(nr, std::vector<double>(nv, 0.0));
    std::vector<Sense> senses;
    for (int i = 0; i < nr; ++i) {
      std::vector<std::pair<Index, double>> terms;
      for (int j = 0; j < nv; ++j) {
        if (rng() % 3 == 0) continue;
        a[i][j] = unit(rng);
        terms.emplace_back(j, a[i][j]);
      }
      a[i][i % nv] += 1.0;
      terms.emplace_back(i % nv, 1.0);
      const Sense s = rng() % 4 == 0 ? Sense::kLessEq : Sense::kGreaterEq;
      senses.push_back(s);
      p.add_row(std::move(terms), s, s == Sense::kLessEq ? 5.0 : unit(rng));
    }
    const auto r = solve(p);
    if (r.status != LpStatus::kOptimal) continue;
    double dual_obj = 0.0;
    for (int i = 0; i < nr; ++i) {
      dual_obj += r.duals[i] * p.rows[i].rhs;
      if (senses[i] == Sense::kGreaterEq) CHECK(r.duals[i] >= -1e-9);
      if (senses[i] == Sense::kLessEq) CHECK(r.duals[i] <= 1e-9);
    }
    CHECK(dual_obj == doctest::Approx(r.objective).epsilon(1e-7));
    for (int j = 0; j < nv; ++j) {
      double reduced = p.objective[j];
      for (int i = 0; i < nr; ++i) reduced -= a[i][j] * r.duals[i];
      CHECK(reduced >= -1e-7);
    }
    for (int i = 0; i < nr; ++i) {
      double lhs = 0.0;
      for (int j = 0; j < nv; ++j) lhs += a[i][j] * r.x[j];
      if (senses[i] == Sense::kGreaterEq) CHECK(lhs >= p.rows[i].rhs - 1e-7);
      if (senses[i] == Sense::kLessEq) CHECK(lhs <= p.rows[i].rhs + 1e-7);
    }
  }
}
