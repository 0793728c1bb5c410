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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "psmc/cli.hpp"
#include "psmc/generators.hpp"
#include "psmc/oracles.hpp"

namespace psmc::cli {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<BenchRow> default_suite(std::size_t seeds) {
  const std::vector<Rational> epsilons = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
  const std::vector<std::pair<std::string, MdscSolver>> algos = {
      {"greedy+approx-mdsc", approx_mdsc_solver()},
      {"greedy+exact-mdsc", exact_mdsc_solver()},
  };
  std::vector<BenchRow> rows;
  for (const auto& c : fuzz_corpus(1, seeds)) {
    const Instance inst = gen_random(c.seed, c.params);
    std::string opt_text;
    std::optional<Cost> opt;
    try {
      opt = exact_psmc(inst).cost;
      opt_text = std::to_string(*opt);
    } catch (const Error&) {
      opt_text = "";
    }
    for (const auto& [name, solver] : algos) {
      for (const auto& eps : epsilons) {
        BenchRow row{std::to_string(c.seed), std::to_string(inst.num_elements()),
                     std::to_string(inst.num_sets()), std::to_string(inst.r_max()),
                     inst.q().str(), eps.str(), name, "", "", opt_text, "", ""};
        const auto start = std::chrono::steady_clock::now();
        try {
          const GreedyResult res = greedy_solve(inst, eps, solver);
          row.cost = std::to_string(res.solution.cost);
          row.covered = std::to_string(res.solution.covered.size());
          if (opt && *opt > 0) {
            row.ratio = fmt_double(static_cast<double>(res.solution.cost) / *opt);
          } else if (opt) {
            row.ratio = res.solution.cost == 0 ? "1" : "inf";
          }
        } catch (const Error& ex) {
          row.cost = "error";
          row.ratio = "";
        }
        row.wall_ms = fmt_double(elapsed_ms(start));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<BenchRow> msweep_suite() {
  std::vector<BenchRow> rows;
  for (Cost M : {2, 10, 100, 1000}) {
    const Instance inst = gen_example1(M);
    BenchRow row{std::to_string(M), "2", "3", "2", inst.q().str(), "", "mdsc-exact/lp-natural",
                 "", "", "", "", ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      const SubCollection best = exact_mdsc(inst);
      const double lp_value = lp::solve_natural_lp(inst).objective;
      row.cost = std::to_string(best.cost);
      row.covered = std::to_string(best.covered.size());
      row.opt = fmt_double(lp_value);
      row.ratio = fmt_double(best.density->to_double() / lp_value);
    } catch (const Error&) {
      row.cost = "error";
    }
    row.wall_ms = fmt_double(elapsed_ms(start));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<CorpusCase> fuzz_corpus(std::uint64_t first_seed, std::size_t count) {
  std::vector<CorpusCase> out;
  out.reserve(count);
  for (std::uint64_t s = first_seed; s < first_seed + count; ++s) {
    CorpusCase c;
    c.seed = s;
    c.params.n = static_cast<Index>(4 + s % 7);
    c.params.m = static_cast<Index>(3 + (s / 7) % 5);
    c.params.r_max = static_cast<Index>(1 + s % 3);
    c.params.q = s % 2 == 0 ? Rational(1, 2) : Rational(3, 4);
    c.params.cost_max = 10;
    out.push_back(c);
  }
  return out;
}

std::vector<BenchRow> run_bench_suite(const std::string& suite, std::size_t seeds) {
  std::vector<BenchRow> rows;
  if (suite == "default") {
    rows = default_suite(seeds);
  } else if (suite == "msweep") {
    rows = msweep_suite();
  } else if (suite != "empty") {
    throw ParseError("unknown bench suite \"" + suite + "\" (default, msweep, empty)");
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    const auto sa = std::stoull(a.seed);
    const auto sb = std::stoull(b.seed);
    if (sa != sb) return sa < sb;
    return a.algo < b.algo;
  });
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchHeader << '\n';
  for (const auto& r : rows) {
    os << r.seed << ',' << r.n << ',' << r.m << ',' << r.r_max << ',' << r.q << ',' << r.epsilon
       << ',' << r.algo << ',' << r.cost << ',' << r.covered << ',' << r.opt << ',' << r.ratio
       << ',' << r.wall_ms << '\n';
  }
}

}  // namespace psmc::cli
