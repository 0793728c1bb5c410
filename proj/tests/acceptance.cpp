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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "psmc/cli.hpp"
#include "psmc/errors.hpp"
#include "psmc/generators.hpp"
#include "psmc/greedy.hpp"
#include "psmc/lp.hpp"
#include "psmc/mdsc_approx.hpp"
#include "psmc/oracles.hpp"

using namespace psmc;

namespace {

constexpr std::uint64_t kCorpusSeeds = 210;

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    std::ostringstream why;
    why << " over time budget " << budget_seconds << " s";
    v.fail(why.str());
  }
  if (!v.ok) ++failures;
  std::printf("[%s] %d. %s (%.3f s) %s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              v.note.str().c_str());
  std::fflush(stdout);
}

std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (const auto& c : cli::fuzz_corpus(1, kCorpusSeeds)) out.push_back(gen_random(c.seed, c.params));
  return out;
}

}  // namespace

int main() {
  const auto instances = corpus();

  criterion(1, "integrality gap on the two-element example", 1.0, [](Verdict& v) {
    for (Cost M : {10, 100, 1000}) {
      const auto inst = gen_example1(M);
      const double natural = lp::solve_natural_lp(inst).objective;
      const auto exact = exact_mdsc(inst);
      const double lp1 = lp::solve_lp1(inst).solution.objective;
      const Rational want(2 + M, 2);
      if (std::fabs(natural - 2.0) > 1e-6) v.fail("natural LP value");
      if (!exact.density || exact.density->value() != want) v.fail("exact MDSC density");
      if (std::fabs(lp1 - want.to_double()) > 1e-6) v.fail("LP1 value");
      v.note << "M=" << M << ": LP=" << natural << " MDSC=" << want.str() << " LP1=" << lp1
             << "; ";
    }
  });

  criterion(2, "3DM gadget densities", 5.0, [](Verdict& v) {
    for (Index k : {1, 2, 3}) {
      const auto d = exact_mdsc(gen_3dm(k, planted_matching(k))).density;
      if (!d || d->value() != Rational(k, 3 * k + 1)) v.fail("planted k=" + std::to_string(k));
      v.note << "k=" << k << ": " << (d ? d->value().str() : "none") << "; ";
    }
    // Triples without a perfect matching.
    const std::vector<std::pair<Index, std::vector<Triple>>> overlaps{
        {2, {{0, 0, 0}, {0, 1, 1}, {0, 0, 1}}},
        {3, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {2, 0, 2}}},
    };
    for (const auto& [k, triples] : overlaps) {
      const auto d = exact_mdsc(gen_3dm(k, triples)).density;
      if (!d || !(d->value() > Rational(k, 3 * k + 1))) {
        v.fail("overlap k=" + std::to_string(k));
      }
      v.note << "overlap k=" << k << ": " << (d ? d->value().str() : "none") << "; ";
    }
  });

  criterion(3, "bicriteria bound with exact MDSC on the fuzz corpus", 120.0,
            [&instances](Verdict& v) {
              int runs = 0, coverage_ok = 0, cost_ok = 0, per_check_fail = 0;
              for (const auto& inst : instances) {
                const Cost opt = exact_psmc(inst).cost;
                for (const Rational eps : {Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
                  const auto res = greedy_solve(inst, eps, exact_mdsc_solver(), BoundHint{opt});
                  const auto report = verify_bicriteria(res.trace, opt);
                  ++runs;
                  if (res.trace.final_coverage >= res.trace.goal) ++coverage_ok;
                  const double factor = bicriteria_factor(inst.q(), eps);
                  if (static_cast<double>(res.solution.cost) <=
                      factor * static_cast<double>(opt) * (1 + 1e-12)) {
                    ++cost_ok;
                  }
                  for (const auto& c : report.checks) per_check_fail += c.ok ? 0 : 1;
                }
              }
              if (instances.size() < 200) v.fail("corpus too small");
              if (coverage_ok != runs) v.fail("coverage");
              if (cost_ok != runs) v.fail("cost bound");
              if (per_check_fail != 0) v.fail("per-iteration checks");
              v.note << instances.size() << " instances, " << runs << " runs; coverage "
                     << coverage_ok << "/" << runs << ", cost " << cost_ok << "/" << runs
                     << ", failed inequality checks " << per_check_fail;
            });

  criterion(4, "LP1 lower-bounds the exact MDSC density", 120.0, [&instances](Verdict& v) {
    int ok = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& inst : instances) {
      const double lp1 = lp::solve_lp1(inst).solution.objective;
      const double density = exact_mdsc(inst).density->to_double();
      worst = std::max(worst, lp1 - density);
      if (lp1 <= density + 1e-6) ++ok;
    }
    if (ok != static_cast<int>(instances.size())) v.fail("LP1 above density");
    v.note << ok << "/" << instances.size() << ", max(LP1 - density) = " << worst;
  });

  criterion(5, "pricing equals brute force over all cover-sets", 120.0, [&instances](Verdict& v) {
    long elements = 0, agree = 0;
    SplitMix64 rng(7);
    for (const auto& inst : instances) {
      if (inst.num_sets() > 8) continue;
      // Final duals of column generation plus one random perturbation.
      auto duals = lp::solve_lp1(inst).duals;
      auto noisy = duals;
      for (Index e = 0; e < inst.num_elements(); ++e) {
        for (Index s : inst.sets_containing(e)) noisy.d[e][s] = rng.uniform(0, 40) / 8.0;
        noisy.f[e] = rng.uniform(0, 80) / 8.0;
      }
      for (const auto* dv : {&duals, &noisy}) {
        const auto priced = lp::price_columns(inst, *dv, -std::numeric_limits<double>::infinity());
        for (Index e = 0; e < inst.num_elements(); ++e) {
          if (!dv->has_y[e]) continue;
          const auto containing = inst.sets_containing(e);
          const int d = static_cast<int>(containing.size());
          double brute = std::numeric_limits<double>::infinity();
          for (unsigned mask = 0; mask < (1u << d); ++mask) {
            if (std::popcount(mask) != inst.req(e)) continue;
            double g = 0.0;
            for (int i = 0; i < d; ++i) {
              if (mask >> i & 1u) g += dv->d[e][containing[i]];
            }
            brute = std::min(brute, g);
          }
          ++elements;
          for (const auto& col : priced) {
            if (col.element == e && std::fabs(lp::cover_set_weight(*dv, col) - brute) <= 1e-9) {
              ++agree;
            }
          }
        }
      }
    }
    if (agree != elements) v.fail("disagreement");
    v.note << agree << "/" << elements << " element pricings agree";
  });

  criterion(6, "bucket cardinality bound on random y", 10.0, [](Verdict& v) {
    SplitMix64 rng(2026);
    int draws = 0, ok = 0;
    for (Index n : {32, 64, 100}) {
      for (int t = 0; t < 500; ++t) {
        std::vector<double> y(n);
        double total = 0.0;
        for (auto& x : y) {
          x = -std::log((static_cast<double>(rng.next() >> 11) + 0.5) / 9007199254740992.0);
          total += x;
        }
        for (auto& x : y) x /= total;
        const auto p = bucketize(y, n);
        ++draws;
        if (!p.extended && p.i0 <= p.I - 1 &&
            static_cast<double>(p.buckets[p.i0].size()) >= std::ldexp(1.0, p.i0) / (p.I + 1)) {
          ++ok;
        }
      }
    }
    if (ok != draws) v.fail("bound missed");
    v.note << ok << "/" << draws << " draws";
  });

  criterion(7, "scaled LP solution satisfies the multi-cover LP on the chosen bucket", 120.0,
            [&instances](Verdict& v) {
              int ok = 0;
              double worst = 0.0;
              for (const auto& inst : instances) {
                const auto res = mdsc_approx_solve(inst);
                const auto check =
                    check_scaled_multicover_lp(inst, res.lp.solution, res.report.partition, 1e-6);
                worst = std::max(worst, check.max_violation);
                if (check.ok) ++ok;
              }
              if (ok != static_cast<int>(instances.size())) v.fail("constraint violated");
              v.note << ok << "/" << instances.size() << ", max violation " << worst;
            });

  criterion(8, "three-element example breaks the density chain", 1.0, [](Verdict& v) {
    const auto inst = gen_appendix_flaw();
    const auto first = coverage(inst, {0, 1});
    auto state = ResidualState::initial(std::make_shared<const Instance>(inst));
    state = residual_update(state, first);
    const auto reduced = reduce(state);
    if (!reduced.instance) {
      v.fail("nothing left after the first pick");
      return;
    }
    Index local = -1;
    for (std::size_t s = 0; s < reduced.set_map.size(); ++s) {
      if (reduced.set_map[s] == 2) local = static_cast<Index>(s);
    }
    if (local < 0) {
      v.fail("third set missing from the residual instance");
      return;
    }
    const auto second = coverage(*reduced.instance, {local});
    const Rational d1 = first.density->value();
    const Rational d2 = second.density->value();
    if (d1 != Rational(2)) v.fail("first density");
    if (d2 != Rational(1, 2)) v.fail("second density");
    if (!(d1 > d2)) v.fail("chain not violated");
    v.note << "den1=" << d1.str() << " den2=" << d2.str();
  });

  criterion(9, "approximate MDSC covers its bucket; monitored density bound", 120.0,
            [&instances](Verdict& v) {
              int covered_ok = 0, violations = 0;
              double worst = 0.0;
              for (const auto& inst : instances) {
                const auto res = mdsc_approx_solve(inst);
                bool all = true;
                for (Index e : res.report.partition.targets) {
                  all = all && std::binary_search(res.output.covered.begin(),
                                                  res.output.covered.end(), e);
                }
                if (all) ++covered_ok;
                const double ratio =
                    res.output.density->to_double() / exact_mdsc(inst).density->to_double();
                worst = std::max(worst, ratio);
                if (ratio > monitored_density_bound(inst)) ++violations;
              }
              if (covered_ok != static_cast<int>(instances.size())) v.fail("bucket not covered");
              v.note << "covered " << covered_ok << "/" << instances.size()
                     << ", worst density ratio " << worst << ", monitored-bound violations "
                     << violations;
            });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
