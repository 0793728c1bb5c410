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

#include "psmc/mdsc_approx.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

constexpr double kMassTol = 1e-9;

// Values within a relative 1e-9 of a power of two are snapped onto it so LP
// round-off cannot move an element across a bucket boundary.
double snap_to_dyadic(double v) {
  if (v <= 0.0) return v;
  const double k = std::round(-std::log2(v));
  const double p = std::ldexp(1.0, -static_cast<int>(k));
  return std::fabs(v - p) <= 1e-9 * p ? p : v;
}

// Smallest i with 2^-(i+1) < v, capped at `cap`.
int dyadic_band(double v, int cap) {
  int i = 0;
  while (i < cap && v <= std::ldexp(1.0, -(i + 1))) ++i;
  return i;
}

}  // namespace

int bucket_count_index(Index n) {
  if (n < 1) throw std::invalid_argument("bucketize needs n >= 1");
  const int log_n = std::bit_width(static_cast<unsigned>(n)) - 1;
  return std::max(1, 2 * log_n - 1);
}

BucketPartition bucketize(std::span<const double> y, Index n) {
  const double total = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("bucketize: y sums to " + std::to_string(total) + ", not 1");
  }
  for (double v : y) {
    if (v < -1e-9) throw std::invalid_argument("bucketize: negative y entry");
  }
  BucketPartition p;
  p.I = bucket_count_index(n);
  p.buckets.assign(p.I + 1, {});
  p.masses.assign(p.I + 1, 0.0);
  std::vector<double> snapped(y.size());
  for (std::size_t e = 0; e < y.size(); ++e) {
    snapped[e] = snap_to_dyadic(y[e]);
    const int i = snapped[e] <= kMassTol ? p.I : dyadic_band(snapped[e], p.I);
    p.buckets[i].push_back(static_cast<Index>(e));
    p.masses[i] += std::max(0.0, y[e]);
  }

  p.i0 = 0;
  for (int i = 1; i < p.I; ++i) {
    if (p.masses[i] > p.masses[p.i0]) p.i0 = i;
  }
  if (p.masses[p.i0] > kMassTol) {
    p.targets = p.buckets[p.i0];
    return p;
  }
  if (n >= 32) {
    throw DegenerateY("all LP mass lies in the last bucket although n = " + std::to_string(n));
  }
  // Extend the dyadic ladder past I; the largest y is always in some band.
  int best = -1;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (snapped[e] <= kMassTol) continue;
    const int band = dyadic_band(snapped[e], 1 << 20);
    if (best < 0 || band < best) best = band;
  }
  if (best < 0) throw DegenerateY("y has no positive entry");
  p.i0 = best;
  p.extended = true;
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (snapped[e] > kMassTol && dyadic_band(snapped[e], 1 << 20) == best) {
      p.targets.push_back(static_cast<Index>(e));
    }
  }
  return p;
}

bool cardinality_bound_holds(const BucketPartition& partition) {
  const double need = std::ldexp(1.0, partition.i0) / (partition.I + 1);
  return static_cast<double>(partition.targets.size()) >= need;
}

SubCollection multicover_greedy(const Instance& inst, std::span<const Index> targets) {
  std::vector<Index> deficit(inst.num_elements(), 0);
  for (Index e : targets) {
    if (e < 0 || e >= inst.num_elements()) throw InvalidInstance("target element out of range");
    if (!inst.coverable(e)) {
      throw Infeasible("element " + std::to_string(e) + " lies in fewer than r_e sets");
    }
    deficit[e] = inst.req(e);
  }
  Index outstanding = 0;
  for (Index v : deficit) outstanding += v;

  std::vector<char> taken(inst.num_sets(), 0);
  std::vector<Index> chosen;
  while (outstanding > 0) {
    Index best = -1;
    Index best_gain = 0;
    for (Index s = 0; s < inst.num_sets(); ++s) {
      if (taken[s]) continue;
      Index gain = 0;
      for (Index e : inst.set(s)) gain += deficit[e] > 0 ? 1 : 0;
      if (gain == 0) continue;
      if (best < 0) {
        best = s;
        best_gain = gain;
        continue;
      }
      // gain / cost(s) > best_gain / cost(best), zero cost as +infinity.
      const Cost cs = inst.cost(s);
      const Cost cb = inst.cost(best);
      bool better;
      if (cs == 0 || cb == 0) {
        better = cs == 0 && cb != 0;
      } else {
        better = static_cast<__int128>(gain) * cb > static_cast<__int128>(best_gain) * cs;
      }
      if (better) {
        best = s;
        best_gain = gain;
      }
    }
    if (best < 0) throw Infeasible("multi-cover greedy ran out of useful sets");
    taken[best] = 1;
    chosen.push_back(best);
    for (Index e : inst.set(best)) {
      if (deficit[e] > 0) {
        --deficit[e];
        --outstanding;
      }
    }
  }
  return coverage(inst, std::move(chosen));
}

ScalingCheck check_scaled_multicover_lp(const Instance& inst, const lp::FractionalSolution& sol,
                                        const BucketPartition& partition, double tol) {
  ScalingCheck check;
  check.scale = std::ldexp(1.0, partition.i0 + 1);
  const Index m = inst.num_sets();
  std::vector<char> is_target(inst.num_elements(), 0);
  for (Index e : partition.targets) is_target[e] = 1;
  std::vector<double> served(inst.num_elements(), 0.0);
  std::vector<std::vector<double>> load(inst.num_elements());
  for (Index e : partition.targets) load[e].assign(m, 0.0);
  for (std::size_t q = 0; q < sol.columns.size(); ++q) {
    const Index e = sol.columns[q].element;
    if (!is_target[e]) continue;
    const double lhat = check.scale * sol.l[q];
    served[e] += lhat;
    for (Index s : sol.columns[q].sets) load[e][s] += lhat;
  }
  const auto note = [&](double violation) {
    if (violation > tol) check.ok = false;
    check.max_violation = std::max(check.max_violation, violation);
  };
  for (Index e : partition.targets) {
    note(1.0 - served[e]);
    for (Index s = 0; s < m; ++s) note(load[e][s] - check.scale * sol.x[s]);
  }
  return check;
}

MdscApproxResult mdsc_approx_solve(const Instance& inst, const MdscApproxOptions& options) {
  MdscApproxResult result;
  result.lp = lp::solve_lp1(inst, options.lp);
  const auto& sol = result.lp.solution;

  MdscStageReport& report = result.report;
  report.lp_objective = sol.objective;
  report.lp_rounds = result.lp.trace.size();
  report.pool_size = sol.columns.size();
  report.partition = bucketize(sol.y, inst.num_elements());
  report.scaling = check_scaled_multicover_lp(inst, sol, report.partition);
  report.cardinality_applicable = inst.num_elements() >= 32;
  report.cardinality_holds = cardinality_bound_holds(report.partition);

  const auto& targets = report.partition.targets;
  result.output = options.multicover == MulticoverMethod::kExact
                      ? exact_multicover(inst, targets, options.exact_limits)
                      : multicover_greedy(inst, targets);
  report.subroutine_cost = result.output.cost;
  return result;
}

double monitored_density_bound(const Instance& inst) {
  const double log_n = std::log2(static_cast<double>(inst.num_elements()));
  return 16.0 * inst.r_max() * log_n * log_n;
}

}  // namespace psmc
