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

#include <span>
#include <vector>

#include "psmc/instance.hpp"
#include "psmc/lp.hpp"
#include "psmc/oracles.hpp"

namespace psmc {

// Dyadic partition of the LP y-values:
//   Y_i = {e : 2^-(i+1) < y_e <= 2^-i} for i < I,   Y_I = {e : y_e <= 2^-I},
// with I = 2 floor(log2 n) - 1 (clamped to at least 1).
struct BucketPartition {
  int I = 1;
  std::vector<std::vector<Index>> buckets;  // I + 1 buckets
  std::vector<double> masses;
  int i0 = 0;
  // True when buckets 0..I-1 carry no mass (possible only for n < 4). The
  // target is then the first nonempty dyadic band 2^-(i0+1) < y <= 2^-i0
  // with i0 >= I.
  bool extended = false;
  std::vector<Index> targets;  // elements the multi-cover step must fully cover
};

int bucket_count_index(Index n);

// i0 maximizes bucket mass over 0..I-1, ties to the smaller index.
// Throws DegenerateY if that mass is zero while n >= 32, std::invalid_argument
// if y does not sum to 1 within 1e-6.
BucketPartition bucketize(std::span<const double> y, Index n);

// |Y_i0| >= 2^i0 / (I + 1).
bool cardinality_bound_holds(const BucketPartition& partition);

// Classical greedy for set multi-cover: repeatedly take the unchosen set with
// the most still-deficient targets per unit cost (zero cost counts as
// infinitely good, ties to the smaller index).
SubCollection multicover_greedy(const Instance& inst, std::span<const Index> targets);

enum class MulticoverMethod { kGreedy, kExact };

struct MdscApproxOptions {
  MulticoverMethod multicover = MulticoverMethod::kGreedy;
  OracleLimits exact_limits{};
  lp::Lp1Options lp{};
};

struct ScalingCheck {
  bool ok = true;
  double max_violation = 0.0;
  double scale = 1.0;
};

struct MdscStageReport {
  double lp_objective = 0.0;
  std::size_t lp_rounds = 0;
  std::size_t pool_size = 0;
  BucketPartition partition;
  Cost subroutine_cost = 0;
  ScalingCheck scaling;  // scaled LP solution against the multi-cover LP on the targets
  bool cardinality_applicable = false;  // n >= 32
  bool cardinality_holds = true;
};

struct MdscApproxResult {
  SubCollection output;
  MdscStageReport report;
  lp::Lp1Result lp;
};

// Multiplies x and l by 2^(i0+1) and checks, for every target e,
//   sum_{Q in pool_e} l_Q >= 1   and   x_S >= sum_{Q in pool_e, S in Q} l_Q.
ScalingCheck check_scaled_multicover_lp(const Instance& inst, const lp::FractionalSolution& sol,
                                        const BucketPartition& partition, double tol = 1e-6);

// LP -> buckets -> multi-cover of the chosen bucket. The star-graph Steiner
// network on (Y_i0, S, s) is set multi-cover on (Y_i0, S, c, r), so it is
// solved in that form.
MdscApproxResult mdsc_approx_solve(const Instance& inst, const MdscApproxOptions& options = {});

// 16 r_max (log2 n)^2, the ratio against the optimum density that is logged.
double monitored_density_bound(const Instance& inst);

}  // namespace psmc
