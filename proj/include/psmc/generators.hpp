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

#include <array>
#include <cstdint>
#include <vector>

#include "psmc/instance.hpp"

namespace psmc {

// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] by rejection on the top of the 64-bit range.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// E = {e1, e2}, S1 = {e1}, S2 = {e2}, S3 = {e1, e2}, costs (1, 1, M), r = 2.
Instance gen_example1(Cost M, Rational q = Rational(1));

// S1 = {e1, e2, e3}, S2 = {e1}, S3 = {e1, e3}, r = (2, 1, 1), unit costs.
Instance gen_example42(Rational q = Rational(1));

using Triple = std::array<Index, 3>;

// Elements X = [0, k), Y = [k, 2k), Z = [2k, 3k) and u0 = 3k. One unit-cost
// set {x, y, z, u0} per triple; r(u0) = k, all other requirements 1.
Instance gen_3dm(Index k, const std::vector<Triple>& triples, Rational q = Rational(1));

// The k diagonal triples (i, i, i): a perfect matching.
std::vector<Triple> planted_matching(Index k);

// S1 = {e1, e2}, S2 = {e1, e3}, S3 = {e2, e3}, r = 2, unit costs, q = 2/3.
Instance gen_appendix_flaw();

struct RandomParams {
  Index n = 8;
  Index m = 6;
  Index r_max = 2;
  Rational q = Rational(3, 4);
  Cost cost_max = 10;
};

// Each set is a uniform nonempty subset (one fair bit per element), costs are
// uniform in [1, cost_max] and r_e uniform in [1, min(r_max, degree(e))].
// Instances with an element of degree 0 are resampled, up to 100 times,
// then RetryExhausted is thrown.
Instance gen_random(std::uint64_t seed, const RandomParams& params);

}  // namespace psmc
