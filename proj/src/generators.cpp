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

#include "psmc/generators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "psmc/errors.hpp"

namespace psmc {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t v = next();
  while (v > limit) v = next();
  return lo + static_cast<std::int64_t>(v % span);
}

Instance gen_example1(Cost M, Rational q) {
  if (M < 1) throw std::invalid_argument("example1 needs M >= 1");
  return Instance(2, {{0}, {1}, {0, 1}}, {1, 1, M}, {2, 2}, q);
}

Instance gen_example42(Rational q) {
  return Instance(3, {{0, 1, 2}, {0}, {0, 2}}, {1, 1, 1}, {2, 1, 1}, q);
}

Instance gen_3dm(Index k, const std::vector<Triple>& triples, Rational q) {
  if (k < 1) throw std::invalid_argument("3DM gadget needs k >= 1");
  const Index u0 = 3 * k;
  std::vector<std::vector<Index>> sets;
  for (const auto& [x, y, z] : triples) {
    if (x < 0 || x >= k || y < 0 || y >= k || z < 0 || z >= k) {
      throw std::invalid_argument("3DM triple coordinate outside [0, k)");
    }
    sets.push_back({x, k + y, 2 * k + z, u0});
  }
  std::vector<Index> reqs(3 * k + 1, 1);
  reqs[u0] = k;
  std::vector<Cost> costs(sets.size(), 1);
  return Instance(3 * k + 1, std::move(sets), std::move(costs), std::move(reqs), q);
}

std::vector<Triple> planted_matching(Index k) {
  std::vector<Triple> out;
  for (Index i = 0; i < k; ++i) out.push_back({i, i, i});
  return out;
}

Instance gen_appendix_flaw() {
  return Instance(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1}, {2, 2, 2}, Rational(2, 3));
}

Instance gen_random(std::uint64_t seed, const RandomParams& p) {
  if (p.n < 1 || p.m < 1 || p.r_max < 1 || p.cost_max < 1) {
    throw std::invalid_argument("random instance parameters must be positive");
  }
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::vector<Index>> sets(p.m);
    std::vector<Index> degree(p.n, 0);
    for (auto& members : sets) {
      do {
        members.clear();
        std::uint64_t word = 0;
        for (Index e = 0; e < p.n; ++e) {
          if (e % 64 == 0) word = rng.next();
          if ((word >> (e % 64)) & 1U) members.push_back(e);
        }
      } while (members.empty());
      for (Index e : members) ++degree[e];
    }
    std::vector<Cost> costs(p.m);
    for (auto& c : costs) c = rng.uniform(1, p.cost_max);
    if (std::any_of(degree.begin(), degree.end(), [](Index d) { return d == 0; })) continue;
    std::vector<Index> reqs(p.n);
    for (Index e = 0; e < p.n; ++e) {
      reqs[e] = static_cast<Index>(rng.uniform(1, std::min(p.r_max, degree[e])));
    }
    return Instance(p.n, std::move(sets), std::move(costs), std::move(reqs), p.q);
  }
  throw RetryExhausted("no instance with every element coverable after 100 resamples (seed " +
                       std::to_string(seed) + ")");
}

}  // namespace psmc
