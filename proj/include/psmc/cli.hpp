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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "psmc/errors.hpp"
#include "psmc/generators.hpp"
#include "psmc/greedy.hpp"
#include "psmc/instance.hpp"
#include "psmc/lp.hpp"
#include "psmc/mdsc_approx.hpp"

namespace psmc::cli {

using Json = nlohmann::ordered_json;

// Malformed input file or flag value.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kAssertion = 3,
  kBudget = 4,
};

inline constexpr int kFormatVersion = 1;

// Instance file: {"version":1,"n":..,"q":[num,den],"sets":[[..]],"costs":[..],"reqs":[..]}.
// Unknown keys are rejected. Output is canonical: fixed key order, one key
// per line, compact arrays, trailing newline.
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);
Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

// "n=.. m=.. r_max=.. q=.." one-liner.
std::string summarize(const Instance& inst);

Json to_json(const Rational& r);
Json to_json(const SubCollection& sub);
Json to_json(const GreedyTrace& trace);
Json to_json(const BicriteriaReport& report);
Json to_json(const MdscStageReport& report);
Json to_json(const lp::FractionalSolution& sol);

// The fuzz corpus shared by the bench default suite and the acceptance
// tests: n in [4, 10], m in [3, 7], r_max in [1, 3], q in {1/2, 3/4}.
struct CorpusCase {
  std::uint64_t seed = 0;
  RandomParams params;
};
std::vector<CorpusCase> fuzz_corpus(std::uint64_t first_seed, std::size_t count);

struct BenchRow {
  std::string seed, n, m, r_max, q, epsilon, algo, cost, covered, opt, ratio, wall_ms;
};
inline constexpr const char* kBenchHeader = "seed,n,m,r_max,q,epsilon,algo,cost,covered,opt,ratio,wall-ms";

// Suites: "default" (200 corpus seeds x eps {0.1, 0.25, 0.5} x both greedy
// variants), "msweep" (Example-1 gap for M in {2, 10, 100, 1000}; the seed
// column carries M), "empty". Rows come back sorted by (seed, algo).
std::vector<BenchRow> run_bench_suite(const std::string& suite, std::size_t seeds = 200);
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

// Entry point of the `psmc` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psmc::cli
