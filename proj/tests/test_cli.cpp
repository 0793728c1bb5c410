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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "psmc/cli.hpp"
#include "psmc/errors.hpp"
#include "psmc/generators.hpp"

using namespace psmc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "psmc_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("gen writes the worked examples") {
  auto r = run({"gen", "example1", "--M", "100"});
  CHECK(r.code == 0);
  auto j = cli::Json::parse(r.out);
  CHECK(j["costs"] == cli::Json::parse("[1,1,100]"));
  r = run({"gen", "appendix"});
  j = cli::Json::parse(r.out);
  CHECK(j["q"] == cli::Json::parse("[2,3]"));
  CHECK(run({"gen", "example42"}).code == 0);
  r = run({"gen", "threedm", "--k", "2", "--triples", "0,0,0;1,1,1"});
  CHECK(r.code == 0);
  CHECK(cli::parse_instance(r.out).num_elements() == 7);
  CHECK(run({"gen", "nonsense"}).code == 1);
}

TEST_CASE("gen random reproduces the fixture and echoes q") {
  const auto out = scratch("seed1.json").string();
  const auto r = run({"gen", "random", "--seed", "1", "--n", "8", "--m", "6", "--rmax", "2",
                      "--q", "0.75", "--cost-max", "10", "--out", out});
  CHECK(r.code == 0);
  CHECK(r.err.find("3/4") != std::string::npos);
  CHECK(slurp(out) == slurp(std::string(PSMC_FIXTURE_DIR) + "/random_seed1.json"));
}

TEST_CASE("solve in every mode") {
  const auto flaw = write_file("flaw.json", cli::format_instance(gen_appendix_flaw()));
  auto r = run({"solve", flaw, "--algo", "greedy+exact-mdsc", "--epsilon", "0.1"});
  REQUIRE(r.code == 0);
  auto j = cli::Json::parse(r.out);
  CHECK(j["solution"]["cost"] == 3);
  CHECK(j["solution"]["covered"] == 3);

  const auto ex1 = write_file("ex1.json", cli::format_instance(gen_example1(100)));
  r = run({"solve", ex1, "--algo", "lp-natural"});
  REQUIRE(r.code == 0);
  CHECK(cli::Json::parse(r.out)["objective"].get<double>() == doctest::Approx(2.0));
  const auto trace = scratch("trace.csv").string();
  r = run({"solve", ex1, "--algo", "lp1", "--lp-trace", trace});
  REQUIRE(r.code == 0);
  CHECK(cli::Json::parse(r.out)["objective"].get<double>() == doctest::Approx(51.0));
  CHECK(slurp(trace).rfind("iteration,objective,pool_size,added\n", 0) == 0);

  r = run({"solve", ex1, "--algo", "mdsc-approx"});
  CHECK(r.code == 0);
  r = run({"solve", ex1, "--algo", "mdsc-exact"});
  REQUIRE(r.code == 0);
  CHECK(cli::Json::parse(r.out)["solution"]["density"] == cli::Json::parse("[51,1]"));
  r = run({"solve", flaw, "--algo", "greedy+approx-mdsc", "--epsilon", "1/4", "--multicover",
           "exact"});
  CHECK(r.code == 0);
  CHECK(run({"solve", flaw, "--algo", "greedy+exact-mdsc"}).code == 1);
  CHECK(run({"solve", flaw, "--algo", "magic"}).code == 1);
  CHECK(run({"solve", flaw, "--algo", "greedy+exact-mdsc", "--epsilon", "2"}).code == 1);
}

TEST_CASE("exit codes for bad and infeasible inputs") {
  const auto bad = write_file("bad.json", "{\"version\":1,\"n\":2");
  CHECK(run({"solve", bad, "--algo", "lp1"}).code == 1);
  const auto extra = write_file(
      "extra.json",
      R"({"version":1,"n":2,"q":[1,1],"sets":[[0]],"costs":[1],"reqs":[1,1],"colour":1})");
  auto r = run({"solve", extra, "--algo", "lp1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("colour") != std::string::npos);
  const auto version = write_file(
      "v2.json", R"({"version":2,"n":1,"q":[1,1],"sets":[[0]],"costs":[1],"reqs":[1]})");
  CHECK(run({"solve", version, "--algo", "lp1"}).code == 1);
  const auto range = write_file(
      "range.json", R"({"version":1,"n":1,"q":[1,1],"sets":[[3]],"costs":[1],"reqs":[1]})");
  CHECK(run({"solve", range, "--algo", "lp1"}).code == 1);
  const auto stuck = write_file(
      "stuck.json", R"({"version":1,"n":2,"q":[1,1],"sets":[[0]],"costs":[1],"reqs":[1,2]})");
  CHECK(run({"solve", stuck, "--algo", "greedy+exact-mdsc", "--epsilon", "0.1"}).code == 2);
  CHECK(run({"solve", scratch("missing.json").string(), "--algo", "lp1"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("verify passes on small instances and matches the golden report") {
  const auto flaw = write_file("flaw.json", cli::format_instance(gen_appendix_flaw()));
  auto r = run({"verify", flaw, "--epsilon", "0.1"});
  REQUIRE(r.code == 0);
  CHECK(cli::Json::parse(r.out)["status"] == "PASS");

  const std::string fixture = std::string(PSMC_FIXTURE_DIR) + "/random_seed1.json";
  const auto out = scratch("verify.json").string();
  r = run({"verify", fixture, "--epsilon", "1/4", "--trials", "3", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(slurp(out) == slurp(std::string(PSMC_FIXTURE_DIR) + "/verify_seed1.json"));

  const auto big = write_file(
      "big.json", cli::format_instance(gen_random(3, RandomParams{8, 25, 2, Rational(3, 4), 10})));
  CHECK(run({"verify", big, "--epsilon", "0.25"}).code == 4);
}

TEST_CASE("bench suites") {
  auto r = run({"bench", "--suite", "empty"});
  CHECK(r.code == 0);
  CHECK(r.out == std::string(cli::kBenchHeader) + "\n");

  r = run({"bench", "--suite", "msweep"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double M = std::stod(rows[i][0]);
    CHECK(std::stod(rows[i][10]) == doctest::Approx((2.0 + M) / 4.0));
  }

  r = run({"bench", "--seeds", "30"});
  REQUIRE(r.code == 0);
  const auto fuzz = csv_rows(r.out);
  CHECK(fuzz.size() == 1 + 30 * 2 * 3);
  for (std::size_t i = 1; i < fuzz.size(); ++i) {
    const auto& row = fuzz[i];
    REQUIRE(row.size() == 12);
    if (row[7] == "error") continue;
    if (row[6] != "greedy+exact-mdsc") continue;
    const Rational q = Rational::parse(row[4]);
    const Rational eps = Rational::parse(row[5]);
    const double factor = 1.0 + std::log(1.0 / eps.to_double()) +
                          (1.0 - q.to_double()) / (eps.to_double() * q.to_double());
    CHECK(std::stod(row[10]) <= factor + 1e-9);
  }
  CHECK(run({"bench", "--suite", "bogus"}).code == 1);
}

TEST_CASE("instance files round-trip") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = gen_random(seed, RandomParams{9, 7, 3, Rational(2, 3), 50});
    const auto text = cli::format_instance(inst);
    const auto back = cli::parse_instance(text);
    CHECK(cli::format_instance(back) == text);
    CHECK(back.sets() == inst.sets());
    CHECK(back.costs() == inst.costs());
    CHECK(back.reqs() == inst.reqs());
    CHECK(back.q() == inst.q());
  }
}
