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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "psmc/cli.hpp"
#include "psmc/generators.hpp"
#include "psmc/oracles.hpp"

namespace psmc::cli {

namespace {

struct GenArgs {
  std::string kind;
  Cost M = 100;
  Index k = 2;
  std::string triples;
  std::uint64_t seed = 1;
  Index n = 8;
  Index m = 6;
  Index r_max = 2;
  std::string q;
  Cost cost_max = 10;
  std::string out;
};

struct SolveArgs {
  std::string input;
  std::string algo;
  std::string epsilon;
  std::string multicover = "greedy";
  std::string lp_trace;
  std::string out;
};

struct VerifyArgs {
  std::string input;
  std::string epsilon;
  int trials = 1;
  std::string out;
};

struct BenchArgs {
  std::string suite = "default";
  std::size_t seeds = 200;
  std::string out;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& ex) {
    throw ParseError("--" + flag + ": " + ex.what());
  }
}

std::vector<Triple> parse_triples(const std::string& text) {
  std::vector<Triple> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (item.empty()) continue;
    Triple t{};
    char c1 = 0, c2 = 0;
    std::istringstream one(item);
    if (!(one >> t[0] >> c1 >> t[1] >> c2 >> t[2]) || c1 != ',' || c2 != ',') {
      throw ParseError("--triples expects \"x,y,z;x,y,z;...\", got \"" + item + "\"");
    }
    out.push_back(t);
  }
  return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

Json instance_header(const Instance& inst) {
  Json j;
  j["n"] = inst.num_elements();
  j["m"] = inst.num_sets();
  j["r_max"] = inst.r_max();
  j["q"] = to_json(inst.q());
  j["target"] = inst.target();
  return j;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Rational> q;
  if (!a.q.empty()) {
    q = parse_rational_flag("q", a.q);
    err << "q = " << q->str() << " (from " << a.q << ")\n";
  }
  std::optional<Instance> inst;
  if (a.kind == "example1") {
    inst = gen_example1(a.M, q.value_or(Rational(1)));
  } else if (a.kind == "example42") {
    inst = gen_example42(q.value_or(Rational(1)));
  } else if (a.kind == "threedm") {
    std::vector<Triple> triples = a.triples.empty() ? planted_matching(a.k) : parse_triples(a.triples);
    if (a.triples.empty() && a.k >= 2) triples.push_back({0, 1, 1});
    inst = gen_3dm(a.k, triples, q.value_or(Rational(1)));
  } else if (a.kind == "appendix") {
    inst = gen_appendix_flaw();
    if (q) inst = Instance(inst->num_elements(), inst->sets(), inst->costs(), inst->reqs(), *q);
  } else if (a.kind == "random") {
    RandomParams p{a.n, a.m, a.r_max, q.value_or(Rational(3, 4)), a.cost_max};
    inst = gen_random(a.seed, p);
  } else {
    throw ParseError("unknown instance kind \"" + a.kind +
                     "\" (example1, example42, threedm, appendix, random)");
  }
  if (a.out.empty()) {
    out << format_instance(*inst);
    err << summarize(*inst) << '\n';
  } else {
    write_instance_file(a.out, *inst);
    out << summarize(*inst) << '\n';
  }
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = read_instance_file(a.input);
  Json report;
  report["version"] = kFormatVersion;
  report["algo"] = a.algo;
  report["instance"] = instance_header(inst);

  const bool greedy = a.algo == "greedy+exact-mdsc" || a.algo == "greedy+approx-mdsc";
  if (greedy && a.epsilon.empty()) throw ParseError("--epsilon is required for " + a.algo);
  MdscApproxOptions approx;
  if (a.multicover == "exact") {
    approx.multicover = MulticoverMethod::kExact;
  } else if (a.multicover != "greedy") {
    throw ParseError("--multicover must be greedy or exact");
  }

  const auto write_trace = [&](const lp::Lp1Result& res) {
    if (a.lp_trace.empty()) return;
    std::ofstream csv(a.lp_trace);
    if (!csv) throw ParseError("cannot write " + a.lp_trace);
    lp::write_trace_csv(csv, res.trace);
  };

  if (greedy) {
    const Rational eps = parse_rational_flag("epsilon", a.epsilon);
    const MdscSolver solver =
        a.algo == "greedy+exact-mdsc" ? exact_mdsc_solver() : approx_mdsc_solver(approx);
    const GreedyResult res = greedy_solve(inst, eps, solver);
    report["solution"] = to_json(res.solution);
    report["trace"] = to_json(res.trace);
  } else if (a.algo == "exact") {
    report["solution"] = to_json(exact_psmc(inst));
  } else if (a.algo == "mdsc-exact") {
    report["solution"] = to_json(exact_mdsc(inst));
  } else if (a.algo == "mdsc-approx") {
    const MdscApproxResult res = mdsc_approx_solve(inst, approx);
    report["solution"] = to_json(res.output);
    report["stage"] = to_json(res.report);
    write_trace(res.lp);
  } else if (a.algo == "lp-natural") {
    const auto sol = lp::solve_natural_lp(inst);
    report["objective"] = to_json(sol)["objective"];
    report["lp"] = to_json(sol);
  } else if (a.algo == "lp1") {
    const auto res = lp::solve_lp1(inst);
    report["objective"] = to_json(res.solution)["objective"];
    report["lp"] = to_json(res.solution);
    report["rounds"] = res.trace.size();
    write_trace(res);
  } else {
    throw ParseError("unknown --algo \"" + a.algo + "\"");
  }
  emit(a.out, report.dump(2) + "\n", out);
  return kOk;
}

Json verify_once(const Instance& inst, const Rational& eps) {
  const SubCollection opt = exact_psmc(inst);
  const GreedyResult greedy = greedy_solve(inst, eps, exact_mdsc_solver(), BoundHint{opt.cost});
  const BicriteriaReport bounds = verify_bicriteria(greedy.trace, opt.cost);

  const SubCollection best = exact_mdsc(inst);
  const double lp1 = lp::solve_lp1(inst).solution.objective;
  const double mdsc_density = best.density->to_double();
  const bool relaxation_ok = lp1 <= mdsc_density + lp::kObjectiveTol;

  Json report;
  report["version"] = kFormatVersion;
  report["command"] = "verify";
  report["instance"] = instance_header(inst);
  report["epsilon"] = to_json(eps);
  report["factor"] = bicriteria_factor(inst.q(), eps);
  report["opt"] = to_json(opt);
  report["greedy"]["solution"] = to_json(greedy.solution);
  report["greedy"]["trace"] = to_json(greedy.trace);
  report["bounds"] = to_json(bounds);
  report["lp1_vs_mdsc"]["lp1_objective"] = std::round(lp1 * 1e9) / 1e9;
  report["lp1_vs_mdsc"]["mdsc_density"] = to_json(best.density->value());
  report["lp1_vs_mdsc"]["ok"] = relaxation_ok;
  report["status"] = bounds.ok() && relaxation_ok ? "PASS" : "FAIL";
  return report;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance_file(a.input);
  const OracleLimits limits;
  if (inst.num_sets() > limits.max_sets) {
    throw BudgetExceeded("verify needs m <= " + std::to_string(limits.max_sets) + ", got " +
                         std::to_string(inst.num_sets()));
  }
  const Rational eps = parse_rational_flag("epsilon", a.epsilon);
  Json report = verify_once(inst, eps);
  const std::string text = report.dump(2);
  for (int trial = 1; trial < a.trials; ++trial) {
    if (verify_once(inst, eps).dump(2) != text) {
      err << "verify: trial " << trial + 1 << " produced a different report\n";
      return kAssertion;
    }
  }
  emit(a.out, text + "\n", out);
  if (report["status"] != "PASS") {
    err << "verify: FAIL\n";
    return kAssertion;
  }
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto rows = run_bench_suite(a.suite, a.seeds);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  emit(a.out, csv.str(), out);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.cost == "error" ? 1 : 0;
  err << "bench " << a.suite << ": " << rows.size() << " rows, " << failed << " failed\n";
  return !rows.empty() && failed == rows.size() ? kAssertion : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial set multi-cover solvers and oracles", "psmc"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance file");
  gen_cmd->add_option("kind", gen.kind, "example1 | example42 | threedm | appendix | random")
      ->required();
  gen_cmd->add_option("--M", gen.M, "Cost of S3 in example1");
  gen_cmd->add_option("--k", gen.k, "3DM size");
  gen_cmd->add_option("--triples", gen.triples, "3DM triples \"x,y,z;...\"");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--n", gen.n, "Random: elements");
  gen_cmd->add_option("--m", gen.m, "Random: sets");
  gen_cmd->add_option("--rmax", gen.r_max, "Random: max requirement");
  gen_cmd->add_option("--q", gen.q, "Covering ratio, p/q or decimal");
  gen_cmd->add_option("--cost-max", gen.cost_max, "Random: max set cost");
  gen_cmd->add_option("--out", gen.out, "Output path (stdout if absent)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver and print a JSON report");
  solve_cmd->add_option("input", solve.input)->required();
  solve_cmd->add_option("--algo", solve.algo,
                        "greedy+exact-mdsc | greedy+approx-mdsc | exact | mdsc-exact | "
                        "mdsc-approx | lp-natural | lp1")
      ->required();
  solve_cmd->add_option("--epsilon", solve.epsilon, "Coverage slack for greedy modes");
  solve_cmd->add_option("--multicover", solve.multicover, "greedy | exact");
  solve_cmd->add_option("--lp-trace", solve.lp_trace, "Column-generation trace CSV");
  solve_cmd->add_option("--out", solve.out, "Report path (stdout if absent)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check greedy bounds against exact oracles");
  verify_cmd->add_option("input", verify.input)->required();
  verify_cmd->add_option("--epsilon", verify.epsilon)->required();
  verify_cmd->add_option("--trials", verify.trials, "Repeat and require identical reports");
  verify_cmd->add_option("--out", verify.out, "Report path (stdout if absent)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite into CSV");
  bench_cmd->add_option("--suite", bench.suite, "default | msweep | empty");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds in the default suite");
  bench_cmd->add_option("--out", bench.out, "CSV path (stdout if absent)");

  std::vector<const char*> argv{"psmc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (solve_cmd->parsed()) return cmd_solve(solve, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InvalidInstance& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Infeasible& ex) {
    err << "infeasible: " << ex.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& ex) {
    err << "budget exceeded: " << ex.what() << '\n';
    return kBudget;
  } catch (const Error& ex) {
    err << "assertion failure: " << ex.what() << '\n';
    return kAssertion;
  }
  return kUsage;
}

}  // namespace psmc::cli
