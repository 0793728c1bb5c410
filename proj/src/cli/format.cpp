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

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "psmc/cli.hpp"

namespace psmc::cli {

namespace {

// LP values are rounded to 1e-9 so reports stay byte-stable across runs.
double tidy(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

Json tidy_vector(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(tidy(x));
  return out;
}

template <typename T>
T require(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("instance file lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad \"") + key + "\": " + ex.what());
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("instance file is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("instance file must hold a JSON object");
  static const std::set<std::string> known = {"version", "n", "q", "sets", "costs", "reqs"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ParseError("unknown instance field \"" + key + "\"");
  }
  const int version = require<int>(j, "version");
  if (version != kFormatVersion) {
    throw ParseError("unsupported instance version " + std::to_string(version));
  }
  const auto q = require<std::vector<std::int64_t>>(j, "q");
  if (q.size() != 2) throw ParseError("\"q\" must be [numerator, denominator]");
  if (q[1] == 0) throw ParseError("\"q\" has a zero denominator");
  try {
    return Instance(require<Index>(j, "n"), require<std::vector<std::vector<Index>>>(j, "sets"),
                    require<std::vector<Cost>>(j, "costs"), require<std::vector<Index>>(j, "reqs"),
                    Rational(q[0], q[1]));
  } catch (const InvalidInstance& ex) {
    throw ParseError(std::string("invalid instance: ") + ex.what());
  }
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"version\": " << kFormatVersion << ",\n";
  os << "  \"n\": " << inst.num_elements() << ",\n";
  os << "  \"q\": " << Json::array({inst.q().num(), inst.q().den()}).dump() << ",\n";
  os << "  \"sets\": " << Json(inst.sets()).dump() << ",\n";
  os << "  \"costs\": " << Json(inst.costs()).dump() << ",\n";
  os << "  \"reqs\": " << Json(inst.reqs()).dump() << "\n";
  os << "}\n";
  return os.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << format_instance(inst);
}

std::string summarize(const Instance& inst) {
  return "n=" + std::to_string(inst.num_elements()) + " m=" + std::to_string(inst.num_sets()) +
         " r_max=" + std::to_string(inst.r_max()) + " q=" + inst.q().str();
}

Json to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Json to_json(const SubCollection& sub) {
  Json j;
  j["chosen"] = sub.chosen;
  j["cost"] = sub.cost;
  j["covered"] = sub.covered.size();
  j["covered_elements"] = sub.covered;
  if (sub.density) {
    j["density"] = to_json(sub.density->value());
    j["density_value"] = sub.density->to_double();
  } else {
    j["density"] = nullptr;
    j["density_value"] = nullptr;
  }
  return j;
}

Json to_json(const GreedyTrace& trace) {
  Json j;
  j["epsilon"] = to_json(trace.epsilon);
  j["n_0"] = trace.target;
  j["goal"] = trace.goal;
  j["t"] = trace.t();
  j["final_coverage"] = trace.final_coverage;
  j["total_cost"] = trace.total_cost;
  Json its = Json::array();
  for (const auto& it : trace.iterations) {
    Json row;
    row["chosen"] = it.picked.chosen;
    row["cost"] = it.picked.cost;
    row["newly_covered"] = it.picked.covered;
    row["n_before"] = it.remaining_before;
    row["n_after"] = it.remaining_after;
    row["density"] = it.picked.density ? to_json(it.picked.density->value()) : Json(nullptr);
    row["bound_rhs"] = it.bound_rhs ? to_json(*it.bound_rhs) : Json(nullptr);
    its.push_back(std::move(row));
  }
  j["iterations"] = std::move(its);
  return j;
}

Json to_json(const BicriteriaReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json row;
    row["name"] = c.name;
    row["ok"] = c.ok;
    row["lhs"] = tidy(c.lhs);
    row["rhs"] = tidy(c.rhs);
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  Json j;
  j["opt"] = report.opt;
  j["alpha"] = to_json(report.alpha);
  j["ok"] = report.ok();
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const MdscStageReport& report) {
  Json j;
  j["lp_objective"] = tidy(report.lp_objective);
  j["lp_rounds"] = report.lp_rounds;
  j["pool_size"] = report.pool_size;
  const auto& p = report.partition;
  j["I"] = p.I;
  Json sizes = Json::array();
  for (const auto& b : p.buckets) sizes.push_back(b.size());
  j["bucket_sizes"] = std::move(sizes);
  j["bucket_masses"] = tidy_vector(p.masses);
  j["i0"] = p.i0;
  j["extended_band"] = p.extended;
  j["targets"] = p.targets;
  j["subroutine_cost"] = report.subroutine_cost;
  j["scaled_lp_feasible"] = report.scaling.ok;
  j["scaled_lp_max_violation"] = tidy(report.scaling.max_violation);
  j["cardinality_bound_applicable"] = report.cardinality_applicable;
  j["cardinality_bound_holds"] = report.cardinality_holds;
  return j;
}

Json to_json(const lp::FractionalSolution& sol) {
  Json j;
  j["objective"] = tidy(sol.objective);
  j["x"] = tidy_vector(sol.x);
  j["y"] = tidy_vector(sol.y);
  if (!sol.columns.empty()) {
    Json cols = Json::array();
    for (std::size_t q = 0; q < sol.columns.size(); ++q) {
      Json c;
      c["element"] = sol.columns[q].element;
      c["sets"] = sol.columns[q].sets;
      c["l"] = tidy(sol.l[q]);
      cols.push_back(std::move(c));
    }
    j["columns"] = std::move(cols);
  }
  return j;
}

}  // namespace psmc::cli
