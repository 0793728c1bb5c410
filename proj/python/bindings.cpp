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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psmc/cli.hpp"
#include "psmc/generators.hpp"
#include "psmc/greedy.hpp"
#include "psmc/lp.hpp"
#include "psmc/mdsc_approx.hpp"
#include "psmc/oracles.hpp"

namespace py = pybind11;

namespace {

using psmc::Index;
using psmc::Instance;
using psmc::Rational;

Rational to_rational(const py::object& value) {
  if (py::isinstance<py::tuple>(value) || py::isinstance<py::list>(value)) {
    auto pair = value.cast<std::pair<std::int64_t, std::int64_t>>();
    return Rational(pair.first, pair.second);
  }
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  if (py::isinstance<py::float_>(value)) return Rational::approximate(value.cast<double>(), 1'000'000);
  return Rational::parse(py::str(value).cast<std::string>());
}

// Reports cross the boundary as JSON text; the package decodes them.
std::string dump(const psmc::cli::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partial set multi-cover solvers (C++ core)";

  auto base = py::register_exception<psmc::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<psmc::InvalidInstance>(m, "InvalidInstance", base.ptr());
  py::register_exception<psmc::Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<psmc::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<psmc::SolverStalled>(m, "SolverStalled", base.ptr());
  py::register_exception<psmc::IterationLimit>(m, "IterationLimit", base.ptr());
  py::register_exception<psmc::DegenerateY>(m, "DegenerateY", base.ptr());
  py::register_exception<psmc::BoundViolation>(m, "BoundViolation", base.ptr());
  py::register_exception<psmc::RetryExhausted>(m, "RetryExhausted", base.ptr());
  py::register_exception<psmc::cli::ParseError>(m, "ParseError", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def(py::init([](Index n, std::vector<std::vector<Index>> sets, std::vector<psmc::Cost> costs,
                       std::vector<Index> reqs, const py::object& q) {
             return Instance(n, std::move(sets), std::move(costs), std::move(reqs), to_rational(q));
           }),
           py::arg("n"), py::arg("sets"), py::arg("costs"), py::arg("reqs"),
           py::arg("q") = py::make_tuple(1, 1))
      .def_property_readonly("n", &Instance::num_elements)
      .def_property_readonly("m", &Instance::num_sets)
      .def_property_readonly("sets", &Instance::sets)
      .def_property_readonly("costs", &Instance::costs)
      .def_property_readonly("reqs", &Instance::reqs)
      .def_property_readonly("q", [](const Instance& i) { return std::make_pair(i.q().num(), i.q().den()); })
      .def_property_readonly("r_max", &Instance::r_max)
      .def_property_readonly("target", &Instance::target)
      .def("to_json", [](const Instance& i) { return psmc::cli::format_instance(i); })
      .def_static("from_json", [](const std::string& text) { return psmc::cli::parse_instance(text); })
      .def("__repr__", [](const Instance& i) { return "<Instance " + psmc::cli::summarize(i) + ">"; });

  py::class_<psmc::SubCollection>(m, "SubCollection")
      .def_readonly("chosen", &psmc::SubCollection::chosen)
      .def_readonly("covered", &psmc::SubCollection::covered)
      .def_readonly("cost", &psmc::SubCollection::cost)
      .def_property_readonly("density", [](const psmc::SubCollection& s) -> py::object {
        if (!s.density) return py::none();
        const Rational d = s.density->value();
        return py::make_tuple(d.num(), d.den());
      })
      .def("__repr__", [](const psmc::SubCollection& s) {
        return "<SubCollection cost=" + std::to_string(s.cost) +
               " covered=" + std::to_string(s.covered.size()) + ">";
      });

  m.def("coverage", &psmc::coverage, py::arg("instance"), py::arg("chosen"));
  m.def("feasibility_check", &psmc::feasibility_check, py::arg("instance"));

  m.def("exact_mdsc", [](const Instance& i, Index max_sets) {
    psmc::OracleLimits lim;
    lim.max_sets = max_sets;
    return psmc::exact_mdsc(i, lim);
  }, py::arg("instance"), py::arg("max_sets") = 20);
  m.def("exact_psmc", [](const Instance& i, Index max_sets) {
    psmc::OracleLimits lim;
    lim.max_sets = max_sets;
    return psmc::exact_psmc(i, lim);
  }, py::arg("instance"), py::arg("max_sets") = 20);
  m.def("exact_multicover", [](const Instance& i, const std::vector<Index>& targets) {
    return psmc::exact_multicover(i, targets);
  }, py::arg("instance"), py::arg("targets"));
  m.def("multicover_greedy", [](const Instance& i, const std::vector<Index>& targets) {
    return psmc::multicover_greedy(i, targets);
  }, py::arg("instance"), py::arg("targets"));

  m.def("_greedy_solve", [](const Instance& i, const py::object& eps, const std::string& mdsc) {
    psmc::MdscSolver solver;
    if (mdsc == "exact") {
      solver = psmc::exact_mdsc_solver();
    } else if (mdsc == "approx") {
      solver = psmc::approx_mdsc_solver();
    } else {
      throw std::invalid_argument("mdsc must be 'exact' or 'approx'");
    }
    const auto res = psmc::greedy_solve(i, to_rational(eps), solver);
    psmc::cli::Json j;
    j["solution"] = psmc::cli::to_json(res.solution);
    j["trace"] = psmc::cli::to_json(res.trace);
    return dump(j);
  });
  m.def("_verify_bicriteria", [](const Instance& i, const py::object& eps) {
    const Rational e = to_rational(eps);
    const auto opt = psmc::exact_psmc(i);
    const auto res = psmc::greedy_solve(i, e, psmc::exact_mdsc_solver(), psmc::BoundHint{opt.cost});
    return dump(psmc::cli::to_json(psmc::verify_bicriteria(res.trace, opt.cost)));
  });
  m.def("_solve_natural_lp", [](const Instance& i) {
    return dump(psmc::cli::to_json(psmc::lp::solve_natural_lp(i)));
  });
  m.def("_solve_lp1", [](const Instance& i) {
    return dump(psmc::cli::to_json(psmc::lp::solve_lp1(i).solution));
  });
  m.def("_mdsc_approx_solve", [](const Instance& i, bool exact_multicover) {
    psmc::MdscApproxOptions opts;
    if (exact_multicover) opts.multicover = psmc::MulticoverMethod::kExact;
    const auto res = psmc::mdsc_approx_solve(i, opts);
    psmc::cli::Json j;
    j["solution"] = psmc::cli::to_json(res.output);
    j["stage"] = psmc::cli::to_json(res.report);
    return dump(j);
  });
  m.def("bucketize", [](const std::vector<double>& y, Index n) {
    const auto p = psmc::bucketize(y, n);
    py::dict d;
    d["I"] = p.I;
    d["buckets"] = p.buckets;
    d["masses"] = p.masses;
    d["i0"] = p.i0;
    d["extended"] = p.extended;
    d["targets"] = p.targets;
    return d;
  }, py::arg("y"), py::arg("n"));

  m.def("gen_example1", [](psmc::Cost M) { return psmc::gen_example1(M); }, py::arg("M"));
  m.def("gen_example42", [] { return psmc::gen_example42(); });
  m.def("gen_3dm", [](Index k, const std::vector<psmc::Triple>& triples) {
    return psmc::gen_3dm(k, triples);
  }, py::arg("k"), py::arg("triples"));
  m.def("planted_matching", &psmc::planted_matching, py::arg("k"));
  m.def("gen_appendix_flaw", &psmc::gen_appendix_flaw);
  m.def("gen_random", [](std::uint64_t seed, Index n, Index m_sets, Index r_max,
                         const py::object& q, psmc::Cost cost_max) {
    return psmc::gen_random(seed, psmc::RandomParams{n, m_sets, r_max, to_rational(q), cost_max});
  }, py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("r_max"), py::arg("q"),
     py::arg("cost_max"));
}
