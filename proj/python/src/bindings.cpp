// Copyright 2026 The socvexify Authors
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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>
#include <vector>

#include "socvexify/cli.hpp"
#include "socvexify/envelope.hpp"
#include "socvexify/hull_verify.hpp"
#include "socvexify/json_io.hpp"
#include "socvexify/knapsack.hpp"
#include "socvexify/model_export.hpp"
#include "socvexify/reformulate.hpp"
#include "socvexify/relaxation.hpp"
#include "socvexify/solvers.hpp"

namespace py = pybind11;
using namespace socvexify;

namespace {

py::tuple verdict(const MembershipVerdict& v) {
  return py::make_tuple(std::string(membership_name(v.status)), v.margin);
}

ModelIR model_for(const std::string& instance_json, const std::string& formulation) {
  const KnapsackInstance inst = instance_from_json(instance_json);
  if (formulation == "ccp") return build_ccp(inst);
  if (formulation == "soc") return build_soc(inst);
  throw InvalidInput("formulation must be 'ccp' or 'soc'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Convex hulls of conic sets over binary domains and knapsack models";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InvalidRange>(m, "InvalidRange", PyExc_ValueError);
  py::register_exception<QueryOutsideHull>(m, "QueryOutsideHull", PyExc_ValueError);
  py::register_exception<SigmaTildeNotPD>(m, "SigmaTildeNotPD", PyExc_ValueError);
  py::register_exception<NumericalLimit>(m, "NumericalLimit", PyExc_ArithmeticError);

  py::class_<ConicSet>(m, "ConicSet")
      .def_static("from_json", &conic_set_from_json)
      .def("to_json", &conic_set_to_json)
      .def_property_readonly("n", &ConicSet::n)
      .def_property_readonly("m", &ConicSet::m)
      .def_property_readonly("p", &ConicSet::p)
      .def_property_readonly("A", [](const ConicSet& s) { return s.A; })
      .def_property_readonly("B", [](const ConicSet& s) { return s.B; })
      .def_property_readonly("d", [](const ConicSet& s) { return s.d; })
      .def_property_readonly("points", [](const ConicSet& s) { return s.domain.points; })
      .def_property_readonly("f_values", [](const ConicSet& s) { return rhs_values(s.f, s.domain); })
      .def_property_readonly("norm", [](const ConicSet& s) { return std::string(norm_name(s.norm)); })
      .def("__eq__", [](const ConicSet& a, const ConicSet& b) { return a == b; });

  m.def("example1_fixture", &example1_fixture);
  m.def("example2_fixture", &example2_fixture);
  m.def(
      "random_normalized_set",
      [](int n, int mm, int p, const std::string& norm, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return random_normalized_set(n, mm, p, parse_norm(norm), rng);
      },
      py::arg("n"), py::arg("m"), py::arg("p"), py::arg("norm") = "l2", py::arg("seed") = 0);
  m.def("normalize", [](const ConicSet& s) { return normalize_assumption2(s).set; });
  m.def("membership_z", [](const ConicSet& s, const Vector& x, const Vector& y) {
    return verdict(membership_Z(s, x, y));
  });
  m.def("membership_w", [](const ConicSet& s, const Vector& x, const Vector& y) {
    return verdict(membership_W(s, x, y));
  });
  m.def("membership_hull", [](const ConicSet& s, const Vector& x, const Vector& y) {
    return verdict(membership_conv_perspective(s, x, y));
  });
  m.def(
      "concave_envelope",
      [](const ConicSet& s, const Vector& query) {
        const EnvelopeCertificate c = concave_envelope(s.domain, rhs_values(s.f, s.domain), query);
        py::list support;
        for (const SupportPoint& sp : c.support) support.append(py::make_tuple(sp.index, sp.weight));
        py::dict out;
        out["value"] = c.value;
        out["support"] = support;
        return out;
      },
      "Envelope value of f at the query and its support (domain index, weight) pairs.");
  m.def(
      "verify_hull",
      [](const ConicSet& s, int trials, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const HullReport r = verify_hull_equivalence(s, trials, rng);
        py::dict out;
        out["trials"] = r.trials;
        out["agreements"] = r.agreements;
        out["disagreements"] = r.disagreements;
        out["skipped"] = r.skipped;
        out["errors"] = r.errors;
        out["certificate_violations"] = r.certificate_violations;
        out["csv"] = hull_report_csv(r);
        return out;
      },
      py::arg("set"), py::arg("trials") = 50, py::arg("seed") = 0);
  m.def("gap_bound", &gap_bound);

  m.def("generate_kp", [](int n_total, int type, int index, std::uint64_t seed) {
    return instance_to_json(generate_kp(n_total, type, index, seed));
  });
  m.def("generate_mkp", [](int n, int resources, std::uint64_t seed) {
    return instance_to_json(generate_mkp(n, resources, seed));
  });
  m.def("build_model", [](const std::string& inst, const std::string& formulation, const std::string& fmt) {
    return export_model(model_for(inst, formulation), parse_export_format(fmt));
  }, py::arg("instance"), py::arg("formulation") = "ccp", py::arg("format") = "json");
  m.def(
      "solve_brute",
      [](const std::string& inst_json, const std::string& formulation) {
        const KnapsackInstance inst = instance_from_json(inst_json);
        const ModelIR model = model_for(inst_json, formulation);
        const BruteForceResult r = solve_bruteforce(model, BinaryDomain::full_cube(inst.n));
        py::dict out;
        out["status"] = std::string(status_name(r.result.status));
        out["value"] = r.result.value;
        out["primal"] = r.result.primal;
        return out;
      },
      py::arg("instance"), py::arg("formulation") = "ccp");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"socvexify"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs one command-line subcommand; returns (exit code, stdout, stderr).");
}
