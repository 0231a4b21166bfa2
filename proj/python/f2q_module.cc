// Copyright 2026 The f2q Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "f2q/catalog.h"
#include "f2q/lattice.h"
#include "f2q/majorana.h"
#include "f2q/manifest.h"
#include "f2q/pauli.h"
#include "f2q/separators.h"
#include "f2q/transforms.h"
#include "f2q/verifier.h"

namespace py = pybind11;
using namespace f2q;

namespace {

py::list checks_to_list(const VerificationReport& rep) {
  py::list out;
  for (const auto& c : rep.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    d["counterexample"] = c.counterexample;
    out.append(d);
  }
  return out;
}

std::vector<std::string> images_of(const Mapping& m, const std::vector<Generator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(to_text(g.image, m.namer()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_f2q, mod) {
  mod.doc() = "Fermion-to-qubit mappings on the square-lattice torus";

  py::register_exception<SizeError>(mod, "SizeError", PyExc_ValueError);
  py::register_exception<ManifestError>(mod, "ManifestError", PyExc_ValueError);
  py::register_exception<OracleSizeError>(mod, "OracleSizeError", PyExc_ValueError);

  py::class_<PauliOperator>(mod, "PauliOperator")
      .def(py::init([](const std::string& text, size_t n) { return parse_pauli(text, n); }), py::arg("text"),
           py::arg("num_qubits"))
      .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
      .def_property_readonly("weight", &PauliOperator::weight)
      .def_property_readonly("phase_exp", &PauliOperator::phase_exp)
      .def("letter", &PauliOperator::letter)
      .def("commutes", [](const PauliOperator& a, const PauliOperator& b) { return pauli_commutation_scalar(a, b) > 0; })
      .def("__mul__", &PauliOperator::operator*)
      .def("__eq__", &PauliOperator::operator==)
      .def("__str__", [](const PauliOperator& p) { return to_text(p); })
      .def("__repr__", [](const PauliOperator& p) { return "PauliOperator('" + to_text(p) + "')"; });

  py::class_<MajoranaMonomial>(mod, "MajoranaMonomial")
      .def(py::init([](const std::string& text) { return parse_majorana(text); }))
      .def_readonly("phase_exp", &MajoranaMonomial::phase_exp)
      .def_readonly("modes", &MajoranaMonomial::modes)
      .def("__mul__", [](const MajoranaMonomial& a, const MajoranaMonomial& b) { return majorana_mul(a, b); })
      .def("commutes",
           [](const MajoranaMonomial& a, const MajoranaMonomial& b) { return majorana_commutation_scalar(a, b) > 0; })
      .def("__eq__", &MajoranaMonomial::operator==)
      .def("__str__", [](const MajoranaMonomial& m) { return to_text(m); });

  py::class_<Mapping>(mod, "Mapping")
      .def_readonly("kind", &Mapping::kind)
      .def_readonly("lx", &Mapping::lx)
      .def_readonly("ly", &Mapping::ly)
      .def_readonly("num_sites", &Mapping::num_sites)
      .def_property_readonly("num_qubits", &Mapping::num_qubits)
      .def_property_readonly("ratio", [](const Mapping& m) { return py::make_tuple(m.ratio().num, m.ratio().den); })
      .def_property_readonly("qubit_names",
                             [](const Mapping& m) {
                               std::vector<std::string> out;
                               for (size_t q = 0; q < m.num_qubits(); q++) out.push_back(m.qubit_name(q));
                               return out;
                             })
      .def_property_readonly("hopping", [](const Mapping& m) { return images_of(m, m.hopping); })
      .def_property_readonly("parity", [](const Mapping& m) { return images_of(m, m.parity); })
      .def_property_readonly("stabilizers",
                             [](const Mapping& m) {
                               std::vector<std::string> out;
                               for (const auto& s : m.stabilizers) out.push_back(to_text(s, m.namer()));
                               return out;
                             })
      .def("generator_images", [](const Mapping& m) {
        std::vector<PauliOperator> out;
        for (size_t g = 0; g < m.num_generators(); g++) out.push_back(m.generator(g).image);
        return out;
      });

  mod.def("catalog_kinds", &catalog_kinds);
  mod.def("build_mapping", &build_mapping, py::arg("kind"), py::arg("lx"), py::arg("ly"));
  mod.def("to_manifest", [](const Mapping& m) { return write_manifest(m); });
  mod.def("from_manifest", [](const std::string& text) {
    std::istringstream in(text);
    return read_manifest(in).mapping;
  });

  mod.def(
      "verify",
      [](const Mapping& m, const std::vector<std::string>& checks, int jobs) {
        VerifyOptions opts;
        opts.checks = checks;
        opts.jobs = jobs;
        return checks_to_list(verify(m, opts));
      },
      py::arg("mapping"), py::arg("checks") = std::vector<std::string>{"algebra", "loops", "degeneracy", "weights"},
      py::arg("jobs") = 1);
  mod.def("oracle_check", [](const Mapping& m) { return checks_to_list(oracle_check(m)); });
  mod.def("degeneracy", &degeneracy);
  mod.def("weight_table", [](const Mapping& m) { return weight_table(m).str(); });
  mod.def("reproduce_table", [](int lx, int ly) {
    py::list out;
    for (const auto& l : reproduce_table(lx, ly)) {
      const char* status = l.status == TableLine::Status::Match      ? "MATCH"
                           : l.status == TableLine::Status::Contingent ? "CONTINGENT"
                                                                       : "MISMATCH";
      out.append(py::make_tuple(l.row.label, l.computed ? l.got.str() : std::string(), l.row.expected.str(), status));
    }
    return out;
  }, py::arg("lx") = 4, py::arg("ly") = 4);

  mod.def("pipeline_kinds", &pipeline_kinds);
  mod.def(
      "run_pipeline",
      [](const std::string& kind, int lx, int ly) {
        auto res = run_pipeline(kind, lx, ly);
        return py::make_tuple(res.mapping, to_text(res.report));
      },
      py::arg("kind"), py::arg("lx"), py::arg("ly"));
  mod.def("pipeline_equivalences", [](int lx, int ly) { return checks_to_list(pipeline_equivalences(lx, ly)); },
          py::arg("lx") = 4, py::arg("ly") = 4);

  mod.def(
      "separator_scan",
      [](int k, int lx, int ly, int jobs) {
        auto s = fix_pauli_algebra(build_flippers(build_separators(lx, ly > 0 ? ly : 4 * k, k)));
        auto scan = scan_algebra(s, jobs);
        auto g = s.grey_fraction();
        py::dict d;
        d["ok"] = scan.ok();
        d["summary"] = scan.str();
        d["separators"] = s.separators.size();
        d["grey_fraction"] = py::make_tuple(g.num, g.den);
        return d;
      },
      py::arg("k"), py::arg("lx") = 4, py::arg("ly") = 0, py::arg("jobs") = 1);
}
