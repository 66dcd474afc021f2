// Copyright 2026 The semicayley Authors
//
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "semicayley/cli.hpp"
#include "semicayley/error.hpp"
#include "semicayley/json_io.hpp"
#include "semicayley/pst.hpp"
#include "semicayley/transfer.hpp"

namespace py = pybind11;
using namespace semicayley;

namespace {

SemiCayleySpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(j);
}

Vertex parse(const SemiCayleySpec& spec, const std::string& v) {
  return parse_vertex(spec.group(), v);
}

}  // namespace

PYBIND11_MODULE(_semicayley, m) {
  m.doc() = "Semi-Cayley graphs over finite abelian groups: spectra, "
            "quantum walks and perfect state transfer.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<SemiCayleySpec>(m, "Spec")
      .def(py::init(&parse_spec), py::arg("json"))
      .def_property_readonly("n", &SemiCayleySpec::n)
      .def_property_readonly("vertex_count", &SemiCayleySpec::vertex_count)
      .def_property_readonly("right_equals_left", &SemiCayleySpec::right_equals_left)
      .def("to_json", [](const SemiCayleySpec& s) { return to_json(s).dump(); })
      .def("adjacency", [](const SemiCayleySpec& s) { return build(s); })
      .def("__eq__", [](const SemiCayleySpec& a, const SemiCayleySpec& b) { return a == b; })
      .def("__repr__", [](const SemiCayleySpec& s) { return "Spec(" + to_json(s).dump() + ")"; });

  m.def("family", [](const std::string& name, const std::string& params) {
        return family_spec(name, Json::parse(params));
      }, py::arg("name"), py::arg("params"));

  m.def("spectrum_json", [](const SemiCayleySpec& s) {
    return to_json(compute_spectrum(s)).dump();
  });
  m.def("eigenvalues", [](const SemiCayleySpec& s) {
    return compute_spectrum(s).sorted_values();
  });
  m.def("transfer_matrix", [](const SemiCayleySpec& s, double t) {
    return transfer_matrix(s, t).entries;
  }, py::arg("spec"), py::arg("t"));
  m.def("transfer_entry", [](const SemiCayleySpec& s, const std::string& u,
                             const std::string& v, double t) {
    return transfer_entry(s, parse(s, u), parse(s, v), t);
  }, py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("t"));
  m.def("block_transfer_rl", [](const SemiCayleySpec& s, double t) {
    return block_transfer_rl(s, t).entries;
  }, py::arg("spec"), py::arg("t"));
  m.def("oracle_expm", [](const Eigen::MatrixXd& a, double t) {
    return oracle_expm(a, t).entries;
  }, py::arg("adjacency"), py::arg("t"));

  m.def("decide_json", [](const SemiCayleySpec& s, const std::string& u,
                          const std::string& v) {
    return to_json(decide(s, parse(s, u), parse(s, v))).dump();
  }, py::arg("spec"), py::arg("u"), py::arg("v"));
  m.def("find_pst_json", [](const SemiCayleySpec& s, double tol) {
    Json out = Json::array();
    for (const auto& v : find_pst(s, tol)) out.push_back(to_json(v));
    return out.dump();
  }, py::arg("spec"), py::arg("tol") = 1e-8);
  m.def("periodicity_json", [](const SemiCayleySpec& s) {
    return to_json(periodicity(s)).dump();
  });
  m.def("verify_at_time_json", [](const SemiCayleySpec& s, const std::string& u,
                                  const std::string& v, double t, double tol) {
    return to_json(verify_at_time(s, parse(s, u), parse(s, v), t, tol)).dump();
  }, py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("t"), py::arg("tol") = 1e-8);
  m.def("nu2", [](std::int64_t p, std::int64_t q) -> std::optional<int> {
    if (q == 0) throw ValidationError("zero denominator");
    const TwoAdicVal v = nu2(Rational(p, q));
    if (v.is_infinite()) return std::nullopt;
    return v.exponent();
  }, py::arg("numerator"), py::arg("denominator") = 1);

  m.def("run_job", [](const std::string& job) {
    std::ostringstream out;
    int code = 1;
    try {
      code = run(job_from_json(Json::parse(job)), out);
    } catch (const Json::exception& e) {
      out << Json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2) << "\n";
    } catch (const ValidationError& e) {
      out << Json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2) << "\n";
    }
    return py::make_tuple(code, out.str());
  }, py::arg("job"));
}
