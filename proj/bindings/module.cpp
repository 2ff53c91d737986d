// Copyright 2026 The qchain authors
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

#include "qchain/families.hpp"
#include "qchain/verify.hpp"

namespace py = pybind11;
using namespace qchain;

namespace {

std::vector<FactorKind> kinds_from_names(const std::vector<std::string>& names) {
  std::vector<FactorKind> out;
  for (const auto& n : names) out.push_back(factor_kind_from_name(n));
  return out;
}

Backend backend_arg(const std::string& name) { return backend_from_name(name); }
Protocol protocol_arg(const std::string& name) { return protocol_from_name(name); }

py::dict report_dict(const Circuit& c) {
  const ResourceReport r = resource_report(c);
  py::dict counts;
  for (const auto& [k, v] : r.counts_by_kind) counts[py::str(k)] = v;
  py::dict out;
  out["counts"] = counts;
  out["total_gates"] = r.total_gates;
  out["entanglers"] = r.entanglers;
  out["exchange_two_qubit"] = r.exchange_two_qubit;
  out["depth"] = r.depth;
  out["entangler_depth"] = r.entangler_depth;
  out["width"] = r.width;
  out["ancillas"] = r.ancillas;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qchain, m) {
  m.doc() = "Gate-sequence synthesis for many-body operator strings";

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("num_register", &Circuit::num_register)
      .def_readonly("num_ancilla", &Circuit::num_ancilla)
      .def_property_readonly(
          "num_gates", [](const Circuit& c) { return c.gates.size(); })
      .def("width", &Circuit::width)
      .def("depth", [](const Circuit& c) { return depth(c); })
      .def("entangler_depth", [](const Circuit& c) { return entangler_depth(c); })
      .def("resource_report", &report_dict)
      .def("to_json", &export_json)
      .def("to_qasm", &export_qasm)
      .def_static("from_json", &import_json)
      .def("lowered",
           [](const Circuit& c, const std::string& backend) {
             return lower_to_backend(c, backend_arg(backend));
           },
           py::arg("backend"))
      .def("unitary", &circuit_unitary);

  m.def(
      "synth_pauli_string",
      [](const std::string& axes, double alpha, const std::string& backend,
         const std::string& protocol) {
        std::vector<FactorKind> parsed;
        for (char ch : axes)
          parsed.push_back(factor_kind_from_name(std::string(1, ch)));
        return synth_pauli_string(parsed, alpha, backend_arg(backend),
                                  protocol_arg(protocol));
      },
      py::arg("axes"), py::arg("alpha"), py::arg("backend") = "cnot",
      py::arg("protocol") = "staircase");

  m.def(
      "synth_multicontrol",
      [](int num_controls, const std::string& target, const std::string& protocol,
         const std::string& phase_mode, double alpha) {
        return synth_multicontrol(num_controls, mc_target_from_name(target),
                                  protocol_arg(protocol),
                                  phase_mode == "relative" ? PhaseMode::Relative
                                                           : PhaseMode::Exact,
                                  alpha);
      },
      py::arg("num_controls"), py::arg("target") = "x",
      py::arg("protocol") = "decoupling", py::arg("phase_mode") = "exact",
      py::arg("alpha") = M_PI / 4.0);

  m.def(
      "synth_number_conserving",
      [](const std::vector<std::string>& kinds, double alpha,
         const std::string& protocol) {
        return synth_number_conserving(kinds_from_names(kinds), alpha,
                                       protocol_arg(protocol));
      },
      py::arg("pair_kinds"), py::arg("alpha"), py::arg("protocol") = "decoupling");

  m.def(
      "synth_ucc",
      [](int m_, int n_, double alpha, const std::string& protocol) {
        return synth_ucc(m_, n_, alpha, protocol_arg(protocol));
      },
      py::arg("m"), py::arg("n"), py::arg("alpha"),
      py::arg("protocol") = "decoupling");

  m.def(
      "trotter_ucc_baseline",
      [](int m_, int n_, double alpha) { return trotter_ucc_baseline(m_, n_, alpha); },
      py::arg("m"), py::arg("n"), py::arg("alpha"));

  m.def("ucc_pauli_terms", [](int m_, int n_) {
    py::list out;
    for (const auto& [axes, coeff] : ucc_pauli_terms(m_, n_)) {
      std::string s;
      for (FactorKind k : axes) s += factor_kind_name(k);
      out.append(py::make_tuple(s, coeff));
    }
    return out;
  });

  m.def(
      "target_unitary",
      [](const py::kwargs& kwargs) {
        FamilySpec spec;
        spec.family = py::cast<std::string>(kwargs["family"]);
        if (kwargs.contains("axes")) {
          for (char ch : py::cast<std::string>(kwargs["axes"]))
            spec.axes.push_back(factor_kind_from_name(std::string(1, ch)));
        }
        if (kwargs.contains("num_controls"))
          spec.num_controls = py::cast<int>(kwargs["num_controls"]);
        if (kwargs.contains("target"))
          spec.mc_target = mc_target_from_name(py::cast<std::string>(kwargs["target"]));
        if (kwargs.contains("pair_kinds"))
          spec.pair_kinds =
              kinds_from_names(py::cast<std::vector<std::string>>(kwargs["pair_kinds"]));
        if (kwargs.contains("m")) spec.ucc_m = py::cast<int>(kwargs["m"]);
        if (kwargs.contains("n")) spec.ucc_n = py::cast<int>(kwargs["n"]);
        if (kwargs.contains("alpha")) spec.alpha = py::cast<double>(kwargs["alpha"]);
        if (kwargs.contains("protocol"))
          spec.protocol = protocol_arg(py::cast<std::string>(kwargs["protocol"]));
        if (kwargs.contains("backend"))
          spec.backend = backend_arg(py::cast<std::string>(kwargs["backend"]));
        return target_unitary(spec);
      });

  m.def(
      "verify",
      [](const Circuit& c, const Matrix& target, double tol) {
        const VerificationResult res = verify_equivalence(c, target, tol);
        py::dict out;
        out["distance"] = res.distance;
        out["leakage"] = res.subspace_leakage;
        out["ancilla_preserved"] = res.ancilla_preserved;
        out["passed"] = res.passed;
        out["tolerance"] = res.tolerance;
        return out;
      },
      py::arg("circuit"), py::arg("target"), py::arg("tol") = 1e-9);

  m.def("identity_suite", [] {
    py::list out;
    for (const IdentityCheck& chk : verify_identity_suite())
      out.append(py::make_tuple(chk.name, chk.residual));
    return out;
  });

  m.def("phase_distance", &phase_distance, py::arg("u"), py::arg("v"));
}
