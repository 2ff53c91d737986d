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

#include <random>

#include "doctest.h"
#include "qchain/circuit.hpp"
#include "qchain/families.hpp"
#include "qchain/verify.hpp"

using namespace qchain;

namespace {

Gate cnot(int c, int t) { return Gate{GateKind::Cnot, {reg(c), reg(t)}, 0.0, ""}; }

Circuit random_circuit(int qubits, int gates, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> qd(0, qubits - 1);
  std::uniform_real_distribution<double> ad(-M_PI, M_PI);
  Circuit c;
  c.num_register = qubits - 1;
  c.num_ancilla = 1;
  auto as_ref = [&](int x) {
    return x < c.num_register ? reg(x) : anc(x - c.num_register);
  };
  auto distinct = [&](int count) {
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < count) {
      const int q = qd(rng);
      if (std::find(picked.begin(), picked.end(), q) == picked.end())
        picked.push_back(q);
    }
    std::vector<QubitRef> refs;
    for (int q : picked) refs.push_back(as_ref(q));
    return refs;
  };
  for (int i = 0; i < gates; ++i) {
    switch (rng() % 6) {
      case 0:
        c.gates.push_back(Gate{GateKind::Cnot, distinct(2), 0.0, ""});
        break;
      case 1:
        c.gates.push_back(Gate{GateKind::LocalRot, distinct(1), ad(rng),
                               (i % 3 == 0 ? "X" : i % 3 == 1 ? "Y" : "Z")});
        break;
      case 2:
        c.gates.push_back(Gate{GateKind::ISwap, distinct(2),
                               (rng() % 2 ? M_PI / 2.0 : -M_PI / 2.0),
                               (rng() % 2 ? "G" : "F")});
        break;
      case 3:
        c.gates.push_back(Gate{GateKind::Msg, distinct(2), ad(rng), ""});
        break;
      case 4:
        c.gates.push_back(Gate{GateKind::RelPhaseToffoli, distinct(3),
                               (rng() % 2 ? M_PI / 2.0 : -M_PI / 2.0), ""});
        break;
      default:
        c.gates.push_back(Gate{GateKind::GenExp, distinct(2), ad(rng), "ZZ"});
        break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("gate unitaries are unitary") {
  for (const Gate& g :
       {Gate{GateKind::Cnot, {reg(0), reg(1)}, 0.0, ""},
        Gate{GateKind::Toffoli, {reg(0), reg(1), reg(2)}, 0.0, ""},
        Gate{GateKind::RelPhaseToffoli, {reg(0), reg(1), reg(2)}, M_PI / 2, ""},
        Gate{GateKind::ISwap, {reg(0), reg(1)}, -M_PI / 2, "G"},
        Gate{GateKind::ISwap, {reg(0), reg(1)}, M_PI / 2, "F"},
        Gate{GateKind::Msg, {reg(0), reg(1)}, M_PI / 4, ""},
        Gate{GateKind::LocalRot, {reg(0)}, 0.3, "Y"},
        Gate{GateKind::GenExp, {reg(0), reg(1), reg(2)}, M_PI / 4, "ZG"},
        Gate{GateKind::SupportControlX, {reg(0), reg(1), reg(2), reg(3), anc(0)},
             0.0, "G,G"}})
    CHECK(is_unitary(gate_unitary(g), kTolIdentity));
}

TEST_CASE("gate adjoints invert") {
  const Gate g{GateKind::RelPhaseToffoli, {reg(0), reg(1), reg(2)}, M_PI / 2, ""};
  CHECK(max_abs(gate_unitary(g) * gate_unitary(adjoint(g)) - identity(8)) <
        kTolIdentity);
}

TEST_CASE("depth follows greedy layering") {
  Circuit c;
  c.num_register = 4;
  CHECK(depth(c) == 0);
  c.gates = {cnot(0, 1), cnot(2, 3), cnot(0, 2)};
  CHECK(depth(c) == 2);
  CHECK(entangler_depth(c) == 2);
}

TEST_CASE("depth is subadditive under concatenation and stable under relabeling") {
  Circuit a = random_circuit(5, 24, 1);
  Circuit b = random_circuit(5, 17, 2);
  Circuit ab = a;
  ab.append(b);
  CHECK(depth(ab) <= depth(a) + depth(b));

  // Swap two qubit labels consistently.
  Circuit relabeled = a;
  for (Gate& g : relabeled.gates)
    for (QubitRef& q : g.qubits)
      if (q.role == QubitRole::Register && q.index < 2) q.index = 1 - q.index;
  CHECK(depth(relabeled) == depth(a));
  CHECK(entangler_depth(relabeled) == entangler_depth(a));
}

TEST_CASE("resource_report tallies every gate") {
  Circuit c;
  c.num_register = 3;
  CHECK(resource_report(c).total_gates == 0);
  CHECK(resource_report(c).depth == 0);

  c = random_circuit(6, 40, 3);
  const ResourceReport r = resource_report(c);
  int total = 0;
  for (const auto& [kind, count] : r.counts_by_kind) total += count;
  CHECK(total == static_cast<int>(c.gates.size()));
  CHECK(r.width == c.width());
}

TEST_CASE("relative-phase Toffoli lowers to four cnots, exact Toffoli to six") {
  for (double sign : {1.0, -1.0}) {
    Circuit c;
    c.num_register = 3;
    c.gates.push_back(
        Gate{GateKind::RelPhaseToffoli, {reg(0), reg(1), reg(2)}, sign * M_PI / 2, ""});
    const Circuit low = lower_to_backend(c, Backend::Cnot);
    CHECK(resource_report(low).counts_by_kind.at("cnot") == 4);
    CHECK(phase_distance(circuit_unitary(low), circuit_unitary(c)) < kTolComposed);
  }
  Circuit c;
  c.num_register = 3;
  c.gates.push_back(Gate{GateKind::Toffoli, {reg(0), reg(1), reg(2)}, 0.0, ""});
  const Circuit low = lower_to_backend(c, Backend::Cnot);
  CHECK(resource_report(low).counts_by_kind.at("cnot") == 6);
  CHECK(phase_distance(circuit_unitary(low), circuit_unitary(c)) < kTolComposed);
}

TEST_CASE("exchange generator lowers to two iswaps and one exchange rotation") {
  Circuit c;
  c.num_register = 3;
  c.gates.push_back(Gate{GateKind::GenExp, {reg(0), reg(1), reg(2)}, M_PI / 4, "ZG"});
  const Circuit low = lower_to_backend(c, Backend::ISwap);
  const ResourceReport r = resource_report(low);
  CHECK(r.counts_by_kind.at("iswap") == 2);
  CHECK(r.counts_by_kind.at("genexp:G") == 1);
  CHECK(phase_distance(circuit_unitary(low), circuit_unitary(c)) < kTolComposed);
}

TEST_CASE("lowering a native circuit is the identity") {
  Circuit c;
  c.num_register = 2;
  c.gates = {cnot(0, 1), Gate{GateKind::LocalRot, {reg(0)}, 0.2, "Z"}, cnot(1, 0)};
  CHECK(lower_to_backend(c, Backend::Cnot) == c);
}

TEST_CASE("lowering rejects unregistered kinds") {
  Circuit c;
  c.num_register = 3;
  c.gates.push_back(Gate{GateKind::Toffoli, {reg(0), reg(1), reg(2)}, 0.0, ""});
  CHECK_THROWS_AS(lower_to_backend(c, Backend::ISwap), std::invalid_argument);
  CHECK_THROWS_AS(lower_to_backend(c, Backend::Msg), std::invalid_argument);
}

TEST_CASE("family circuits survive lowering") {
  // The full multi-control echo keeps its unitary through the cnot lowering.
  const Circuit c = synth_multicontrol(3, McTarget::X, Protocol::Decoupling,
                                       PhaseMode::Exact, M_PI / 2);
  const Circuit low = lower_to_backend(c, Backend::Cnot);
  CHECK(phase_distance(circuit_unitary(low), circuit_unitary(c)) < kTolComposed);
  CHECK(resource_report(low).counts_by_kind.at("cnot") ==
        4 * resource_report(c).counts_by_kind.at("rptoffoli"));
}

TEST_CASE("json round trip is lossless") {
  const Circuit c = random_circuit(6, 50, 42);
  const Circuit back = import_json(export_json(c));
  CHECK(back == c);
  const ResourceReport before = resource_report(c);
  const ResourceReport after = resource_report(back);
  CHECK(before.counts_by_kind == after.counts_by_kind);
  CHECK(before.depth == after.depth);
}

TEST_CASE("json import validates its input") {
  const Circuit c = random_circuit(4, 5, 7);
  std::string text = export_json(c);
  CHECK_THROWS(import_json("{\"numRegister\": 1}"));
  // Out-of-range qubit index.
  Circuit wide = c;
  wide.num_register = 1;
  wide.num_ancilla = 0;
  CHECK_THROWS_AS(import_json(export_json(wide)), std::invalid_argument);
}

TEST_CASE("empty circuits export to valid documents") {
  Circuit c;
  c.num_register = 2;
  const Circuit back = import_json(export_json(c));
  CHECK(back == c);
  const std::string qasm = export_qasm(c);
  CHECK(qasm.find("OPENQASM 2.0") != std::string::npos);
  CHECK(qasm.find("qreg q[2]") != std::string::npos);
}

TEST_CASE("qasm export references both registers") {
  Circuit c;
  c.num_register = 2;
  c.num_ancilla = 1;
  c.gates = {cnot(0, 1),
             Gate{GateKind::Toffoli, {reg(0), reg(1), anc(0)}, 0.0, ""},
             Gate{GateKind::LocalRot, {anc(0)}, 0.25, "X"}};
  const std::string qasm = export_qasm(c);
  CHECK(qasm.find("qreg anc[1]") != std::string::npos);
  CHECK(qasm.find("cx q[0],q[1];") != std::string::npos);
  CHECK(qasm.find("ccx q[0],q[1],anc[0];") != std::string::npos);
  CHECK(qasm.find("rx(0.5) anc[0];") != std::string::npos);
}
