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

#include "doctest.h"
#include "qchain/protocol.hpp"
#include "qchain/verify.hpp"

using namespace qchain;

namespace {

ChainSpec pauli_spec(const std::string& axes, double alpha, Backend backend) {
  ChainSpec spec;
  spec.family = ChainFamily::PauliString;
  for (char ch : axes)
    spec.pauli_axes.push_back(factor_kind_from_name(std::string(1, ch)));
  spec.alpha = alpha;
  spec.backend = backend;
  return spec;
}

ChainSpec mc_spec(int controls, double alpha) {
  ChainSpec spec;
  spec.family = ChainFamily::MultiControl;
  spec.num_controls = controls;
  spec.alpha = alpha;
  return spec;
}

ChainSpec exchange_spec(const std::vector<FactorKind>& kinds, double alpha) {
  ChainSpec spec;
  spec.family = ChainFamily::ExchangePairs;
  spec.pair_kinds = kinds;
  spec.alpha = alpha;
  return spec;
}

int entangler_count(const Circuit& c) { return resource_report(c).entanglers; }

}  // namespace

TEST_CASE("staircase with no chaining step is the bare rotation") {
  const ChainSpec spec = pauli_spec("Z", 0.8, Backend::Cnot);
  const Circuit c = build_staircase(spec);
  CHECK(entangler_count(c) == 0);
  CHECK(phase_distance(circuit_unitary(c), expm_generator(pauli_z(), 0.8)) <
        kTolComposed);
}

TEST_CASE("cnot staircase composes a Z pair") {
  const ChainSpec spec = pauli_spec("ZZ", 0.65, Backend::Cnot);
  const Circuit c = build_staircase(spec);
  CHECK(entangler_count(c) == 2);
  const Matrix target = expm_generator(tensor(pauli_z(), pauli_z()), 0.65);
  CHECK(phase_distance(circuit_unitary(c), target) < kTolComposed);
}

TEST_CASE("projector chain staircase at the quarter turn") {
  // Three-site chain built from Toffoli entanglers.
  const ChainSpec spec = mc_spec(1, M_PI / 2.0);
  const Circuit c = build_staircase(spec);
  const Matrix u = circuit_unitary(c);
  // H1 = -P0 Z1 Z2 + P0_perp Z1 from the conjugation identity.
  const Matrix h1 =
      -embed(tensor(proj_one(), tensor(pauli_z(), pauli_z())), {0, 1, 2}, 3) +
      embed(tensor(proj_zero(), pauli_z()), {0, 1}, 3);
  CHECK(max_abs(hhat_closed_form(spec) - h1) < kTolIdentity);
  CHECK(phase_distance(u, expm_generator(h1, M_PI / 2.0)) < kTolComposed);
}

TEST_CASE("staircase identity across families and lengths") {
  for (Backend b : {Backend::Cnot, Backend::Msg, Backend::ISwap}) {
    for (const char* axes : {"X", "XY", "ZYX", "XXZZ", "YZXZY"}) {
      const ChainSpec spec = pauli_spec(axes, 0.37, b);
      const Circuit c = build_staircase(spec);
      CHECK(entangler_count(c) == 2 * (static_cast<int>(spec.pauli_axes.size()) - 1));
      CHECK(phase_distance(circuit_unitary(c),
                           expm_generator(hhat_closed_form(spec), 0.37)) <
            kTolComposed);
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const ChainSpec spec = mc_spec(n, 0.51);
    CHECK(resource_report(build_staircase(spec)).counts_by_kind.at("rptoffoli") ==
          2 * n);
    CHECK(phase_distance(circuit_unitary(build_staircase(spec)),
                         expm_generator(hhat_closed_form(spec), 0.51)) <
          kTolComposed);
  }
  for (int pairs = 2; pairs <= 3; ++pairs) {
    const ChainSpec spec =
        exchange_spec(std::vector<FactorKind>(pairs, FactorKind::ExchangeG), 0.43);
    CHECK(resource_report(build_staircase(spec)).counts_by_kind.at("genexp:ZG") ==
          2 * (pairs - 1));
    CHECK(phase_distance(circuit_unitary(build_staircase(spec)),
                         expm_generator(hhat_closed_form(spec), 0.43)) <
          kTolComposed);
  }
}

TEST_CASE("remainder terms commute with the string") {
  for (int n = 1; n <= 4; ++n) {
    const ChainSpec spec = mc_spec(n, 0.3);
    const Matrix hbar = hbar_closed_form(spec);
    const Matrix res = residue_closed_form(spec);
    CHECK(max_abs(res * hbar - hbar * res) < kTolIdentity);
  }
  for (int pairs = 2; pairs <= 3; ++pairs) {
    const ChainSpec spec =
        exchange_spec(std::vector<FactorKind>(pairs, FactorKind::ExchangeG), 0.3);
    const Matrix hbar = hbar_closed_form(spec);
    const Matrix res = residue_closed_form(spec);
    CHECK(max_abs(res * hbar - hbar * res) < kTolIdentity);
  }
}

TEST_CASE("default mirrors flip the string and keep the remainder") {
  for (int n = 1; n <= 3; ++n) {
    const ChainSpec spec = mc_spec(n, 0.3);
    const Gate m = default_mirror(spec);
    CHECK(m.generator == "X");
    const Matrix mu =
        embed(gate_unitary(m), {m.qubits[0].index}, spec.num_register());
    CHECK(max_abs(mu.adjoint() * hhat_closed_form(spec) * mu +
                  hbar_closed_form(spec) - residue_closed_form(spec)) <
          kTolIdentity);
  }
  const ChainSpec spec =
      exchange_spec({FactorKind::ExchangeG, FactorKind::ExchangeG}, 0.3);
  const Gate m = default_mirror(spec);
  CHECK(m.generator == "Z");
  CHECK(m.qubits[0].index == spec.num_register() - 1);
}

TEST_CASE("decoupling realizes the doubled string rotation") {
  for (double alpha : {0.3, M_PI / 4.0, 1.1}) {
    for (int n = 1; n <= 4; ++n) {
      const ChainSpec spec = mc_spec(n, alpha);
      const Circuit c = build_decoupling(spec);
      CHECK(resource_report(c).counts_by_kind.at("rptoffoli") == 4 * n);
      CHECK(phase_distance(circuit_unitary(c),
                           expm_generator(hbar_closed_form(spec), 2 * alpha)) <
            kTolComposed);
    }
  }
}

TEST_CASE("decoupling on full-rank chains reduces to a staircase") {
  const ChainSpec spec = pauli_spec("XZY", 0.4, Backend::ISwap);
  const Circuit c = build_decoupling(spec);
  CHECK(entangler_count(c) == 4);  // 2(n-1) entanglers, no echo
  CHECK(phase_distance(circuit_unitary(c),
                       expm_generator(hhat_closed_form(spec), 0.8)) <
        kTolComposed);
}

TEST_CASE("a wrong mirror is rejected") {
  ChainSpec spec = mc_spec(2, 0.3);
  spec.mirror = Gate{GateKind::LocalRot, {reg(0)}, M_PI / 2.0, "Z"};
  CHECK_THROWS_AS(build_decoupling(spec), std::invalid_argument);
}

TEST_CASE("condition tree shapes") {
  auto bit = [](int i) { return ConditionRef{FactorKind::ProjOne, {reg(i)}}; };
  // Two conditions: a single tree gate.
  {
    const ConditionTree t = build_ctot({bit(0), bit(1)}, 0, GateKind::Toffoli);
    CHECK(t.gates.size() == 1);
    CHECK(t.root == anc(0));
  }
  // Four conditions: two leaves plus the root joiner, depth two.
  {
    const ConditionTree t =
        build_ctot({bit(0), bit(1), bit(2), bit(3)}, 0, GateKind::Toffoli);
    CHECK(t.gates.size() == 3);
    Circuit c;
    c.num_register = 4;
    c.num_ancilla = t.ancillas_used;
    c.gates = t.gates;
    CHECK(entangler_depth(c) == 2);
  }
  // Eight conditions: seven gates in three layers.
  {
    std::vector<ConditionRef> conditions;
    for (int i = 0; i < 8; ++i) conditions.push_back(bit(i));
    const ConditionTree t = build_ctot(conditions, 0, GateKind::Toffoli);
    CHECK(t.gates.size() == 7);
    Circuit c;
    c.num_register = 8;
    c.num_ancilla = t.ancillas_used;
    c.gates = t.gates;
    CHECK(entangler_depth(c) == 3);
  }
}

TEST_CASE("merge tree composes full-rank strings in logarithmic depth") {
  for (int n : {2, 4, 8}) {
    ChainSpec spec = pauli_spec(std::string(n, 'X'), 0.6, Backend::Cnot);
    const MergeTree tree = build_utot(spec);
    Circuit c;
    c.num_register = n;
    c.gates = tree.gates;
    CHECK(entangler_depth(c) == (n == 2 ? 1 : n == 4 ? 2 : 3));
    CHECK(entangler_count(c) == n - 1);
  }
  // Oracle: U_tot^dag R1 U_tot equals the full string.
  ChainSpec spec = pauli_spec("ZZZZ", 0.6, Backend::Cnot);
  const MergeTree tree = build_utot(spec);
  Circuit opening;
  opening.num_register = 4;
  opening.gates = tree.gates;
  const Matrix w = circuit_unitary(opening);
  const Matrix lhs = w.adjoint() * embed(pauli_z(), {0}, 4) * w;
  Matrix target = identity(16);
  for (int i = 0; i < 4; ++i) target = target * embed(pauli_z(), {i}, 4);
  CHECK(max_abs(lhs - target) < kTolComposed);
}

TEST_CASE("selection keeps ancillas clean and applies the string rotation") {
  for (int n : {2, 3, 5}) {
    ChainSpec spec = pauli_spec(std::string(n, 'X'), 0.7, Backend::ISwap);
    spec.protocol = Protocol::Selection;
    const Circuit c = build_selection(spec);
    CHECK(c.num_ancilla == 0);
    Matrix target = identity(1);
    for (int i = 0; i < n; ++i) target = tensor(target, pauli_x());
    const VerificationResult res =
        verify_equivalence(c, expm_generator(target, 0.7), 1e-10);
    CHECK(res.passed);
  }
  for (int n : {2, 3, 4}) {
    const ChainSpec spec = mc_spec(n, 0.0);
    const Circuit c = build_selection(spec);
    CHECK(c.num_ancilla == n - 1);
    CHECK(resource_report(c).counts_by_kind.at("toffoli") == 2 * (n - 1));
  }
  for (int pairs : {2, 3}) {
    ChainSpec spec =
        exchange_spec(std::vector<FactorKind>(pairs, FactorKind::ExchangeG), 0.45);
    spec.protocol = Protocol::Selection;
    const Circuit c = build_selection(spec);
    Matrix h = identity(1);
    for (int p = 0; p < pairs; ++p)
      h = tensor(h, make_factor(FactorKind::ExchangeG).matrix_r);
    const VerificationResult res =
        verify_equivalence(c, expm_generator(h, 0.45), 1e-10);
    CHECK(res.passed);
    CHECK(res.subspace_leakage < 1e-12);
  }
}

TEST_CASE("selection with mixed register and ancilla controls") {
  // Three conditions leave one promoted to the second tree level.
  const ChainSpec spec = mc_spec(3, 0.0);
  const Circuit c = build_selection(spec);
  bool mixed = false;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::Toffoli &&
        g.qubits[0].role != g.qubits[1].role)
      mixed = true;
  CHECK(mixed);
}

TEST_CASE("chain spec placements match the declared family") {
  const ChainSpec spec =
      exchange_spec({FactorKind::ExchangeG, FactorKind::ExchangeF}, 0.1);
  const auto placements = spec.placements();
  REQUIRE(placements.size() == 2);
  CHECK(placements[0].second == std::vector<int>{0, 1});
  CHECK(placements[1].second == std::vector<int>{2, 3});
  CHECK(placements[1].first.tag == "F");
}
