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
#include "qchain/families.hpp"
#include "qchain/verify.hpp"

using namespace qchain;

namespace {

int kind_count(const Circuit& c, const std::string& key) {
  const auto counts = resource_report(c).counts_by_kind;
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

std::vector<FactorKind> axes_of(const std::string& s) {
  std::vector<FactorKind> out;
  for (char ch : s) out.push_back(factor_kind_from_name(std::string(1, ch)));
  return out;
}

}  // namespace

TEST_CASE("single-site string is one local rotation") {
  const Circuit c =
      synth_pauli_string(axes_of("Y"), 0.9, Backend::Cnot, Protocol::Staircase);
  CHECK(c.gates.size() == 1);
  CHECK(phase_distance(circuit_unitary(c), expm_generator(pauli_y(), 0.9)) <
        kTolComposed);
}

TEST_CASE("pauli string synthesis across backends and protocols") {
  for (Backend b : {Backend::Cnot, Backend::Msg, Backend::ISwap}) {
    for (Protocol p : {Protocol::Staircase, Protocol::Selection}) {
      FamilySpec spec;
      spec.family = "pauli";
      spec.axes = axes_of("XZYX");
      spec.alpha = 0.6;
      spec.backend = b;
      spec.protocol = p;
      const Circuit c = synth(spec);
      CHECK(resource_report(c).entanglers == 6);
      CHECK(verify_equivalence(c, target_unitary(spec), 1e-10).passed);
    }
  }
}

TEST_CASE("cnot ladder for an all-Z string matches the direct exponential") {
  FamilySpec spec;
  spec.family = "pauli";
  spec.axes = axes_of("ZZZZ");
  spec.alpha = 0.8;
  spec.protocol = Protocol::Staircase;
  const Circuit c = synth(spec);
  CHECK(kind_count(c, "cnot") == 6);
  CHECK(c.gates.size() == 7);  // pure entangler ladder around one rotation
  CHECK(verify_equivalence(c, target_unitary(spec), 1e-10).passed);
}

TEST_CASE("multi-control synthesis") {
  SUBCASE("selection builds the exact Toffoli for two controls") {
    const Circuit c = synth_multicontrol(2, McTarget::X, Protocol::Selection,
                                         PhaseMode::Exact, 0.0);
    CHECK(kind_count(c, "toffoli") == 2);
    Matrix ccx = identity(8);
    ccx(6, 6) = 0; ccx(7, 7) = 0; ccx(6, 7) = 1; ccx(7, 6) = 1;
    const VerificationResult res = verify_equivalence(c, ccx, 1e-10);
    CHECK(res.passed);
    CHECK(res.subspace_leakage < 1e-12);
  }
  SUBCASE("phaseless echo counts and lowering ratio") {
    for (int n = 2; n <= 4; ++n) {
      const Circuit c = synth_multicontrol(n, McTarget::X, Protocol::Decoupling,
                                           PhaseMode::Exact, 0.0);
      CHECK(kind_count(c, "rptoffoli") == 4 * n - 2);
      const Circuit low = lower_to_backend(c, Backend::Cnot);
      CHECK(kind_count(low, "cnot") == 16 * n - 8);
      FamilySpec spec;
      spec.family = "mcx";
      spec.num_controls = n;
      spec.protocol = Protocol::Decoupling;
      CHECK(verify_equivalence(low, target_unitary(spec), 1e-9).passed);
    }
  }
  SUBCASE("conditioned rotation under both protocols") {
    for (Protocol p : {Protocol::Decoupling, Protocol::Selection}) {
      FamilySpec spec;
      spec.family = "mcx";
      spec.num_controls = 3;
      spec.mc_target = McTarget::Rotation;
      spec.alpha = 0.45;
      spec.protocol = p;
      const Circuit c = synth(spec);
      CHECK(verify_equivalence(c, target_unitary(spec), 1e-9).passed);
    }
  }
  SUBCASE("relative mode differs from exact only by a diagonal") {
    const Circuit rel = synth_multicontrol(3, McTarget::X, Protocol::Decoupling,
                                           PhaseMode::Relative, 0.0);
    CHECK(kind_count(rel, "rptoffoli") == 6);
    FamilySpec spec;
    spec.family = "mcx";
    spec.num_controls = 3;
    const Matrix ratio = circuit_unitary(rel) * target_unitary(spec).adjoint();
    for (Eigen::Index i = 0; i < ratio.rows(); ++i)
      for (Eigen::Index j = 0; j < ratio.cols(); ++j) {
        if (i == j) {
          CHECK(std::abs(std::abs(ratio(i, j)) - 1.0) < 1e-10);
        } else {
          CHECK(std::abs(ratio(i, j)) < 1e-10);
        }
      }
  }
  SUBCASE("control counts below two are rejected") {
    CHECK_THROWS_AS(synth_multicontrol(1, McTarget::X, Protocol::Selection,
                                       PhaseMode::Exact, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("number-conserving synthesis") {
  SUBCASE("two exchange pairs under the echo") {
    FamilySpec spec;
    spec.family = "numcons";
    spec.pair_kinds = {FactorKind::ExchangeG, FactorKind::ExchangeG};
    spec.alpha = 0.55;
    spec.protocol = Protocol::Decoupling;
    const Circuit c = synth(spec);
    CHECK(kind_count(c, "genexp:ZG") == 4);  // 2n-4 with n = 4 qubits
    CHECK(verify_equivalence(c, target_unitary(spec), 1e-9).passed);
  }
  SUBCASE("mixed kinds and the parity coupling") {
    for (auto kinds :
         {std::vector<FactorKind>{FactorKind::ExchangeF, FactorKind::ExchangeG},
          std::vector<FactorKind>{FactorKind::ParityPair, FactorKind::ExchangeG,
                                  FactorKind::ExchangeF}}) {
      FamilySpec spec;
      spec.family = "numcons";
      spec.pair_kinds = kinds;
      spec.alpha = 0.4;
      spec.protocol = Protocol::Decoupling;
      CHECK(verify_equivalence(synth(spec), target_unitary(spec), 1e-9).passed);
    }
  }
  SUBCASE("parity coupling appears in the target") {
    // With the first pair switched to the parity kind the string transfers
    // |00> <-> |11| on that pair.
    Matrix h = tensor(make_factor(FactorKind::ParityPair).matrix_r,
                      make_factor(FactorKind::ExchangeG).matrix_r);
    CHECK(std::abs(h(0 * 4 + 1, 3 * 4 + 2) - cplx{1, 0}) < kTolIdentity);
    FamilySpec spec;
    spec.family = "numcons";
    spec.pair_kinds = {FactorKind::ParityPair, FactorKind::ExchangeG};
    spec.alpha = 0.3;
    spec.protocol = Protocol::Decoupling;
    CHECK(max_abs(target_unitary(spec) -
                  expm_generator(h, 0.6)) < kTolIdentity);
  }
  SUBCASE("odd qubit counts are rejected") {
    CHECK_THROWS_AS(
        synth_number_conserving({FactorKind::ExchangeG}, 0.3, Protocol::Decoupling),
        std::invalid_argument);
  }
  SUBCASE("selection variant") {
    FamilySpec spec;
    spec.family = "numcons";
    spec.pair_kinds = {FactorKind::ExchangeG, FactorKind::ExchangeF,
                       FactorKind::ExchangeG};
    spec.alpha = 0.5;
    spec.protocol = Protocol::Selection;
    const VerificationResult res =
        verify_equivalence(synth(spec), target_unitary(spec), 1e-9);
    CHECK(res.passed);
    CHECK(res.subspace_leakage < 1e-12);
  }
}

TEST_CASE("ucc synthesis") {
  SUBCASE("coupling matrix") {
    // UCC(1,1) couples |10> and |01>: the exchange factor G.
    CHECK(max_abs(ucc_operator(1, 1) - make_factor(FactorKind::ExchangeG).matrix_r) <
          kTolIdentity);
  }
  SUBCASE("echo realizes the doubled coupling with exact counts") {
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
      FamilySpec spec;
      spec.family = "ucc";
      spec.ucc_m = m;
      spec.ucc_n = n;
      spec.alpha = 0.35;
      spec.protocol = Protocol::Decoupling;
      const Circuit c = synth(spec);
      CHECK(kind_count(c, "rptoffoli") == 4 * (m + n));
      CHECK(kind_count(c, "iswap") == 4 * (m + n - 1));
      CHECK(kind_count(c, "toffoli") == 0);
      const VerificationResult res =
          verify_equivalence(c, target_unitary(spec), 1e-9);
      CHECK(res.passed);
      CHECK(res.subspace_leakage < 1e-10);
    }
  }
  SUBCASE("zero angle acts as the identity") {
    FamilySpec spec;
    spec.family = "ucc";
    spec.ucc_m = 1;
    spec.ucc_n = 1;
    spec.alpha = 0.0;
    spec.protocol = Protocol::Decoupling;
    const VerificationResult res =
        verify_equivalence(synth(spec), identity(4), 1e-10);
    CHECK(res.passed);
  }
  SUBCASE("selection arms keep the oracle") {
    FamilySpec spec;
    spec.family = "ucc";
    spec.ucc_m = 2;
    spec.ucc_n = 1;
    spec.alpha = 0.5;
    spec.protocol = Protocol::Selection;
    CHECK(verify_equivalence(synth(spec), target_unitary(spec), 1e-9).passed);
  }
}

TEST_CASE("ucc baseline") {
  SUBCASE("term expansion") {
    const auto terms11 = ucc_pauli_terms(1, 1);
    REQUIRE(terms11.size() == 2);
    // (X X + Y Y)/2.
    CHECK(terms11[0].second == doctest::Approx(0.5));
    CHECK(ucc_pauli_terms(2, 1).size() == 4);
    CHECK(ucc_pauli_terms(3, 2).size() == 16);
  }
  SUBCASE("terms commute pairwise") {
    const auto terms = ucc_pauli_terms(2, 2);
    std::vector<Matrix> mats;
    for (const auto& [axes, coeff] : terms) {
      Matrix h = identity(1);
      for (FactorKind a : axes) h = tensor(h, make_factor(a).matrix_r);
      mats.push_back(coeff * h);
    }
    double worst = 0.0;
    for (size_t i = 0; i < mats.size(); ++i)
      for (size_t j = i + 1; j < mats.size(); ++j)
        worst = std::max(worst, max_abs(mats[i] * mats[j] - mats[j] * mats[i]));
    CHECK(worst < 1e-14);
    // The weighted terms sum back to the coupling.
    Matrix sum = Matrix::Zero(16, 16);
    for (const Matrix& m : mats) sum += m;
    CHECK(max_abs(sum - ucc_operator(2, 2)) < kTolIdentity);
  }
  SUBCASE("baseline circuit matches the direct exponential") {
    FamilySpec spec;
    spec.family = "ucc-baseline";
    spec.ucc_m = 1;
    spec.ucc_n = 2;
    spec.alpha = 0.8;
    spec.protocol = Protocol::Staircase;
    CHECK(verify_equivalence(synth(spec), target_unitary(spec), 1e-9).passed);
  }
  SUBCASE("baseline and echo agree at matched angles") {
    FamilySpec echo;
    echo.family = "ucc";
    echo.ucc_m = 2;
    echo.ucc_n = 1;
    echo.alpha = 0.35;
    echo.protocol = Protocol::Decoupling;
    FamilySpec base = echo;
    base.family = "ucc-baseline";
    base.alpha = 0.7;
    base.protocol = Protocol::Staircase;
    const Matrix direct = circuit_unitary(synth(base));
    CHECK(verify_equivalence(synth(echo), direct, 1e-9).passed);
  }
}
