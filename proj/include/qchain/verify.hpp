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

#pragma once

#include <string>
#include <vector>

#include "qchain/circuit.hpp"
#include "qchain/linalg.hpp"

namespace qchain {

// Applies a gate in place to a statevector over `total` qubits. Ancillas
// occupy the leading (slowest-varying) tensor slots, so the global position
// of ancilla i is i and of register j is num_ancilla + j; the ancilla
// |0...0> block is then the contiguous first 2^num_register indices.
void apply_gate(Vector& state, const Gate& g, int num_register, int num_ancilla);

void apply_circuit(Vector& state, const Circuit& c);

// Ordered product of embedded gate unitaries (first gate applied first),
// materialized column by column. Capped at 14 qubits.
Matrix circuit_unitary(const Circuit& c);

struct VerificationResult {
  double distance = 0.0;
  bool ancilla_preserved = true;
  double subspace_leakage = 0.0;
  bool passed = false;
  double tolerance = 0.0;
};

// Checks that the circuit acts as `target` on the register with every
// ancilla returning to |0...0>. `target` is a 2^num_register unitary.
// distance is phase-adjusted; leakage is the largest amplitude escaping the
// ancilla-zero block.
VerificationResult verify_equivalence(const Circuit& c, const Matrix& target,
                                      double tol);

struct IdentityCheck {
  std::string name;
  double residual;
};

// Conjugation identities behind every registered chaining entangler, plus
// randomized instances of the general tensor-product conjugation formula.
// Any regression in gate matrix definitions shows up here first.
std::vector<IdentityCheck> verify_identity_suite();

}  // namespace qchain
