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

#include <optional>
#include <vector>

#include "qchain/circuit.hpp"
#include "qchain/factors.hpp"

namespace qchain {

enum class Protocol { Staircase, Decoupling, Selection };
std::string protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

enum class ChainFamily {
  PauliString,     // full-rank single-site factors
  MultiControl,    // projector controls with a two-site chain end
  ExchangePairs,   // two-site exchange factors on qubit pairs
};

// Declarative description of a target operator string. The factor content
// depends on the family:
//   PauliString:   pauli_axes, one per register qubit
//   MultiControl:  num_controls projector factors; the chain end adds two
//                  qubits (register width num_controls + 2)
//   ExchangePairs: pair_kinds, one per qubit pair (register width 2m)
struct ChainSpec {
  ChainFamily family = ChainFamily::PauliString;
  std::vector<FactorKind> pauli_axes;
  int num_controls = 0;
  std::vector<FactorKind> pair_kinds;
  double alpha = M_PI / 4.0;
  Backend backend = Backend::Cnot;
  Protocol protocol = Protocol::Staircase;
  std::optional<Gate> mirror;

  int num_register() const;
  int chain_length() const;  // number of chaining steps in the staircase
  // Ordered factor placements (register qubits per factor).
  std::vector<std::pair<HermitianFactor, std::vector<int>>> placements() const;
};

// Nested conjugation (prod U^dag) [R1]^alpha (prod U) realizing
// exp(-i alpha H_hat); exactly 2 * chain_length entanglers.
Circuit build_staircase(const ChainSpec& spec);

// Direct matrix evaluation of the operator the staircase composes: the full
// string plus the lower-order remainder terms. Used only as a verification
// reference, never by the builders.
Matrix hhat_closed_form(const ChainSpec& spec);
// The target string alone (leading term of hhat_closed_form).
Matrix hbar_closed_form(const ChainSpec& spec);
// hhat - hbar.
Matrix residue_closed_form(const ChainSpec& spec);

// Single-qubit mirror gate M with M^dag H_hat M = -H_bar + residue; flips the
// string while leaving the remainder terms alone. Falls back to a search
// over [X/Y/Z]^{+-pi/2} on the chain-end qubits. Throws if none passes.
Gate default_mirror(const ChainSpec& spec);

// Echo sequence [H_hat]^alpha M^dag [H_hat]^{-alpha} M realizing
// exp(-2 i alpha H_bar); exactly 4 * chain_length entanglers. Full-rank
// chains skip the echo and return a staircase at angle 2 alpha.
Circuit build_decoupling(const ChainSpec& spec);

// A support condition feeding the ancilla tree: either a register site
// described by its factor or an already-computed ancilla bit (ProjOne).
struct ConditionRef {
  FactorKind kind = FactorKind::ProjOne;
  std::vector<QubitRef> qubits;
};

// Balanced binary tree combining the conditions pairwise into fresh
// ancillas (leaves first, root written last). Uses n - 1 tree gates for n
// conditions at entangler-layer depth ceil(log2 n). Returns the gates in
// application order plus the root ancilla.
struct ConditionTree {
  std::vector<Gate> gates;
  QubitRef root;
  int ancillas_used = 0;
};
ConditionTree build_ctot(const std::vector<ConditionRef>& conditions,
                         int first_ancilla, GateKind two_bit_gate);

// Binary merge tree of chaining entanglers extending the string in parallel
// halves; entangler-layer depth ceil(log2 n) per side. Returned gates are in
// application order for the opening half (first index applied first); the
// closing half is their reversed adjoint. `final_kinds` reports the
// canonical factor kind left on each site/pair after all extensions.
struct MergeTree {
  std::vector<Gate> gates;
  std::vector<FactorKind> final_kinds;
};
MergeTree build_utot(const ChainSpec& spec);

// Ancilla-assisted selection sequence
//   U_tot^dag C_tot^dag (C [R1]^alpha) C_tot U_tot
// conditioning a single central rotation on the joint support of all
// factors; O(log n) entangler-layer depth. Full-rank chains use no
// ancillas.
Circuit build_selection(const ChainSpec& spec);

}  // namespace qchain
