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

#include "qchain/protocol.hpp"

namespace qchain {

enum class McTarget { X, Z, Rotation };
std::string mc_target_name(McTarget t);
McTarget mc_target_from_name(const std::string& name);

enum class PhaseMode { Exact, Relative };

// exp(-i alpha prod sigma_axes) on axes.size() qubits; 2(n-1) entanglers
// per staircase arm, zero ancillas in the selection variant.
Circuit synth_pauli_string(const std::vector<FactorKind>& axes, double alpha,
                           Backend backend, Protocol protocol);

// Multi-controlled targets with num_controls >= 2 controls.
//   Decoupling + X/Z:     controls q0..q_{n-1}, spare q_n, target q_{n+1};
//                         Exact uses the asymmetric echo (4n-2 Toffolis),
//                         Relative a single staircase arm (2n Toffolis, the
//                         result differs from Exact by a diagonal).
//   Decoupling + Rotation: exp(-2 i alpha H) for the conditioned Z Z end
//                          rotation (4n Toffolis).
//   Selection:            controls q0..q_{n-1}, target q_n, n-1 ancillas,
//                         2(n-1) tree Toffolis.
Circuit synth_multicontrol(int num_controls, McTarget target, Protocol protocol,
                           PhaseMode mode, double alpha);

// String of two-site exchange factors on pairs (q_{2i}, q_{2i+1}).
// Decoupling realizes exp(-2 i alpha prod R_pair) with 2n-4 three-site
// entanglers for n qubits; ParityPair kinds select the parity-conserving
// coupling.
Circuit synth_number_conserving(const std::vector<FactorKind>& pair_kinds,
                                double alpha, Protocol protocol);

// Population-transfer coupling between |1^m 0^n> and |0^m 1^n>:
// exp(-2 i alpha UCC(m,n)) on the register with all ancillas restored.
// Built from two Pauli-string arms (4(m+n-1) backend entanglers) and four
// support-conditioned entangler instances sharing parity-condition trees
// (4(m+n) relative-phase Toffolis). `protocol` selects how the inner string
// arms are composed (Decoupling -> staircase arms, Selection -> merge trees).
Circuit synth_ucc(int m, int n, double alpha, Protocol protocol,
                  Backend backend = Backend::ISwap);

// Product-formula baseline: expands UCC(m,n) into its 2^{m+n-1} mutually
// commuting Pauli strings and composes each one; exact since the terms
// commute.
Circuit trotter_ucc_baseline(int m, int n, double alpha,
                             Backend backend = Backend::Cnot);

// The expansion used by the baseline: axes pattern and coefficient per term.
std::vector<std::pair<std::vector<FactorKind>, double>> ucc_pauli_terms(int m,
                                                                        int n);

// The Hermitian coupling |1^m 0^n><0^m 1^n| + h.c. as a dense matrix.
Matrix ucc_operator(int m, int n);

// Family menu for the command line and the verification oracle.
struct FamilySpec {
  std::string family;  // pauli | mcx | numcons | ucc | ucc-baseline
  std::vector<FactorKind> axes;
  int num_controls = 0;
  McTarget mc_target = McTarget::X;
  PhaseMode phase_mode = PhaseMode::Exact;
  std::vector<FactorKind> pair_kinds;
  int ucc_m = 1;
  int ucc_n = 1;
  double alpha = M_PI / 4.0;
  Backend backend = Backend::Cnot;
  Protocol protocol = Protocol::Decoupling;
};

Circuit synth(const FamilySpec& spec);

// Dense target unitary built directly from the family definition; the
// effective angle is 2 alpha for decoupling outputs and alpha otherwise.
// Register size capped at 12 qubits.
Matrix target_unitary(const FamilySpec& spec);

}  // namespace qchain
