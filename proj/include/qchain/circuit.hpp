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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qchain/factors.hpp"
#include "qchain/linalg.hpp"

namespace qchain {

enum class QubitRole { Register, Ancilla };

struct QubitRef {
  QubitRole role = QubitRole::Register;
  int index = 0;

  friend bool operator==(const QubitRef& a, const QubitRef& b) {
    return a.role == b.role && a.index == b.index;
  }
};

inline QubitRef reg(int index) { return {QubitRole::Register, index}; }
inline QubitRef anc(int index) { return {QubitRole::Ancilla, index}; }

enum class GateKind {
  Cnot,             // control, target
  Toffoli,          // control, control, target
  RelPhaseToffoli,  // [P P X]^angle on (control, control, target)
  ISwap,            // [G or F]^angle, generator tag selects G/F
  Msg,              // [X X]^angle
  LocalRot,         // [axis]^angle, generator tag is the axis name
  GenExp,           // [generator]^angle, generator from the factor registry
  SupportControlX,  // X on target iff all control sites are in support
};

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// A primitive or generator-exponential gate on named qubits. `generator`
// names the rotation axis (LocalRot), the exchange flavour (ISwap), the
// exponentiated generator (GenExp, e.g. "ZZ", "PX", "ZG", "PG"), or the
// control-factor list (SupportControlX, e.g. "G,G").
struct Gate {
  GateKind kind = GateKind::Cnot;
  std::vector<QubitRef> qubits;
  double angle = 0.0;
  std::string generator;
};

Gate adjoint(const Gate& g);

// Appends a single-qubit rotation [axis]^angle (no-op at angle 0).
void append_local(std::vector<Gate>& out, const QubitRef& q,
                  const std::string& axis, double angle);

// Appends an arbitrary single-qubit unitary as Z-Y-Z rotations in
// application order (global phase dropped).
void append_unitary1q(std::vector<Gate>& out, const QubitRef& q, const Matrix& u);

// Dense unitary of the gate on its qubit tuple (tuple order, first qubit
// slowest-varying). Unitary within 1e-12 for every kind.
Matrix gate_unitary(const Gate& g);

// True for multi-qubit gates; single-qubit gates are excluded from
// entangler counts and entangler-layer depth.
bool is_entangler(const Gate& g);

struct Circuit {
  int num_register = 0;
  int num_ancilla = 0;
  std::vector<Gate> gates;

  int width() const { return num_register + num_ancilla; }
  void append(const Circuit& other);

  friend bool operator==(const Circuit& a, const Circuit& b);
};

Circuit adjoint(const Circuit& c);

// Greedy left-to-right layering over all gates.
int depth(const Circuit& c);
// Same layering restricted to multi-qubit gates.
int entangler_depth(const Circuit& c);

struct ResourceReport {
  std::map<std::string, int> counts_by_kind;
  int total_gates = 0;
  int entanglers = 0;
  int exchange_two_qubit = 0;  // iSWAP-family two-qubit gates (G/F generated)
  int depth = 0;
  int entangler_depth = 0;
  int width = 0;
  int ancillas = 0;
};

ResourceReport resource_report(const Circuit& c);

enum class Backend { Cnot, Msg, ISwap };
std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

// Rewrites every gate into the backend's primitive two-qubit gate plus
// single-qubit gates, preserving the circuit unitary. Circuits already in
// backend primitives are returned unchanged. Throws std::invalid_argument
// for an unregistered (kind, backend) pair.
Circuit lower_to_backend(const Circuit& c, Backend backend);

// Serialization. JSON round-trips losslessly; QASM is OpenQASM-2.0-style
// text with the ancilla register declared separately as "anc".
std::string export_json(const Circuit& c);
Circuit import_json(const std::string& text);
std::string export_qasm(const Circuit& c);

}  // namespace qchain
