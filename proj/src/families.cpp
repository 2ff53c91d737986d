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

#include "qchain/families.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qchain {

std::string mc_target_name(McTarget t) {
  switch (t) {
    case McTarget::X: return "x";
    case McTarget::Z: return "z";
    case McTarget::Rotation: return "rotation";
  }
  throw std::logic_error("mc_target_name: unknown target");
}

McTarget mc_target_from_name(const std::string& name) {
  if (name == "x") return McTarget::X;
  if (name == "z") return McTarget::Z;
  if (name == "rotation") return McTarget::Rotation;
  throw std::invalid_argument("unknown multi-control target: " + name);
}

namespace {

void append_gates(std::vector<Gate>& out, const std::vector<Gate>& gates) {
  out.insert(out.end(), gates.begin(), gates.end());
}

void append_adjoint(std::vector<Gate>& out, const std::vector<Gate>& gates) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    out.push_back(adjoint(*it));
}

void append_hadamard(std::vector<Gate>& out, const QubitRef& q) {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  append_unitary1q(out, q, h);
}

ChainSpec pauli_chain(const std::vector<FactorKind>& axes, double alpha,
                      Backend backend, Protocol protocol) {
  ChainSpec spec;
  spec.family = ChainFamily::PauliString;
  spec.pauli_axes = axes;
  spec.alpha = alpha;
  spec.backend = backend;
  spec.protocol = protocol;
  return spec;
}

ChainSpec mc_chain(int num_controls, double alpha) {
  ChainSpec spec;
  spec.family = ChainFamily::MultiControl;
  spec.num_controls = num_controls;
  spec.alpha = alpha;
  return spec;
}

ChainSpec exchange_chain(const std::vector<FactorKind>& kinds, double alpha,
                         Protocol protocol) {
  ChainSpec spec;
  spec.family = ChainFamily::ExchangePairs;
  spec.pair_kinds = kinds;
  spec.alpha = alpha;
  spec.protocol = protocol;
  return spec;
}

}  // namespace

Circuit synth_pauli_string(const std::vector<FactorKind>& axes, double alpha,
                           Backend backend, Protocol protocol) {
  if (axes.empty())
    throw std::invalid_argument("synth_pauli_string: need at least one axis");
  if (axes.size() == 1) {
    Circuit c;
    c.num_register = 1;
    append_local(c.gates, reg(0), factor_kind_name(axes[0]),
                 protocol == Protocol::Decoupling ? 2.0 * alpha : alpha);
    return c;
  }
  const ChainSpec spec = pauli_chain(axes, alpha, backend, protocol);
  switch (protocol) {
    case Protocol::Staircase: return build_staircase(spec);
    case Protocol::Decoupling: return build_decoupling(spec);
    case Protocol::Selection: return build_selection(spec);
  }
  throw std::logic_error("synth_pauli_string: unknown protocol");
}

namespace {

// Asymmetric echo for the phaseless multi-controlled Z: the inverse arm of
// length n - 1 carries the same remainder terms as the length-n arm, so the
// product [H_n]^{pi/2} [H_{n-1}]^{-pi/2} cancels them and leaves exactly
// C^n Z on the last qubit (4n - 2 Toffolis, spare qubit restored).
Circuit mc_phaseless_z(int n) {
  Circuit c;
  c.num_register = n + 2;
  append_gates(c.gates, build_staircase(mc_chain(n - 1, -M_PI / 2.0)).gates);
  append_gates(c.gates, build_staircase(mc_chain(n, M_PI / 2.0)).gates);
  return c;
}

Circuit mc_relative_z(int n) {
  Circuit c;
  c.num_register = n + 2;
  append_gates(c.gates, build_staircase(mc_chain(n, M_PI / 2.0)).gates);
  return c;
}

}  // namespace

Circuit synth_multicontrol(int num_controls, McTarget target, Protocol protocol,
                           PhaseMode mode, double alpha) {
  const int n = num_controls;
  if (n < 2)
    throw std::invalid_argument("synth_multicontrol: need at least two controls");
  if (protocol == Protocol::Selection) {
    if (target == McTarget::X) return build_selection(mc_chain(n, alpha));
    if (target == McTarget::Z) {
      Circuit c = build_selection(mc_chain(n, alpha));
      Circuit out;
      out.num_register = c.num_register;
      out.num_ancilla = c.num_ancilla;
      append_hadamard(out.gates, reg(n));
      append_gates(out.gates, c.gates);
      append_hadamard(out.gates, reg(n));
      return out;
    }
    // Conditioned rotation: the tree gathers the controls, the central gate
    // rotates the target about X under the root ancilla.
    std::vector<ConditionRef> conditions;
    for (int i = 0; i < n; ++i)
      conditions.push_back({FactorKind::ProjOne, {reg(i)}});
    ConditionTree tree = build_ctot(conditions, 0, GateKind::Toffoli);
    Circuit c;
    c.num_register = n + 1;
    c.num_ancilla = tree.ancillas_used;
    append_gates(c.gates, tree.gates);
    c.gates.push_back(Gate{GateKind::GenExp, {tree.root, reg(n)}, alpha, "PX"});
    append_adjoint(c.gates, tree.gates);
    return c;
  }
  if (protocol == Protocol::Staircase || target == McTarget::Rotation) {
    ChainSpec spec = mc_chain(n, alpha);
    return protocol == Protocol::Staircase ? build_staircase(spec)
                                           : build_decoupling(spec);
  }
  // Decoupling with a discrete X/Z target.
  Circuit z = mode == PhaseMode::Exact ? mc_phaseless_z(n) : mc_relative_z(n);
  if (target == McTarget::Z) return z;
  Circuit out;
  out.num_register = z.num_register;
  append_hadamard(out.gates, reg(n + 1));
  append_gates(out.gates, z.gates);
  append_hadamard(out.gates, reg(n + 1));
  return out;
}

Circuit synth_number_conserving(const std::vector<FactorKind>& pair_kinds,
                                double alpha, Protocol protocol) {
  const ChainSpec spec = exchange_chain(pair_kinds, alpha, protocol);
  switch (protocol) {
    case Protocol::Staircase: return build_staircase(spec);
    case Protocol::Decoupling: return build_decoupling(spec);
    case Protocol::Selection: return build_selection(spec);
  }
  throw std::logic_error("synth_number_conserving: unknown protocol");
}

namespace {

// Writes the cyclic pair-difference conditions of the target configuration
// into the parity ancillas: bit 1+i holds [x_i xor x_{i+1 mod k} == d_i].
// These conditions commute with the full-register X string, so one tree per
// echo arm serves both entangler instances.
std::vector<Gate> ucc_condition_extraction(int m, int n) {
  const int k = m + n;
  std::vector<Gate> out;
  for (int i = 0; i < k; ++i) {
    const bool qi = i < m;
    const bool qj = ((i + 1) % k) < m;
    const bool want = qi != qj;
    out.push_back(Gate{GateKind::Cnot, {reg(i), anc(1 + i)}, 0.0, ""});
    out.push_back(Gate{GateKind::Cnot, {reg((i + 1) % k), anc(1 + i)}, 0.0, ""});
    if (!want)
      out.push_back(Gate{GateKind::LocalRot, {anc(1 + i)}, M_PI / 2.0, "X"});
  }
  return out;
}

}  // namespace

Circuit synth_ucc(int m, int n, double alpha, Protocol protocol, Backend backend) {
  if (m < 1 || n < 1) throw std::invalid_argument("synth_ucc: need m, n >= 1");
  if (protocol == Protocol::Staircase)
    throw std::invalid_argument("synth_ucc: staircase alone cannot isolate the coupling");
  const int k = m + n;
  const QubitRef coupler = anc(0);

  const std::vector<Gate> extraction = ucc_condition_extraction(m, n);
  std::vector<ConditionRef> conditions;
  for (int i = 0; i < k; ++i)
    conditions.push_back({FactorKind::ProjOne, {anc(1 + i)}});
  const ConditionTree tree =
      build_ctot(conditions, 1 + k, GateKind::RelPhaseToffoli);
  const Gate entangler{GateKind::RelPhaseToffoli,
                       {reg(0), tree.root, coupler},
                       M_PI / 2.0,
                       ""};

  const std::vector<FactorKind> all_x(k, FactorKind::PauliX);
  const Protocol arm_protocol =
      protocol == Protocol::Selection ? Protocol::Selection : Protocol::Staircase;
  auto arm = [&](double theta) {
    std::vector<Gate> out;
    append_gates(out, extraction);
    append_gates(out, tree.gates);
    out.push_back(entangler);
    append_gates(out, synth_pauli_string(all_x, theta, backend, arm_protocol).gates);
    out.push_back(adjoint(entangler));
    append_adjoint(out, tree.gates);
    append_adjoint(out, extraction);
    return out;
  };

  Circuit c;
  c.num_register = k;
  c.num_ancilla = 1 + k + tree.ancillas_used;
  const Gate mirror{GateKind::LocalRot, {coupler}, M_PI / 2.0, "Z"};
  const Gate frame{GateKind::LocalRot, {reg(0)}, M_PI / 4.0, "Z"};
  c.gates.push_back(frame);
  append_hadamard(c.gates, coupler);
  c.gates.push_back(mirror);
  append_gates(c.gates, arm(-alpha));
  c.gates.push_back(adjoint(mirror));
  append_gates(c.gates, arm(alpha));
  append_hadamard(c.gates, coupler);
  c.gates.push_back(adjoint(frame));
  return c;
}

std::vector<std::pair<std::vector<FactorKind>, double>> ucc_pauli_terms(int m,
                                                                        int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("ucc_pauli_terms: need m, n >= 1");
  const int k = m + n;
  if (k > 10) throw std::invalid_argument("ucc_pauli_terms: m + n capped at 10");
  std::vector<std::pair<std::vector<FactorKind>, double>> terms;
  const double scale = std::pow(2.0, 1 - k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int y_plus = 0, y_minus = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) (i < m ? y_plus : y_minus)++;
    if ((y_plus + y_minus) % 2 != 0) continue;
    // Re(i^{y_minus - y_plus}) for an even exponent is +-1.
    const int d = ((y_minus - y_plus) % 4 + 4) % 4;
    const double coeff = (d == 0 ? 1.0 : -1.0) * scale;
    std::vector<FactorKind> axes(k, FactorKind::PauliX);
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) axes[i] = FactorKind::PauliY;
    terms.push_back({axes, coeff});
  }
  return terms;
}

Circuit trotter_ucc_baseline(int m, int n, double alpha, Backend backend) {
  const auto terms = ucc_pauli_terms(m, n);
  Circuit c;
  c.num_register = m + n;
  for (const auto& [axes, coeff] : terms)
    append_gates(c.gates,
                 synth_pauli_string(axes, alpha * coeff, backend,
                                    Protocol::Staircase)
                     .gates);
  return c;
}

Matrix ucc_operator(int m, int n) {
  const int k = m + n;
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::Index q = 0;
  for (int i = 0; i < m; ++i) q |= Eigen::Index{1} << (k - 1 - i);
  const Eigen::Index qbar = (dim - 1) ^ q;
  Matrix op = Matrix::Zero(dim, dim);
  op(q, qbar) = 1.0;
  op(qbar, q) = 1.0;
  return op;
}

Circuit synth(const FamilySpec& spec) {
  if (spec.family == "pauli")
    return synth_pauli_string(spec.axes, spec.alpha, spec.backend, spec.protocol);
  if (spec.family == "mcx")
    return synth_multicontrol(spec.num_controls, spec.mc_target, spec.protocol,
                              spec.phase_mode, spec.alpha);
  if (spec.family == "numcons")
    return synth_number_conserving(spec.pair_kinds, spec.alpha, spec.protocol);
  if (spec.family == "ucc")
    return synth_ucc(spec.ucc_m, spec.ucc_n, spec.alpha, spec.protocol);
  if (spec.family == "ucc-baseline")
    return trotter_ucc_baseline(spec.ucc_m, spec.ucc_n, spec.alpha);
  throw std::invalid_argument("unknown family: " + spec.family);
}

namespace {

Matrix pauli_product(const std::vector<FactorKind>& axes) {
  Matrix h = identity(1);
  for (FactorKind a : axes) h = tensor(h, make_factor(a).matrix_r);
  return h;
}

Matrix controlled_flip(int num_controls, int width, int target,
                       const Matrix& flip) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  Matrix q = identity(dim);
  for (int i = 0; i < num_controls; ++i) q = q * embed(proj_one(), {i}, width);
  return identity(dim) - q + q * embed(flip, {target}, width);
}

}  // namespace

Matrix target_unitary(const FamilySpec& spec) {
  const double eff_alpha =
      spec.protocol == Protocol::Decoupling ? 2.0 * spec.alpha : spec.alpha;
  if (spec.family == "pauli") {
    if (static_cast<int>(spec.axes.size()) > 12)
      throw std::invalid_argument("target_unitary: register capped at 12 qubits");
    return expm_generator(pauli_product(spec.axes), eff_alpha);
  }
  if (spec.family == "mcx") {
    const int n = spec.num_controls;
    const int width = spec.protocol == Protocol::Selection ? n + 1 : n + 2;
    if (width > 12)
      throw std::invalid_argument("target_unitary: register capped at 12 qubits");
    const int target = width - 1;
    if (spec.mc_target == McTarget::X)
      return controlled_flip(n, width, target, pauli_x());
    if (spec.mc_target == McTarget::Z)
      return controlled_flip(n, width, target, pauli_z());
    if (spec.protocol == Protocol::Selection) {
      Matrix gen = identity(Eigen::Index{1} << width);
      for (int i = 0; i < n; ++i) gen = gen * embed(proj_one(), {i}, width);
      gen = gen * embed(pauli_x(), {target}, width);
      return expm_generator(gen, spec.alpha);
    }
    ChainSpec chain;
    chain.family = ChainFamily::MultiControl;
    chain.num_controls = n;
    const Matrix gen = spec.protocol == Protocol::Staircase
                           ? hhat_closed_form(chain)
                           : hbar_closed_form(chain);
    return expm_generator(gen, eff_alpha);
  }
  if (spec.family == "numcons") {
    const int width = 2 * static_cast<int>(spec.pair_kinds.size());
    if (width > 12)
      throw std::invalid_argument("target_unitary: register capped at 12 qubits");
    if (spec.protocol == Protocol::Staircase) {
      ChainSpec chain;
      chain.family = ChainFamily::ExchangePairs;
      chain.pair_kinds = spec.pair_kinds;
      return expm_generator(hhat_closed_form(chain), eff_alpha);
    }
    Matrix h = identity(1);
    for (FactorKind k : spec.pair_kinds) h = tensor(h, make_factor(k).matrix_r);
    return expm_generator(h, eff_alpha);
  }
  if (spec.family == "ucc") {
    if (spec.ucc_m + spec.ucc_n > 12)
      throw std::invalid_argument("target_unitary: register capped at 12 qubits");
    return expm_generator(ucc_operator(spec.ucc_m, spec.ucc_n), 2.0 * spec.alpha);
  }
  if (spec.family == "ucc-baseline") {
    if (spec.ucc_m + spec.ucc_n > 12)
      throw std::invalid_argument("target_unitary: register capped at 12 qubits");
    return expm_generator(ucc_operator(spec.ucc_m, spec.ucc_n), spec.alpha);
  }
  throw std::invalid_argument("unknown family: " + spec.family);
}

}  // namespace qchain
