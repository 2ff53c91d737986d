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

#include "qchain/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qchain/verify.hpp"

namespace qchain {

std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::Staircase: return "staircase";
    case Protocol::Decoupling: return "decoupling";
    case Protocol::Selection: return "selection";
  }
  throw std::logic_error("protocol_name: unknown protocol");
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "staircase") return Protocol::Staircase;
  if (name == "decoupling") return Protocol::Decoupling;
  if (name == "selection") return Protocol::Selection;
  throw std::invalid_argument("unknown protocol: " + name);
}

int ChainSpec::num_register() const {
  switch (family) {
    case ChainFamily::PauliString:
      return static_cast<int>(pauli_axes.size());
    case ChainFamily::MultiControl:
      return num_controls + 2;
    case ChainFamily::ExchangePairs:
      return 2 * static_cast<int>(pair_kinds.size());
  }
  return 0;
}

int ChainSpec::chain_length() const {
  switch (family) {
    case ChainFamily::PauliString:
      return static_cast<int>(pauli_axes.size()) - 1;
    case ChainFamily::MultiControl:
      return num_controls;
    case ChainFamily::ExchangePairs:
      return static_cast<int>(pair_kinds.size()) - 1;
  }
  return 0;
}

std::vector<std::pair<HermitianFactor, std::vector<int>>> ChainSpec::placements()
    const {
  std::vector<std::pair<HermitianFactor, std::vector<int>>> out;
  switch (family) {
    case ChainFamily::PauliString:
      for (size_t i = 0; i < pauli_axes.size(); ++i)
        out.push_back({make_factor(pauli_axes[i]), {static_cast<int>(i)}});
      break;
    case ChainFamily::MultiControl:
      for (int i = 0; i < num_controls; ++i)
        out.push_back({make_factor(FactorKind::ProjOne), {i}});
      break;
    case ChainFamily::ExchangePairs:
      for (size_t i = 0; i < pair_kinds.size(); ++i)
        out.push_back({make_factor(pair_kinds[i]),
                       {2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1}});
      break;
  }
  return out;
}

namespace {

void validate(const ChainSpec& spec) {
  switch (spec.family) {
    case ChainFamily::PauliString:
      if (spec.pauli_axes.empty())
        throw std::invalid_argument("pauli chain: axes must be non-empty");
      for (FactorKind k : spec.pauli_axes)
        if (k != FactorKind::PauliX && k != FactorKind::PauliY &&
            k != FactorKind::PauliZ)
          throw std::invalid_argument("pauli chain: axes must be X, Y or Z");
      break;
    case ChainFamily::MultiControl:
      if (spec.num_controls < 1)
        throw std::invalid_argument("multi-control chain: need at least one control");
      break;
    case ChainFamily::ExchangePairs:
      if (spec.pair_kinds.size() < 2)
        throw std::invalid_argument("exchange chain: need at least two pairs");
      for (FactorKind k : spec.pair_kinds)
        if (k != FactorKind::ExchangeG && k != FactorKind::ExchangeF &&
            k != FactorKind::ParityPair)
          throw std::invalid_argument("exchange chain: pair kinds must be G, F or PP");
      break;
  }
}

FactorKind canonical_pauli_axis(Backend backend) {
  return backend == Backend::Cnot ? FactorKind::PauliZ : FactorKind::PauliY;
}

// One chaining step extending the string from qubit `src` onto `dst`,
// in application order. The dressed exchange-backend steps satisfy
// K^dag Y_src K = Y_src Y_dst exactly.
std::vector<Gate> pauli_step(Backend backend, int src, int dst) {
  switch (backend) {
    case Backend::Cnot:
      return {Gate{GateKind::Cnot, {reg(dst), reg(src)}, 0.0, ""}};
    case Backend::Msg:
      return {Gate{GateKind::LocalRot, {reg(src)}, -M_PI / 4.0, "X"},
              Gate{GateKind::LocalRot, {reg(dst)}, -M_PI / 4.0, "Z"},
              Gate{GateKind::Msg, {reg(src), reg(dst)}, M_PI / 4.0, ""}};
    case Backend::ISwap:
      return {Gate{GateKind::LocalRot, {reg(src)}, M_PI / 4.0, "X"},
              Gate{GateKind::LocalRot, {reg(dst)}, -M_PI / 4.0, "Z"},
              Gate{GateKind::ISwap, {reg(src), reg(dst)}, -M_PI / 2.0, "G"}};
  }
  throw std::logic_error("pauli_step: unknown backend");
}

// Extends the pair ending at qubits (2p, 2p+1) onto pair (2q, 2q+1).
// source_kind selects the exponent sign so the conjugation identity is
// exact for both exchange flavours.
Gate exchange_step(int src_pair, int dst_pair, FactorKind source_kind) {
  const double sign = source_kind == FactorKind::ExchangeF ? -1.0 : 1.0;
  return Gate{GateKind::GenExp,
              {reg(2 * src_pair), reg(2 * dst_pair), reg(2 * dst_pair + 1)},
              sign * M_PI / 4.0,
              "ZG"};
}

FactorKind toggled(FactorKind k) {
  return k == FactorKind::ExchangeG ? FactorKind::ExchangeF : FactorKind::ExchangeG;
}

// Local frame on the pair's first qubit turning the canonical factor kind
// into the requested one; conjugation stages compose innermost first.
Matrix exchange_frame(FactorKind canon, FactorKind want) {
  Matrix v = identity(2);
  FactorKind cur = canon;
  if (cur == FactorKind::ExchangeF && want != FactorKind::ExchangeF) {
    v = v * expm_generator(pauli_z(), -M_PI / 4.0);
    cur = FactorKind::ExchangeG;
  }
  if (cur == FactorKind::ExchangeG && want == FactorKind::ExchangeF)
    v = v * expm_generator(pauli_z(), M_PI / 4.0);
  if (want == FactorKind::ParityPair) v = v * pauli_x();
  return v;
}

struct ChainModel {
  int width = 0;
  std::vector<std::vector<Gate>> steps;  // application order within each step
  std::vector<Gate> frame;               // outer local frame layer
  std::vector<Gate> pivot;               // filled by pivot_gates
  Matrix hhat;                           // canonical closed forms
  Matrix hbar;
  Matrix residue;
  std::optional<Gate> mirror;
};

std::vector<Gate> pivot_gates(const ChainSpec& spec, double alpha) {
  switch (spec.family) {
    case ChainFamily::PauliString: {
      const FactorKind axis = canonical_pauli_axis(spec.backend);
      return {Gate{GateKind::LocalRot, {reg(0)}, alpha, factor_kind_name(axis)}};
    }
    case ChainFamily::MultiControl: {
      // The chain grows outward from the first qubit pair.
      if (std::abs(std::abs(alpha) - M_PI / 2.0) < 1e-12) {
        // [Z Z]^{+-pi/2} is a product of single-qubit quarter turns up to a
        // global phase, which cancels between the two echo arms.
        return {Gate{GateKind::LocalRot, {reg(0)}, alpha, "Z"},
                Gate{GateKind::LocalRot, {reg(1)}, alpha, "Z"}};
      }
      return {Gate{GateKind::GenExp, {reg(0), reg(1)}, alpha, "ZZ"}};
    }
    case ChainFamily::ExchangePairs:
      return {Gate{GateKind::GenExp, {reg(0), reg(1)}, alpha, "G"}};
  }
  throw std::logic_error("pivot_gates: unknown family");
}

// Assembles one closed-form term as a tensor chain of per-site blocks,
// avoiding full-dimension matrix products.
Matrix tensor_term(const std::vector<const Matrix*>& blocks) {
  Matrix out = identity(1);
  for (const Matrix* b : blocks) out = tensor(out, *b);
  return out;
}

ChainModel make_model(const ChainSpec& spec) {
  validate(spec);
  ChainModel m;
  m.width = spec.num_register();
  const int n = m.width;
  const Matrix id = identity(Eigen::Index{1} << n);

  switch (spec.family) {
    case ChainFamily::PauliString: {
      const int len = static_cast<int>(spec.pauli_axes.size());
      for (int j = 0; j + 1 < len; ++j)
        m.steps.push_back(pauli_step(spec.backend, j, j + 1));
      const FactorKind canon = canonical_pauli_axis(spec.backend);
      Matrix h = identity(1);
      for (int j = 0; j < len; ++j) h = tensor(h, make_factor(canon).matrix_r);
      m.hhat = h;
      m.hbar = h;
      m.residue = Matrix::Zero(h.rows(), h.cols());
      for (int j = 0; j < len; ++j) {
        if (spec.pauli_axes[j] == canon) continue;
        const Matrix v = basis_change(make_factor(canon).matrix_r,
                                      make_factor(spec.pauli_axes[j]).matrix_r);
        append_unitary1q(m.frame, reg(j), v);
      }
      break;
    }
    case ChainFamily::MultiControl: {
      const int nc = spec.num_controls;
      for (int j = 0; j < nc; ++j)
        m.steps.push_back({Gate{GateKind::RelPhaseToffoli,
                                {reg(j), reg(j + 2), reg(j + 1)},
                                M_PI / 2.0,
                                ""}});
      const Matrix p1 = proj_one(), p0 = proj_zero(), z = pauli_z();
      const Matrix one = identity(2);
      // Leading term (-1)^nc P_0 ... P_{nc-1} Z_nc Z_{nc+1}.
      {
        std::vector<const Matrix*> blocks(n, &one);
        for (int j = 0; j < nc; ++j) blocks[j] = &p1;
        blocks[nc] = &z;
        blocks[nc + 1] = &z;
        m.hbar = (nc % 2 == 1 ? -1.0 : 1.0) * tensor_term(blocks);
      }
      // Remainder sum_{j=1}^{nc} (-1)^{j+1} P_0..P_{j-2} P_perp_{j-1} Z_j.
      Matrix res = Matrix::Zero(id.rows(), id.cols());
      for (int j = 1; j <= nc; ++j) {
        std::vector<const Matrix*> blocks(n, &one);
        for (int k = 0; k + 1 < j; ++k) blocks[k] = &p1;
        blocks[j - 1] = &p0;
        blocks[j] = &z;
        res += (j % 2 == 0 ? -1.0 : 1.0) * tensor_term(blocks);
      }
      m.residue = res;
      m.hhat = m.hbar + m.residue;
      m.mirror = Gate{GateKind::LocalRot, {reg(n - 1)}, M_PI / 2.0, "X"};
      break;
    }
    case ChainFamily::ExchangePairs: {
      const int pairs = static_cast<int>(spec.pair_kinds.size());
      for (int j = 0; j + 1 < pairs; ++j)
        m.steps.push_back({exchange_step(j, j + 1, FactorKind::ExchangeG)});
      const Matrix g = make_factor(FactorKind::ExchangeG).matrix_r;
      const Matrix f = make_factor(FactorKind::ExchangeF).matrix_r;
      const Matrix pker = make_factor(FactorKind::ExchangeG).p_ker;
      const Matrix one4 = identity(4);
      // Leading term F_0 ... F_{pairs-2} G_{pairs-1}.
      {
        std::vector<const Matrix*> blocks(pairs, &f);
        blocks[pairs - 1] = &g;
        m.hbar = tensor_term(blocks);
      }
      // Remainder sum_i F_0..F_{i-1} G_i P_ker{i+1}.
      Matrix res = Matrix::Zero(id.rows(), id.cols());
      for (int i = 0; i + 1 < pairs; ++i) {
        std::vector<const Matrix*> blocks(pairs, &one4);
        for (int j = 0; j < i; ++j) blocks[j] = &f;
        blocks[i] = &g;
        blocks[i + 1] = &pker;
        res += tensor_term(blocks);
      }
      m.residue = res;
      m.hhat = m.hbar + m.residue;
      m.mirror = Gate{GateKind::LocalRot, {reg(n - 1)}, M_PI / 2.0, "Z"};
      // Frame layer morphing the canonical (F,...,F,G) pattern into the
      // requested pair kinds; every morph is local to the pair's first qubit.
      for (int j = 0; j < pairs; ++j) {
        const FactorKind canon =
            j + 1 < pairs ? FactorKind::ExchangeF : FactorKind::ExchangeG;
        append_unitary1q(m.frame, reg(2 * j),
                         exchange_frame(canon, spec.pair_kinds[j]));
      }
      break;
    }
  }
  return m;
}

void append_gates(std::vector<Gate>& out, const std::vector<Gate>& gates) {
  out.insert(out.end(), gates.begin(), gates.end());
}

void append_adjoint(std::vector<Gate>& out, const std::vector<Gate>& gates) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    out.push_back(adjoint(*it));
}

// Inner staircase (no frame layer), in application order: the last chain
// step opens the circuit, the central rotation sits in the middle.
std::vector<Gate> staircase_gates(const ChainModel& m, const ChainSpec& spec,
                                  double alpha) {
  std::vector<Gate> out;
  for (auto it = m.steps.rbegin(); it != m.steps.rend(); ++it) append_gates(out, *it);
  append_gates(out, pivot_gates(spec, alpha));
  for (const auto& step : m.steps) append_adjoint(out, step);
  return out;
}

Matrix frame_matrix(const ChainModel& m) {
  Circuit c;
  c.num_register = m.width;
  c.gates = m.frame;
  return circuit_unitary(c);
}

}  // namespace

Circuit build_staircase(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  Circuit c;
  c.num_register = m.width;
  append_gates(c.gates, m.frame);
  append_gates(c.gates, staircase_gates(m, spec, spec.alpha));
  append_adjoint(c.gates, m.frame);
  return c;
}

namespace {

Matrix frame_conjugated(const ChainModel& m, const Matrix& op) {
  if (m.frame.empty()) return op;
  const Matrix f = frame_matrix(m);
  return f.adjoint() * op * f;
}

}  // namespace

Matrix hhat_closed_form(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  return frame_conjugated(m, m.hhat);
}

Matrix hbar_closed_form(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  return frame_conjugated(m, m.hbar);
}

Matrix residue_closed_form(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  return frame_conjugated(m, m.residue);
}

namespace {

double mirror_defect(const ChainModel& m, const Gate& mirror) {
  const int pos = mirror.qubits[0].index;
  const Matrix mu = embed(gate_unitary(mirror), {pos}, m.width);
  return max_abs(mu.adjoint() * m.hhat * mu + m.hbar - m.residue);
}

}  // namespace

Gate default_mirror(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  if (m.mirror && mirror_defect(m, *m.mirror) <= kTolIdentity) return *m.mirror;
  // Search the quarter-turn Pauli rotations and their adjoints on the
  // chain-end qubits.
  const int first = std::max(0, m.width - 2);
  for (int q = m.width - 1; q >= first; --q)
    for (const char* axis : {"X", "Y", "Z"})
      for (double sign : {1.0, -1.0}) {
        Gate cand{GateKind::LocalRot, {reg(q)}, sign * M_PI / 2.0, axis};
        if (mirror_defect(m, cand) <= kTolIdentity) return cand;
      }
  throw std::runtime_error("default_mirror: no quarter-turn mirror found");
}

Circuit build_decoupling(const ChainSpec& spec) {
  const ChainModel m = make_model(spec);
  Circuit c;
  c.num_register = m.width;
  if (spec.family == ChainFamily::PauliString) {
    // Full-rank factors compose without remainder terms, so the echo is not
    // needed; a single staircase at the doubled angle matches the contract.
    ChainSpec doubled = spec;
    doubled.alpha = 2.0 * spec.alpha;
    return build_staircase(doubled);
  }
  Gate mirror = spec.mirror ? *spec.mirror : default_mirror(spec);
  if (mirror_defect(m, mirror) > kTolIdentity)
    throw std::invalid_argument("build_decoupling: mirror fails the echo property");
  append_gates(c.gates, m.frame);
  c.gates.push_back(mirror);
  append_gates(c.gates, staircase_gates(m, spec, -spec.alpha));
  c.gates.push_back(adjoint(mirror));
  append_gates(c.gates, staircase_gates(m, spec, spec.alpha));
  append_adjoint(c.gates, m.frame);
  return c;
}

ConditionTree build_ctot(const std::vector<ConditionRef>& conditions,
                         int first_ancilla, GateKind two_bit_gate) {
  if (conditions.empty())
    throw std::invalid_argument("build_ctot: need at least one condition");
  if (two_bit_gate != GateKind::Toffoli && two_bit_gate != GateKind::RelPhaseToffoli)
    throw std::invalid_argument("build_ctot: tree gate must be a Toffoli kind");
  ConditionTree tree;
  int next = first_ancilla;

  auto is_bit = [](const ConditionRef& c) {
    return c.qubits.size() == 1 && c.kind == FactorKind::ProjOne;
  };
  auto combine = [&](const ConditionRef& a, const ConditionRef& b) {
    const QubitRef target = anc(next++);
    ++tree.ancillas_used;
    if (is_bit(a) && is_bit(b)) {
      const double angle = two_bit_gate == GateKind::RelPhaseToffoli ? M_PI / 2.0 : 0.0;
      tree.gates.push_back(Gate{two_bit_gate, {a.qubits[0], b.qubits[0], target},
                                angle, ""});
    } else {
      Gate g;
      g.kind = GateKind::SupportControlX;
      g.generator = factor_kind_name(a.kind) + "," + factor_kind_name(b.kind);
      g.qubits = a.qubits;
      g.qubits.insert(g.qubits.end(), b.qubits.begin(), b.qubits.end());
      g.qubits.push_back(target);
      tree.gates.push_back(g);
    }
    return ConditionRef{FactorKind::ProjOne, {target}};
  };

  std::vector<ConditionRef> level = conditions;
  if (level.size() == 1) {
    // Single condition: copy it onto one ancilla so the root is a plain bit.
    const ConditionRef& c = level[0];
    const QubitRef target = anc(next++);
    ++tree.ancillas_used;
    if (is_bit(c)) {
      tree.gates.push_back(Gate{GateKind::Cnot, {c.qubits[0], target}, 0.0, ""});
    } else {
      Gate g;
      g.kind = GateKind::SupportControlX;
      g.generator = factor_kind_name(c.kind);
      g.qubits = c.qubits;
      g.qubits.push_back(target);
      tree.gates.push_back(g);
    }
    tree.root = target;
    return tree;
  }
  while (level.size() > 1) {
    std::vector<ConditionRef> merged;
    size_t i = 0;
    for (; i + 1 < level.size(); i += 2) merged.push_back(combine(level[i], level[i + 1]));
    if (i < level.size()) merged.push_back(level[i]);  // promoted one level up
    level = std::move(merged);
  }
  tree.root = level[0].qubits[0];
  return tree;
}

MergeTree build_utot(const ChainSpec& spec) {
  validate(spec);
  MergeTree out;
  if (spec.family == ChainFamily::PauliString) {
    const int n = static_cast<int>(spec.pauli_axes.size());
    if (n < 2) throw std::invalid_argument("build_utot: need at least two sites");
    out.final_kinds.assign(n, canonical_pauli_axis(spec.backend));
    std::vector<std::vector<Gate>> levels;
    int covered = 1;
    while (covered < n) {
      const int cnt = std::min(covered, n - covered);
      std::vector<Gate> level;
      for (int i = 0; i < cnt; ++i)
        for (const Gate& g : pauli_step(spec.backend, i, covered + i))
          level.push_back(g);
      levels.push_back(std::move(level));
      covered += cnt;
    }
    // Outermost level first in application order.
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
      out.gates.insert(out.gates.end(), it->begin(), it->end());
    return out;
  }
  if (spec.family == ChainFamily::ExchangePairs) {
    const int pairs = static_cast<int>(spec.pair_kinds.size());
    out.final_kinds.assign(pairs, FactorKind::ExchangeG);
    std::vector<std::vector<Gate>> levels;
    int covered = 1;
    while (covered < pairs) {
      const int cnt = std::min(covered, pairs - covered);
      std::vector<Gate> level;
      for (int i = 0; i < cnt; ++i) {
        level.push_back(exchange_step(i, covered + i, out.final_kinds[i]));
        out.final_kinds[i] = toggled(out.final_kinds[i]);
        out.final_kinds[covered + i] = FactorKind::ExchangeG;
      }
      levels.push_back(std::move(level));
      covered += cnt;
    }
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
      out.gates.insert(out.gates.end(), it->begin(), it->end());
    return out;
  }
  throw std::invalid_argument("build_utot: rank-one chains use no merge tree");
}

Circuit build_selection(const ChainSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case ChainFamily::PauliString: {
      const int n = static_cast<int>(spec.pauli_axes.size());
      if (n < 2) throw std::invalid_argument("build_selection: need n >= 2");
      const ChainModel m = make_model(spec);
      const MergeTree tree = build_utot(spec);
      Circuit c;
      c.num_register = n;
      append_gates(c.gates, m.frame);
      append_gates(c.gates, tree.gates);
      append_gates(c.gates, pivot_gates(spec, spec.alpha));
      append_adjoint(c.gates, tree.gates);
      append_adjoint(c.gates, m.frame);
      return c;
    }
    case ChainFamily::MultiControl: {
      // Controls q0..q_{nc-1}, target q_nc; the central gate is an exact
      // controlled-X from the root ancilla, so the whole sequence is the
      // phaseless multi-controlled X.
      const int nc = spec.num_controls;
      if (nc < 2) throw std::invalid_argument("build_selection: need n >= 2");
      std::vector<ConditionRef> conditions;
      for (int i = 0; i < nc; ++i)
        conditions.push_back({FactorKind::ProjOne, {reg(i)}});
      ConditionTree tree = build_ctot(conditions, 0, GateKind::Toffoli);
      Circuit c;
      c.num_register = nc + 1;
      c.num_ancilla = tree.ancillas_used;
      append_gates(c.gates, tree.gates);
      c.gates.push_back(Gate{GateKind::Cnot, {tree.root, reg(nc)}, 0.0, ""});
      append_adjoint(c.gates, tree.gates);
      return c;
    }
    case ChainFamily::ExchangePairs: {
      const int pairs = static_cast<int>(spec.pair_kinds.size());
      const ChainModel m = make_model(spec);
      const MergeTree merge = build_utot(spec);
      // Support conditions for every non-pivot pair; in the canonical frame
      // all pairs carry exchange factors with the odd-parity support.
      std::vector<ConditionRef> conditions;
      for (int p = 1; p < pairs; ++p)
        conditions.push_back(
            {FactorKind::ExchangeG, {reg(2 * p), reg(2 * p + 1)}});
      ConditionTree tree = build_ctot(conditions, 0, GateKind::Toffoli);
      Circuit c;
      c.num_register = 2 * pairs;
      c.num_ancilla = tree.ancillas_used;
      // Selection frame: merge-tree extensions leave per-pair kinds that
      // differ from the sequential staircase, so rebuild the frame layer
      // against the merge tree's final kinds.
      std::vector<Gate> frame;
      for (int j = 0; j < pairs; ++j)
        append_unitary1q(frame, reg(2 * j),
                         exchange_frame(merge.final_kinds[j], spec.pair_kinds[j]));
      append_gates(c.gates, frame);
      append_gates(c.gates, merge.gates);
      append_gates(c.gates, tree.gates);
      // The conditioned central rotation always acts with the pivot's
      // starting factor; the merge tree morphs it into the final kind.
      c.gates.push_back(
          Gate{GateKind::GenExp, {tree.root, reg(0), reg(1)}, spec.alpha, "PG"});
      append_adjoint(c.gates, tree.gates);
      append_adjoint(c.gates, merge.gates);
      append_adjoint(c.gates, frame);
      return c;
    }
  }
  throw std::logic_error("build_selection: unknown family");
}

}  // namespace qchain
