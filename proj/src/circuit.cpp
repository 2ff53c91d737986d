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

#include "qchain/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qchain {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

}  // namespace

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot: return "cnot";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::RelPhaseToffoli: return "rptoffoli";
    case GateKind::ISwap: return "iswap";
    case GateKind::Msg: return "msg";
    case GateKind::LocalRot: return "localrot";
    case GateKind::GenExp: return "genexp";
    case GateKind::SupportControlX: return "supcx";
  }
  throw std::logic_error("gate_kind_name: unknown kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"cnot", GateKind::Cnot},
      {"toffoli", GateKind::Toffoli},
      {"rptoffoli", GateKind::RelPhaseToffoli},
      {"iswap", GateKind::ISwap},
      {"msg", GateKind::Msg},
      {"localrot", GateKind::LocalRot},
      {"genexp", GateKind::GenExp},
      {"supcx", GateKind::SupportControlX},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown gate kind: " + name);
  return it->second;
}

Gate adjoint(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::SupportControlX:
      break;  // self-adjoint
    case GateKind::RelPhaseToffoli:
    case GateKind::ISwap:
    case GateKind::Msg:
    case GateKind::LocalRot:
    case GateKind::GenExp:
      out.angle = -g.angle;
      break;
  }
  return out;
}

namespace {

// Generators addressed by tag in GenExp gates. Composite tags are tensor
// products, leftmost factor on the first tuple qubit.
Matrix generator_matrix(const std::string& tag) {
  if (tag == "ZZ") return tensor(pauli_z(), pauli_z());
  if (tag == "PX") return tensor(proj_one(), pauli_x());
  if (tag == "ZG") return tensor(pauli_z(), make_factor(FactorKind::ExchangeG).matrix_r);
  if (tag == "PG") return tensor(proj_one(), make_factor(FactorKind::ExchangeG).matrix_r);
  if (tag == "PF") return tensor(proj_one(), make_factor(FactorKind::ExchangeF).matrix_r);
  if (tag == "PPP") return tensor(proj_one(), make_factor(FactorKind::ParityPair).matrix_r);
  return make_factor(factor_kind_from_name(tag)).matrix_r;
}

int expected_arity(const Gate& g) {
  switch (g.kind) {
    case GateKind::Cnot: return 2;
    case GateKind::Toffoli: return 3;
    case GateKind::RelPhaseToffoli: return 3;
    case GateKind::ISwap: return 2;
    case GateKind::Msg: return 2;
    case GateKind::LocalRot: return 1;
    case GateKind::GenExp:
    case GateKind::SupportControlX:
      return static_cast<int>(g.qubits.size());
  }
  return 0;
}

}  // namespace

Matrix gate_unitary(const Gate& g) {
  if (static_cast<int>(g.qubits.size()) != expected_arity(g))
    throw std::invalid_argument("gate_unitary: qubit tuple arity does not match kind");
  switch (g.kind) {
    case GateKind::Cnot: {
      Matrix u = identity(4);
      u(2, 2) = 0; u(3, 3) = 0; u(2, 3) = 1; u(3, 2) = 1;
      return u;
    }
    case GateKind::Toffoli: {
      Matrix u = identity(8);
      u(6, 6) = 0; u(7, 7) = 0; u(6, 7) = 1; u(7, 6) = 1;
      return u;
    }
    case GateKind::RelPhaseToffoli:
      return expm_generator(tensor(proj_one(), tensor(proj_one(), pauli_x())), g.angle);
    case GateKind::ISwap: {
      const std::string flavour = g.generator.empty() ? "G" : g.generator;
      if (flavour != "G" && flavour != "F")
        throw std::invalid_argument("iswap: generator must be G or F");
      return expm_generator(generator_matrix(flavour), g.angle);
    }
    case GateKind::Msg:
      return expm_generator(tensor(pauli_x(), pauli_x()), g.angle);
    case GateKind::LocalRot: {
      if (g.generator != "X" && g.generator != "Y" && g.generator != "Z")
        throw std::invalid_argument("localrot: axis must be X, Y or Z");
      return expm_generator(generator_matrix(g.generator), g.angle);
    }
    case GateKind::GenExp: {
      const Matrix gen = generator_matrix(g.generator);
      if (gen.rows() != (Eigen::Index{1} << g.qubits.size()))
        throw std::invalid_argument("genexp: generator dim does not match qubits");
      return expm_generator(gen, g.angle);
    }
    case GateKind::SupportControlX: {
      const auto kinds = split_list(g.generator);
      Matrix supp = identity(1);
      int control_qubits = 0;
      for (const auto& name : kinds) {
        const HermitianFactor& f = make_factor(factor_kind_from_name(name));
        supp = tensor(supp, f.p_supp);
        control_qubits += f.arity;
      }
      if (control_qubits + 1 != static_cast<int>(g.qubits.size()))
        throw std::invalid_argument("supcx: control factors do not match qubits");
      const Eigen::Index dim = supp.rows() * 2;
      Matrix u = tensor(identity(supp.rows()) - supp, identity(2)) +
                 tensor(supp, pauli_x());
      if (u.rows() != dim) throw std::logic_error("supcx: bad dimension");
      return u;
    }
  }
  throw std::logic_error("gate_unitary: unknown kind");
}

bool is_entangler(const Gate& g) { return g.qubits.size() >= 2; }

void Circuit::append(const Circuit& other) {
  num_register = std::max(num_register, other.num_register);
  num_ancilla = std::max(num_ancilla, other.num_ancilla);
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.num_register != b.num_register || a.num_ancilla != b.num_ancilla ||
      a.gates.size() != b.gates.size())
    return false;
  for (size_t i = 0; i < a.gates.size(); ++i) {
    const Gate& x = a.gates[i];
    const Gate& y = b.gates[i];
    if (x.kind != y.kind || !(x.qubits == y.qubits) || x.angle != y.angle ||
        x.generator != y.generator)
      return false;
  }
  return true;
}

Circuit adjoint(const Circuit& c) {
  Circuit out;
  out.num_register = c.num_register;
  out.num_ancilla = c.num_ancilla;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    out.gates.push_back(adjoint(*it));
  return out;
}

namespace {

int layered_depth(const Circuit& c, bool entanglers_only) {
  std::map<std::pair<int, int>, int> last_layer;
  int depth = 0;
  for (const Gate& g : c.gates) {
    if (entanglers_only && !is_entangler(g)) continue;
    int layer = 0;
    for (const QubitRef& q : g.qubits) {
      auto it = last_layer.find({static_cast<int>(q.role), q.index});
      if (it != last_layer.end()) layer = std::max(layer, it->second);
    }
    ++layer;
    for (const QubitRef& q : g.qubits)
      last_layer[{static_cast<int>(q.role), q.index}] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

}  // namespace

int depth(const Circuit& c) { return layered_depth(c, false); }
int entangler_depth(const Circuit& c) { return layered_depth(c, true); }

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  for (const Gate& g : c.gates) {
    std::string key = gate_kind_name(g.kind);
    if (g.kind == GateKind::GenExp) key += ":" + g.generator;
    ++r.counts_by_kind[key];
    ++r.total_gates;
    if (is_entangler(g)) ++r.entanglers;
    const bool exchange_rot =
        g.kind == GateKind::ISwap ||
        (g.kind == GateKind::GenExp && g.qubits.size() == 2 &&
         (g.generator == "G" || g.generator == "F"));
    if (exchange_rot) ++r.exchange_two_qubit;
  }
  r.depth = depth(c);
  r.entangler_depth = entangler_depth(c);
  r.width = c.width();
  r.ancillas = c.num_ancilla;
  return r;
}

std::string backend_name(Backend b) {
  switch (b) {
    case Backend::Cnot: return "cnot";
    case Backend::Msg: return "msg";
    case Backend::ISwap: return "iswap";
  }
  throw std::logic_error("backend_name: unknown backend");
}

Backend backend_from_name(const std::string& name) {
  if (name == "cnot") return Backend::Cnot;
  if (name == "msg") return Backend::Msg;
  if (name == "iswap") return Backend::ISwap;
  throw std::invalid_argument("unknown backend: " + name);
}

void append_local(std::vector<Gate>& out, const QubitRef& q, const std::string& axis,
                  double angle) {
  if (std::abs(angle) < 1e-15) return;
  out.push_back(Gate{GateKind::LocalRot, {q}, angle, axis});
}

void append_unitary1q(std::vector<Gate>& out, const QubitRef& q, const Matrix& u) {
  const EulerAngles e = euler_zyz(u);
  append_local(out, q, "Z", e.z_post);
  append_local(out, q, "Y", e.y_mid);
  append_local(out, q, "Z", e.z_pre);
}

namespace {

void emit_local(std::vector<Gate>& out, const QubitRef& q, const std::string& axis,
                double angle) {
  append_local(out, q, axis, angle);
}

void emit_unitary1q(std::vector<Gate>& out, const QubitRef& q, const Matrix& u) {
  append_unitary1q(out, q, u);
}

void emit_hadamard(std::vector<Gate>& out, const QubitRef& q) {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  emit_unitary1q(out, q, h);
}

// Phase ladder on the target wire: rz, cx(c1,t), rz, cx(c2,t), rz, cx(c1,t),
// rz, cx(c2,t); together with Hadamards on t this realizes [P P X]^angle
// exactly up to global phase.
void lower_relphase_toffoli(std::vector<Gate>& out, const Gate& g) {
  const QubitRef c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
  const double s = g.angle / (M_PI / 2.0);
  const double u = s * M_PI / 8.0;
  emit_hadamard(out, t);
  emit_local(out, t, "Z", u);
  out.push_back(Gate{GateKind::Cnot, {c1, t}, 0.0, ""});
  emit_local(out, t, "Z", -u);
  out.push_back(Gate{GateKind::Cnot, {c2, t}, 0.0, ""});
  emit_local(out, t, "Z", u);
  out.push_back(Gate{GateKind::Cnot, {c1, t}, 0.0, ""});
  emit_local(out, t, "Z", -u);
  out.push_back(Gate{GateKind::Cnot, {c2, t}, 0.0, ""});
  emit_hadamard(out, t);
}

// Standard 6-CNOT Toffoli with [Z]^{pi/8} eighth turns.
void lower_toffoli(std::vector<Gate>& out, const Gate& g) {
  const QubitRef c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
  const double t8 = M_PI / 8.0;
  emit_hadamard(out, t);
  out.push_back(Gate{GateKind::Cnot, {c2, t}, 0.0, ""});
  emit_local(out, t, "Z", -t8);
  out.push_back(Gate{GateKind::Cnot, {c1, t}, 0.0, ""});
  emit_local(out, t, "Z", t8);
  out.push_back(Gate{GateKind::Cnot, {c2, t}, 0.0, ""});
  emit_local(out, t, "Z", -t8);
  out.push_back(Gate{GateKind::Cnot, {c1, t}, 0.0, ""});
  emit_local(out, t, "Z", t8);
  emit_local(out, c2, "Z", t8);
  emit_hadamard(out, t);
  out.push_back(Gate{GateKind::Cnot, {c1, c2}, 0.0, ""});
  emit_local(out, c1, "Z", t8);
  emit_local(out, c2, "Z", -t8);
  out.push_back(Gate{GateKind::Cnot, {c1, c2}, 0.0, ""});
}

void lower_zz(std::vector<Gate>& out, const QubitRef& a, const QubitRef& b,
              double angle) {
  out.push_back(Gate{GateKind::Cnot, {a, b}, 0.0, ""});
  emit_local(out, b, "Z", angle);
  out.push_back(Gate{GateKind::Cnot, {a, b}, 0.0, ""});
}

void lower_px(std::vector<Gate>& out, const QubitRef& c, const QubitRef& t,
              double angle) {
  // exp(-i a P X) = exp(-i a/2 X_t) exp(+i a/2 Z_c X_t)
  emit_local(out, t, "X", angle / 2.0);
  emit_hadamard(out, t);
  lower_zz(out, c, t, -angle / 2.0);
  emit_hadamard(out, t);
}

void lower_two_pauli(std::vector<Gate>& out, const QubitRef& a, const QubitRef& b,
                     const std::string& axis_a, const std::string& axis_b,
                     double angle) {
  // exp(-i angle A_a B_b) via local frames mapping A,B to Z.
  auto frame = [&](const std::string& axis, const QubitRef& q, bool open) {
    if (axis == "Z") return;
    Matrix v = basis_change(pauli_z(), axis == "X" ? pauli_x() : pauli_y());
    emit_unitary1q(out, q, open ? v : Matrix(v.adjoint()));
  };
  frame(axis_a, a, true);
  frame(axis_b, b, true);
  lower_zz(out, a, b, angle);
  frame(axis_a, a, false);
  frame(axis_b, b, false);
}

void lower_exchange(std::vector<Gate>& out, const QubitRef& a, const QubitRef& b,
                    const std::string& flavour, double angle) {
  if (flavour == "G") {
    // G = (XX + YY)/2, commuting halves.
    lower_two_pauli(out, a, b, "X", "X", angle / 2.0);
    lower_two_pauli(out, a, b, "Y", "Y", angle / 2.0);
  } else {
    // F = (YX - XY)/2.
    lower_two_pauli(out, a, b, "Y", "X", angle / 2.0);
    lower_two_pauli(out, a, b, "X", "Y", -angle / 2.0);
  }
}

// Pair-support condition recoded onto the pair's second qubit.
void open_pair_condition(std::vector<Gate>& out, const std::string& kind,
                         const QubitRef& a, const QubitRef& b) {
  out.push_back(Gate{GateKind::Cnot, {a, b}, 0.0, ""});
  if (kind == "PP") {
    Matrix x = pauli_x();
    emit_unitary1q(out, b, x);
  }
}

void close_pair_condition(std::vector<Gate>& out, const std::string& kind,
                          const QubitRef& a, const QubitRef& b) {
  if (kind == "PP") {
    Matrix x = pauli_x();
    emit_unitary1q(out, b, x);
  }
  out.push_back(Gate{GateKind::Cnot, {a, b}, 0.0, ""});
}

void lower_supcx(std::vector<Gate>& out, const Gate& g) {
  const auto kinds = split_list(g.generator);
  std::vector<QubitRef> control_bits;
  std::vector<std::pair<std::string, std::pair<QubitRef, QubitRef>>> opened;
  size_t pos = 0;
  for (const auto& name : kinds) {
    const HermitianFactor& f = make_factor(factor_kind_from_name(name));
    if (f.arity == 1) {
      control_bits.push_back(g.qubits[pos]);
      pos += 1;
    } else {
      const QubitRef a = g.qubits[pos], b = g.qubits[pos + 1];
      open_pair_condition(out, name, a, b);
      opened.push_back({name, {a, b}});
      control_bits.push_back(b);
      pos += 2;
    }
  }
  const QubitRef t = g.qubits.back();
  if (control_bits.size() == 1) {
    out.push_back(Gate{GateKind::Cnot, {control_bits[0], t}, 0.0, ""});
  } else if (control_bits.size() == 2) {
    Gate tof{GateKind::Toffoli, {control_bits[0], control_bits[1], t}, 0.0, ""};
    lower_toffoli(out, tof);
  } else {
    throw std::invalid_argument("supcx lowering: more than two control sites");
  }
  for (auto it = opened.rbegin(); it != opened.rend(); ++it)
    close_pair_condition(out, it->first, it->second.first, it->second.second);
}

}  // namespace

Circuit lower_to_backend(const Circuit& c, Backend backend) {
  Circuit out;
  out.num_register = c.num_register;
  out.num_ancilla = c.num_ancilla;
  for (const Gate& g : c.gates) {
    if (g.qubits.size() == 1) {
      out.gates.push_back(g);
      continue;
    }
    switch (backend) {
      case Backend::Cnot:
        switch (g.kind) {
          case GateKind::Cnot:
            out.gates.push_back(g);
            break;
          case GateKind::RelPhaseToffoli:
            lower_relphase_toffoli(out.gates, g);
            break;
          case GateKind::Toffoli:
            lower_toffoli(out.gates, g);
            break;
          case GateKind::SupportControlX:
            lower_supcx(out.gates, g);
            break;
          case GateKind::GenExp:
            if (g.generator == "ZZ") {
              lower_zz(out.gates, g.qubits[0], g.qubits[1], g.angle);
            } else if (g.generator == "PX") {
              lower_px(out.gates, g.qubits[0], g.qubits[1], g.angle);
            } else if (g.generator == "G" || g.generator == "F") {
              lower_exchange(out.gates, g.qubits[0], g.qubits[1], g.generator, g.angle);
            } else {
              throw std::invalid_argument("no cnot lowering for generator " + g.generator);
            }
            break;
          default:
            throw std::invalid_argument("no cnot lowering for gate kind " +
                                        gate_kind_name(g.kind));
        }
        break;
      case Backend::ISwap:
        switch (g.kind) {
          case GateKind::ISwap:
            out.gates.push_back(g);
            break;
          case GateKind::GenExp:
            if (g.generator == "G" || g.generator == "F") {
              out.gates.push_back(g);
            } else if (g.generator == "ZG") {
              // [F_{i,l}]^{pi/2} . [G_{i,k}]^angle . [F_{i,l}]^{-pi/2}
              // as a matrix product; listed in application order.
              const QubitRef i = g.qubits[0], k = g.qubits[1], l = g.qubits[2];
              out.gates.push_back(Gate{GateKind::ISwap, {i, l}, -M_PI / 2.0, "F"});
              out.gates.push_back(Gate{GateKind::GenExp, {i, k}, g.angle, "G"});
              out.gates.push_back(Gate{GateKind::ISwap, {i, l}, M_PI / 2.0, "F"});
            } else {
              throw std::invalid_argument("no iswap lowering for generator " +
                                          g.generator);
            }
            break;
          default:
            throw std::invalid_argument("no iswap lowering for gate kind " +
                                        gate_kind_name(g.kind));
        }
        break;
      case Backend::Msg:
        switch (g.kind) {
          case GateKind::Msg:
            out.gates.push_back(g);
            break;
          default:
            throw std::invalid_argument("no msg lowering for gate kind " +
                                        gate_kind_name(g.kind));
        }
        break;
    }
  }
  return out;
}

namespace {

nlohmann::json qubit_to_json(const QubitRef& q) {
  return {{"role", q.role == QubitRole::Register ? "register" : "ancilla"},
          {"index", q.index}};
}

QubitRef qubit_from_json(const nlohmann::json& j) {
  QubitRef q;
  const std::string role = j.at("role").get<std::string>();
  if (role == "register") {
    q.role = QubitRole::Register;
  } else if (role == "ancilla") {
    q.role = QubitRole::Ancilla;
  } else {
    throw std::invalid_argument("bad qubit role: " + role);
  }
  q.index = j.at("index").get<int>();
  return q;
}

}  // namespace

std::string export_json(const Circuit& c) {
  nlohmann::json j;
  j["numRegister"] = c.num_register;
  j["numAncilla"] = c.num_ancilla;
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    nlohmann::json qs = nlohmann::json::array();
    for (const QubitRef& q : g.qubits) qs.push_back(qubit_to_json(q));
    jg["qubits"] = qs;
    jg["angle"] = g.angle;
    jg["generatorTag"] = g.generator;
    gates.push_back(jg);
  }
  j["gates"] = gates;
  return j.dump(2);
}

Circuit import_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Circuit c;
  c.num_register = j.at("numRegister").get<int>();
  c.num_ancilla = j.at("numAncilla").get<int>();
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    for (const auto& jq : jg.at("qubits")) g.qubits.push_back(qubit_from_json(jq));
    g.angle = jg.at("angle").get<double>();
    g.generator = jg.at("generatorTag").get<std::string>();
    if (static_cast<int>(g.qubits.size()) != expected_arity(g))
      throw std::invalid_argument("import_json: bad qubit tuple arity");
    for (const QubitRef& q : g.qubits) {
      const int limit = q.role == QubitRole::Register ? c.num_register : c.num_ancilla;
      if (q.index < 0 || q.index >= limit)
        throw std::invalid_argument("import_json: qubit index out of range");
    }
    c.gates.push_back(g);
  }
  return c;
}

std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  // Non-standard gates are declared opaque and referenced by name.
  os << "opaque rpccx(theta) a,b,c;\n";
  os << "opaque xxrot(theta) a,b;\n";
  os << "opaque grot(theta) a,b;\n";
  os << "opaque frot(theta) a,b;\n";
  os << "opaque gexp_ZZ(theta) a,b;\n";
  os << "opaque gexp_PX(theta) a,b;\n";
  os << "opaque gexp_ZG(theta) a,b,c;\n";
  os << "opaque gexp_PG(theta) a,b,c;\n";
  os << "opaque gexp_PF(theta) a,b,c;\n";
  os << "opaque supcx_g2(dummy) a,b,c,d,e;\n";
  os << "opaque supcx_g1(dummy) a,b,c;\n";
  os << "qreg q[" << std::max(1, c.num_register) << "];\n";
  if (c.num_ancilla > 0) os << "qreg anc[" << c.num_ancilla << "];\n";
  auto qname = [](const QubitRef& q) {
    std::ostringstream s;
    s << (q.role == QubitRole::Register ? "q[" : "anc[") << q.index << "]";
    return s.str();
  };
  auto args = [&](const Gate& g) {
    std::ostringstream s;
    for (size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) s << ",";
      s << qname(g.qubits[i]);
    }
    return s.str();
  };
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        os << "cx " << args(g) << ";\n";
        break;
      case GateKind::Toffoli:
        os << "ccx " << args(g) << ";\n";
        break;
      case GateKind::RelPhaseToffoli:
        os << "rpccx(" << g.angle << ") " << args(g) << ";\n";
        break;
      case GateKind::ISwap:
        os << (g.generator == "F" ? "frot(" : "grot(") << g.angle << ") "
           << args(g) << ";\n";
        break;
      case GateKind::Msg:
        os << "xxrot(" << g.angle << ") " << args(g) << ";\n";
        break;
      case GateKind::LocalRot: {
        // [A]^theta = exp(-i theta A) matches r{x,y,z}(2 theta).
        std::string name = g.generator == "X" ? "rx" : g.generator == "Y" ? "ry" : "rz";
        os << name << "(" << 2.0 * g.angle << ") " << args(g) << ";\n";
        break;
      }
      case GateKind::GenExp:
        if (g.generator == "ZZ" || g.generator == "PX" || g.generator == "ZG" ||
            g.generator == "PG" || g.generator == "PF") {
          os << "gexp_" << g.generator << "(" << g.angle << ") " << args(g) << ";\n";
        } else if (g.generator == "G") {
          os << "grot(" << g.angle << ") " << args(g) << ";\n";
        } else if (g.generator == "F") {
          os << "frot(" << g.angle << ") " << args(g) << ";\n";
        } else {
          throw std::invalid_argument("export_qasm: no template for generator " +
                                      g.generator);
        }
        break;
      case GateKind::SupportControlX: {
        const auto kinds = split_list(g.generator);
        os << (g.qubits.size() == 5 ? "supcx_g2(0) " : "supcx_g1(0) ") << args(g)
           << ";\n";
        break;
      }
    }
  }
  return os.str();
}

}  // namespace qchain
