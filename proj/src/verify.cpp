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

#include "qchain/verify.hpp"

#include <random>
#include <stdexcept>

namespace qchain {

namespace {

int global_position(const QubitRef& q, int num_ancilla) {
  return q.role == QubitRole::Ancilla ? q.index : num_ancilla + q.index;
}

}  // namespace

void apply_gate(Vector& state, const Gate& g, int num_register, int num_ancilla) {
  const int total = num_register + num_ancilla;
  const Matrix u = gate_unitary(g);
  const int k = static_cast<int>(g.qubits.size());
  const Eigen::Index sub = Eigen::Index{1} << k;

  std::vector<Eigen::Index> masks(k);
  for (int b = 0; b < k; ++b) {
    const int pos = global_position(g.qubits[b], num_ancilla);
    if (pos < 0 || pos >= total)
      throw std::invalid_argument("apply_gate: qubit out of range");
    masks[b] = Eigen::Index{1} << (total - 1 - pos);
  }
  Eigen::Index gate_mask = 0;
  for (auto m : masks) gate_mask |= m;

  const Eigen::Index dim = state.size();
  Vector scratch(sub);
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & gate_mask) continue;  // enumerate cosets by their zero pattern
    for (Eigen::Index i = 0; i < sub; ++i) {
      Eigen::Index idx = base;
      for (int b = 0; b < k; ++b)
        if ((i >> (k - 1 - b)) & 1) idx |= masks[b];
      scratch(i) = state(idx);
    }
    for (Eigen::Index i = 0; i < sub; ++i) {
      cplx acc{0.0, 0.0};
      for (Eigen::Index j = 0; j < sub; ++j) acc += u(i, j) * scratch(j);
      Eigen::Index idx = base;
      for (int b = 0; b < k; ++b)
        if ((i >> (k - 1 - b)) & 1) idx |= masks[b];
      state(idx) = acc;
    }
  }
}

void apply_circuit(Vector& state, const Circuit& c) {
  for (const Gate& g : c.gates) apply_gate(state, g, c.num_register, c.num_ancilla);
}

Matrix circuit_unitary(const Circuit& c) {
  const int total = c.width();
  if (total > 14)
    throw std::invalid_argument("circuit_unitary: more than 14 qubits");
  const Eigen::Index dim = Eigen::Index{1} << total;
  Matrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Vector state = Vector::Zero(dim);
    state(col) = 1.0;
    apply_circuit(state, c);
    u.col(col) = state;
  }
  return u;
}

VerificationResult verify_equivalence(const Circuit& c, const Matrix& target,
                                      double tol) {
  const Eigen::Index reg_dim = Eigen::Index{1} << c.num_register;
  if (target.rows() != reg_dim || target.cols() != reg_dim)
    throw std::invalid_argument("verify_equivalence: target dim mismatch");
  const int total = c.width();
  if (total > 16)
    throw std::invalid_argument("verify_equivalence: more than 16 qubits");
  const Eigen::Index dim = Eigen::Index{1} << total;

  // Ancillas sit in the leading slots, so the ancilla-zero block is the
  // first reg_dim amplitudes of each column.
  Matrix block(reg_dim, reg_dim);
  double leakage = 0.0;
  for (Eigen::Index col = 0; col < reg_dim; ++col) {
    Vector state = Vector::Zero(dim);
    state(col) = 1.0;
    apply_circuit(state, c);
    block.col(col) = state.head(reg_dim);
    for (Eigen::Index row = reg_dim; row < dim; ++row)
      leakage = std::max(leakage, std::abs(state(row)));
  }

  VerificationResult res;
  res.tolerance = tol;
  res.subspace_leakage = leakage;
  res.ancilla_preserved = c.num_ancilla == 0 || leakage <= tol;
  res.distance = phase_distance(block, target);
  res.passed = res.distance <= tol && res.ancilla_preserved;
  return res;
}

namespace {

Matrix conj_by(const Matrix& u, const Matrix& op) { return u.adjoint() * op * u; }

Matrix random_hermitian(int dim, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = cplx{dist(rng), dist(rng)};
  return 0.5 * (a + Matrix(a.adjoint()));
}

// Hermitian with A^2 = P_supp built from a random frame: eigenvalues in
// {+1, -1, 0}.
Matrix random_reflection(int dim, int rank, std::mt19937& rng) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(random_hermitian(dim, rng));
  const Matrix v = solver.eigenvectors();
  Vector d = Vector::Zero(dim);
  for (int k = 0; k < rank; ++k) d(k) = (k % 2 == 0) ? 1.0 : -1.0;
  return v * d.asDiagonal() * v.adjoint();
}

// General conjugation [S B]^alpha (R x 1) [S B]^{-alpha} written in terms of
// the support/kernel projectors of S and B, for S^2 = P_supp{S} and
// B^2 = P_supp{B}.
Matrix conjugation_formula(const Matrix& s, const Matrix& b, const Matrix& r,
                           double alpha) {
  const Matrix ps = s * s;
  const Matrix pk = identity(s.rows()) - ps;
  const Matrix pb = b * b;
  const Matrix pbk = identity(b.rows()) - pb;
  const double c = std::cos(alpha), sn = std::sin(alpha);
  const cplx i{0.0, 1.0};
  Matrix out = tensor(pk * r * pk, pb) + tensor(c * (pk * r * ps + ps * r * pk), pb) +
               tensor(c * c * (ps * r * ps), pb) + tensor(sn * sn * (s * r * s), pb) +
               tensor(r, pbk) +
               tensor(i * sn * (pk * r * s - s * r * pk), b) +
               tensor(i * c * sn * (ps * r * s - s * r * ps), b);
  return out;
}

}  // namespace

std::vector<IdentityCheck> verify_identity_suite() {
  std::vector<IdentityCheck> checks;
  const Matrix x = pauli_x(), y = pauli_y(), z = pauli_z();
  const Matrix p1 = proj_one(), p0 = proj_zero();
  const Matrix i2 = identity(2);
  const Matrix g = make_factor(FactorKind::ExchangeG).matrix_r;
  const Matrix f = make_factor(FactorKind::ExchangeF).matrix_r;

  // XX quarter turn: [X1 X2]^{-pi/4} Y1 [X1 X2]^{pi/4} = -Z1 X2.
  {
    const Matrix u = expm_generator(tensor(x, x), M_PI / 4.0);
    const Matrix lhs = conj_by(u, tensor(y, i2));
    checks.push_back({"xx_quarter_turn_chaining", max_abs(lhs + tensor(z, x))});
  }
  // CNOT chaining: CNOT(control 2, target 1) conjugates Z1 into Z1 Z2.
  {
    Gate cnot{GateKind::Cnot, {reg(1), reg(0)}, 0.0, ""};
    Circuit c;
    c.num_register = 2;
    c.gates.push_back(cnot);
    const Matrix u = circuit_unitary(c);
    const Matrix lhs = u * tensor(z, i2) * u;
    checks.push_back({"cnot_chaining", max_abs(lhs - tensor(z, z))});
  }
  // iSWAP chaining: [G]^{-pi/2} Y1 [G]^{pi/2} = -Z1 X2.
  {
    const Matrix u = expm_generator(g, M_PI / 2.0);
    const Matrix lhs = conj_by(u, tensor(y, i2));
    checks.push_back({"iswap_chaining", max_abs(lhs + tensor(z, x))});
  }
  // Exchange chaining: [Z1 G34]^{-pi/4} G12 [Z1 G34]^{pi/4}
  //   = G12 P_ker{G34} + F12 G34.
  {
    const Matrix zg = tensor(z, g);  // on qubits (1, 3, 4)
    const Matrix u = expm_generator(embed(zg, {0, 2, 3}, 4), M_PI / 4.0);
    const Matrix g12 = embed(g, {0, 1}, 4);
    const Matrix g34 = embed(g, {2, 3}, 4);
    const Matrix f12 = embed(f, {0, 1}, 4);
    const Matrix pker34 = embed(make_factor(FactorKind::ExchangeG).p_ker, {2, 3}, 4);
    const Matrix lhs = conj_by(u, g12);
    checks.push_back(
        {"exchange_chaining", max_abs(lhs - (g12 * pker34 + f12 * g34))});
  }
  // Exchange chaining, F flavour: U F12 U^dag = F12 P_ker{G34} + G12 G34.
  {
    const Matrix zg = tensor(z, g);
    const Matrix u = expm_generator(embed(zg, {0, 2, 3}, 4), M_PI / 4.0);
    const Matrix g12 = embed(g, {0, 1}, 4);
    const Matrix g34 = embed(g, {2, 3}, 4);
    const Matrix f12 = embed(f, {0, 1}, 4);
    const Matrix pker34 = embed(make_factor(FactorKind::ExchangeG).p_ker, {2, 3}, 4);
    const Matrix lhs = u * f12 * u.adjoint();
    checks.push_back(
        {"exchange_chaining_f", max_abs(lhs - (f12 * pker34 + g12 * g34))});
  }
  // Exchange generator from iSWAPs: [F_il]^{pi/2}[G_ik]^a[F_il]^{-pi/2} = [Z_i G_kl]^a.
  {
    const double a = 0.7;
    const Matrix fil = expm_generator(embed(f, {0, 2}, 3), -M_PI / 2.0);
    const Matrix gik = expm_generator(embed(g, {0, 1}, 3), a);
    const Matrix lhs = fil.adjoint() * gik * fil;
    const Matrix rhs = expm_generator(embed(tensor(z, g), {0, 1, 2}, 3), a);
    checks.push_back({"exchange_generator_from_iswaps", max_abs(lhs - rhs)});
  }
  // Toffoli chaining: [P1 X2 P3]^{pi/2} conjugation of Z1 Z2 gives
  //   -P1 Z2 Z3 + P1_perp Z2.
  {
    const Matrix gen = embed(tensor(p1, tensor(x, p1)), {0, 1, 2}, 3);
    const Matrix u = expm_generator(gen, M_PI / 2.0);
    const Matrix z1z2 = embed(tensor(z, z), {0, 1}, 3);
    const Matrix rhs = -embed(tensor(p1, tensor(z, z)), {0, 1, 2}, 3) +
                       embed(tensor(p0, z), {0, 1}, 3);
    const Matrix lhs = conj_by(u, z1z2);
    checks.push_back({"toffoli_chaining", max_abs(lhs - rhs)});
  }
  // Randomized instances of the general conjugation formula.
  {
    std::mt19937 rng(20260810);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix s = random_reflection(2, (trial % 2) + 1, rng);
      const Matrix b = random_reflection(2, (trial % 2) + 1, rng);
      const Matrix r = random_hermitian(2, rng);
      const double alpha = 0.3 + 0.25 * trial;
      const Matrix u = expm_generator(tensor(s, b), alpha);
      const Matrix lhs = u * tensor(r, identity(2)) * u.adjoint();
      const Matrix rhs = conjugation_formula(s, b, r, alpha);
      worst = std::max(worst, max_abs(lhs - rhs));
    }
    checks.push_back({"conjugation_formula_randomized", worst});
  }
  // alpha = 0 leaves R unchanged.
  {
    std::mt19937 rng(7);
    const Matrix s = random_reflection(2, 1, rng);
    const Matrix b = random_reflection(2, 2, rng);
    const Matrix r = random_hermitian(2, rng);
    const Matrix u = expm_generator(tensor(s, b), 0.0);
    const Matrix lhs = u * tensor(r, identity(2)) * u.adjoint();
    checks.push_back({"conjugation_formula_alpha_zero",
                      max_abs(lhs - tensor(r, identity(2)))});
  }
  return checks;
}

}  // namespace qchain
