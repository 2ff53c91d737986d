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

#include "qchain/factors.hpp"

#include <map>
#include <stdexcept>

namespace qchain {

std::string factor_kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::PauliX: return "X";
    case FactorKind::PauliY: return "Y";
    case FactorKind::PauliZ: return "Z";
    case FactorKind::ProjOne: return "P";
    case FactorKind::ExchangeG: return "G";
    case FactorKind::ExchangeF: return "F";
    case FactorKind::ParityPair: return "PP";
  }
  throw std::logic_error("factor_kind_name: unknown kind");
}

FactorKind factor_kind_from_name(const std::string& name) {
  static const std::map<std::string, FactorKind> table = {
      {"X", FactorKind::PauliX},  {"Y", FactorKind::PauliY},
      {"Z", FactorKind::PauliZ},  {"P", FactorKind::ProjOne},
      {"G", FactorKind::ExchangeG}, {"F", FactorKind::ExchangeF},
      {"PP", FactorKind::ParityPair},
  };
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown factor kind: " + name);
  return it->second;
}

HermitianFactor support_decompose(const Matrix& r, double tol) {
  if (!is_hermitian(r, 1e-10))
    throw std::invalid_argument("support_decompose: input is not Hermitian");
  const Eigen::Index dim = r.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(r);
  Matrix p_ker = Matrix::Zero(dim, dim);
  int rank = 0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (std::abs(solver.eigenvalues()(k)) <= tol) {
      const Vector v = solver.eigenvectors().col(k);
      p_ker += v * v.adjoint();
    } else {
      ++rank;
    }
  }
  HermitianFactor f;
  f.arity = 0;
  for (Eigen::Index d = dim; d > 1; d >>= 1) ++f.arity;
  f.matrix_r = r;
  f.p_ker = p_ker;
  f.p_supp = identity(dim) - p_ker;
  f.matrix_s = f.p_supp * r * f.p_supp;
  f.rank = rank;
  return f;
}

namespace {

HermitianFactor build_kind(FactorKind kind) {
  Matrix r;
  switch (kind) {
    case FactorKind::PauliX: r = pauli_x(); break;
    case FactorKind::PauliY: r = pauli_y(); break;
    case FactorKind::PauliZ: r = pauli_z(); break;
    case FactorKind::ProjOne: r = proj_one(); break;
    case FactorKind::ExchangeG:
      r = tensor(sigma_plus(), sigma_minus()) + tensor(sigma_minus(), sigma_plus());
      break;
    case FactorKind::ExchangeF:
      r = cplx{0, -1} * (tensor(sigma_plus(), sigma_minus()) -
                         tensor(sigma_minus(), sigma_plus()));
      break;
    case FactorKind::ParityPair:
      r = tensor(sigma_plus(), sigma_plus()) + tensor(sigma_minus(), sigma_minus());
      break;
  }
  HermitianFactor f = support_decompose(r, 1e-9);
  f.tag = factor_kind_name(kind);
  return f;
}

}  // namespace

const HermitianFactor& make_factor(FactorKind kind) {
  static const std::map<FactorKind, HermitianFactor> cache = [] {
    std::map<FactorKind, HermitianFactor> c;
    for (FactorKind k :
         {FactorKind::PauliX, FactorKind::PauliY, FactorKind::PauliZ,
          FactorKind::ProjOne, FactorKind::ExchangeG, FactorKind::ExchangeF,
          FactorKind::ParityPair})
      c.emplace(k, build_kind(k));
    return c;
  }();
  return cache.at(kind);
}

double chain_identity_residual(const Matrix& u, const HermitianFactor& r_i,
                               const HermitianFactor& r_j) {
  const Eigen::Index dim = r_i.dim() * r_j.dim();
  if (u.rows() != dim || u.cols() != dim)
    throw std::invalid_argument(
        "chain_identity_residual: entangler dim does not match joint space");
  const Matrix lhs = u.adjoint() * tensor(r_i.matrix_r, identity(r_j.dim())) * u;
  const Matrix rhs = tensor(r_i.matrix_s, r_j.matrix_r) +
                     tensor(r_i.kernel_op(), identity(r_j.dim())) +
                     tensor(r_i.matrix_s, r_j.p_ker);
  return max_abs(lhs - rhs);
}

}  // namespace qchain
