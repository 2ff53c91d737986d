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

#include "qchain/linalg.hpp"

namespace qchain {

// Site-local Hermitian factor R with its support/kernel split
// R = S + S_perp, where S = P_supp R P_supp and S_perp = P_ker R P_ker.
// Every factory-made factor squares to the identity on its support.
struct HermitianFactor {
  int arity = 1;  // number of qubits the factor acts on (1 or 2)
  Matrix matrix_r;
  Matrix matrix_s;
  Matrix p_supp;
  Matrix p_ker;
  int rank = 0;
  std::string tag;

  // Operator part living on the kernel (zero for all registered kinds).
  Matrix kernel_op() const { return matrix_r - matrix_s; }
  Eigen::Index dim() const { return matrix_r.rows(); }
};

enum class FactorKind {
  PauliX,
  PauliY,
  PauliZ,
  ProjOne,          // |1><1|
  ExchangeG,        // sigma+ sigma- + sigma- sigma+
  ExchangeF,        // -i (sigma+ sigma- - sigma- sigma+)
  ParityPair,       // sigma+ sigma+ + sigma- sigma-  (X-frame of G)
};

std::string factor_kind_name(FactorKind kind);
FactorKind factor_kind_from_name(const std::string& name);

// Spectral split of a Hermitian matrix: eigenvalues with |lambda| <= tol form
// the kernel. Throws std::invalid_argument for non-Hermitian input.
HermitianFactor support_decompose(const Matrix& r, double tol = 1e-9);

// Canonical factor with its decomposition precomputed.
const HermitianFactor& make_factor(FactorKind kind);

// Residual of the chaining contract for a candidate entangler u on the joint
// space of rI and rJ:
//   u^dag (R_i x 1) u - (S_i x R_j + S_i_perp x 1 + S_i x P_ker{R_j}).
// Zero means u extends a string ending in rI by one rJ factor.
// Throws std::invalid_argument on dimension mismatch.
double chain_identity_residual(const Matrix& u, const HermitianFactor& r_i,
                               const HermitianFactor& r_j);

}  // namespace qchain
