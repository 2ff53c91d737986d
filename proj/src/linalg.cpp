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

#include "qchain/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qchain {

namespace {
constexpr cplx kI{0.0, 1.0};
}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix expm_generator(const Matrix& a, double alpha) {
  const double defect = hermiticity_defect(a);
  if (defect > 1e-10) {
    std::ostringstream msg;
    msg << "expm_generator: generator is not Hermitian (max asymmetry "
        << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  const Eigen::Index dim = a.rows();
  const Matrix a2 = a * a;
  // Reflection fast path: a^2 idempotent and a * a^2 = a means a^2 is the
  // support projector of a.
  if (max_abs(a2 * a2 - a2) <= kTolIdentity && max_abs(a * a2 - a) <= kTolIdentity) {
    const Matrix p_ker = identity(dim) - a2;
    return p_ker + std::cos(alpha) * a2 - kI * std::sin(alpha) * a;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("expm_generator: eigendecomposition failed");
  const auto& evals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  Vector phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k)
    phases(k) = std::exp(-kI * alpha * evals(k));
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

namespace {

// Bit position (counting from the most significant end) of qubit q in an
// n-qubit basis index: qubit 0 is the slowest-varying factor.
inline int bit_shift(int qubit, int total) { return total - 1 - qubit; }

}  // namespace

Matrix embed(const Matrix& op, const std::vector<int>& sites, int total) {
  const int k = static_cast<int>(sites.size());
  if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << k))
    throw std::invalid_argument("embed: operator dim does not match site count");
  std::vector<bool> seen(total, false);
  for (int s : sites) {
    if (s < 0 || s >= total)
      throw std::invalid_argument("embed: site index out of range");
    if (seen[s]) throw std::invalid_argument("embed: repeated site index");
    seen[s] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < total; ++q)
    if (!seen[q]) rest.push_back(q);

  const Eigen::Index dim = Eigen::Index{1} << total;
  Matrix out = Matrix::Zero(dim, dim);
  const Eigen::Index op_dim = op.rows();
  const Eigen::Index rest_dim = Eigen::Index{1} << rest.size();
  for (Eigen::Index r = 0; r < rest_dim; ++r) {
    Eigen::Index base = 0;
    for (size_t b = 0; b < rest.size(); ++b)
      if ((r >> (rest.size() - 1 - b)) & 1)
        base |= Eigen::Index{1} << bit_shift(rest[b], total);
    for (Eigen::Index i = 0; i < op_dim; ++i) {
      Eigen::Index row = base;
      for (int b = 0; b < k; ++b)
        if ((i >> (k - 1 - b)) & 1) row |= Eigen::Index{1} << bit_shift(sites[b], total);
      for (Eigen::Index j = 0; j < op_dim; ++j) {
        if (op(i, j) == cplx{0.0, 0.0}) continue;
        Eigen::Index col = base;
        for (int b = 0; b < k; ++b)
          if ((j >> (k - 1 - b)) & 1) col |= Eigen::Index{1} << bit_shift(sites[b], total);
        out(row, col) = op(i, j);
      }
    }
  }
  return out;
}

double phase_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("phase_distance: dimension mismatch");
  // Align the phase of the largest-magnitude entry of v against u, then scan
  // for a better global phase.
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      if (std::abs(v(i, j)) > best) {
        best = std::abs(v(i, j));
        bi = i;
        bj = j;
      }
  double dist = max_abs(u - v);
  if (best > 0.0) {
    const cplx ratio = u(bi, bj) / v(bi, bj);
    if (std::abs(ratio) > 0.0) {
      const cplx phase = ratio / std::abs(ratio);
      dist = std::min(dist, max_abs(u - phase * v));
    }
  }
  // Equivalent pairs are already aligned exactly; the residual scan only
  // matters when the entry used for alignment was unreliable.
  if (dist < 1e-11) return dist;
  constexpr int kScanSteps = 720;
  for (int s = 0; s < kScanSteps; ++s) {
    const double phi = 2.0 * M_PI * s / kScanSteps;
    const double d = max_abs(u - std::exp(kI * phi) * v);
    if (d < dist) dist = d;
  }
  return dist;
}

namespace {

Matrix make2(cplx a, cplx b, cplx c, cplx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

const Matrix& pauli_x() {
  static const Matrix m = make2(0, 1, 1, 0);
  return m;
}
const Matrix& pauli_y() {
  static const Matrix m = make2(0, cplx{0, -1}, cplx{0, 1}, 0);
  return m;
}
const Matrix& pauli_z() {
  static const Matrix m = make2(1, 0, 0, -1);
  return m;
}
const Matrix& proj_one() {
  static const Matrix m = make2(0, 0, 0, 1);
  return m;
}
const Matrix& proj_zero() {
  static const Matrix m = make2(1, 0, 0, 0);
  return m;
}
const Matrix& sigma_plus() {
  static const Matrix m = make2(0, 0, 1, 0);
  return m;
}
const Matrix& sigma_minus() {
  static const Matrix m = make2(0, 1, 0, 0);
  return m;
}

Matrix basis_change(const Matrix& from, const Matrix& to) {
  if (from.rows() != 2 || to.rows() != 2)
    throw std::invalid_argument("basis_change: expects 2x2 operators");
  Eigen::SelfAdjointEigenSolver<Matrix> sf(from);
  Eigen::SelfAdjointEigenSolver<Matrix> st(to);
  // Order both eigenbases by descending eigenvalue so +1 maps to +1.
  Matrix f(2, 2), t(2, 2);
  f.col(0) = sf.eigenvectors().col(1);
  f.col(1) = sf.eigenvectors().col(0);
  t.col(0) = st.eigenvectors().col(1);
  t.col(1) = st.eigenvectors().col(0);
  return f * t.adjoint();
}

EulerAngles euler_zyz(const Matrix& u) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, 1e-9))
    throw std::invalid_argument("euler_zyz: expects a 2x2 unitary");
  // Strip the determinant phase to land in SU(2).
  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const double phase = 0.5 * std::arg(det);
  const Matrix su = std::exp(-cplx{0, 1} * phase) * u;
  // su = [[e^{-i(a+c)} cos b, -e^{-i(a-c)} sin b],
  //       [e^{ i(a-c)} sin b,  e^{ i(a+c)} cos b]]
  const double cb = std::min(1.0, std::abs(su(0, 0)));
  const double sb = std::min(1.0, std::abs(su(1, 0)));
  const double b = std::atan2(sb, cb);
  double apc = 0.0, amc = 0.0;
  if (std::abs(su(0, 0)) > 1e-12) apc = -std::arg(su(0, 0));
  if (std::abs(su(1, 0)) > 1e-12) amc = std::arg(su(1, 0));
  const double a = 0.5 * (apc + amc);
  const double c = 0.5 * (apc - amc);
  return EulerAngles{a, b, c, phase};
}

}  // namespace qchain
