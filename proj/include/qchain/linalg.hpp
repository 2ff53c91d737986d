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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qchain {

using cplx = std::complex<double>;
// Row-major so that raw buffers line up with numpy's C order.
using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

// Tolerance for identities built in one or two products.
inline constexpr double kTolIdentity = 1e-12;
// Tolerance for unitaries composed from ~100 products at desk-scale dims.
inline constexpr double kTolComposed = 1e-10;

bool is_power_of_two(Eigen::Index n);

Matrix identity(Eigen::Index dim);

// Largest entry magnitude (max-entry norm).
double max_abs(const Matrix& m);

// max |m - m^dagger| entry; zero for Hermitian matrices.
double hermiticity_defect(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kTolIdentity);
bool is_unitary(const Matrix& m, double tol = kTolComposed);

// Kronecker product; the left factor indexes the slower-varying qubit.
Matrix tensor(const Matrix& a, const Matrix& b);

// exp(-i * alpha * a) for Hermitian a. Uses the reflection form
// P_ker + cos(alpha) P_supp - i sin(alpha) a when a^2 is the support
// projector of a, otherwise a Hermitian eigendecomposition.
// Throws std::invalid_argument (reporting the max asymmetry) when a is not
// Hermitian within 1e-10.
Matrix expm_generator(const Matrix& a, double alpha);

// Embeds op (acting on the listed qubits, in listed order, qubit 0 being the
// slowest-varying tensor factor) into a 2^total-dimensional operator.
// Throws std::invalid_argument on site collisions or out-of-range sites.
Matrix embed(const Matrix& op, const std::vector<int>& sites, int total);

// min over phi of max_abs(u - e^{i phi} v): distance up to global phase.
// Throws std::invalid_argument on dimension mismatch.
double phase_distance(const Matrix& u, const Matrix& v);

// Single-qubit constants.
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& proj_one();   // |1><1|
const Matrix& proj_zero();  // |0><0|
const Matrix& sigma_plus();   // |1><0|
const Matrix& sigma_minus();  // |0><1|

// Unitary v with v^dagger from v = to, for Hermitian involutions from/to
// (2x2, spectra {+1,-1}); used to change the local frame of a chain factor.
Matrix basis_change(const Matrix& from, const Matrix& to);

// Decomposes a single-qubit unitary into Z-Y-Z rotation angles such that
// u = e^{i phase} * exp(-i a Z) exp(-i b Y) exp(-i c Z).
struct EulerAngles {
  double z_pre;
  double y_mid;
  double z_post;
  double phase;
};
EulerAngles euler_zyz(const Matrix& u);

}  // namespace qchain
