// Copyright 2026 The qmc Authors
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

#include "qmc/tolerances.hpp"

namespace qmc {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace linalg {

Matrix kron(const Matrix& a, const Matrix& b);

// Row-stacking vectorization: vec(|i><j|) = e_i (x) e_j, so that
// vec(A X B) = (A (x) B^T) vec(X).
Vector vec(const Matrix& x);
Matrix unvec(const Vector& v, Index n);

Matrix hermitian_part(const Matrix& a);

bool all_finite(const Matrix& a);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Sum of singular values; for Hermitian input the sum of |eigenvalues|.
double trace_norm(const Matrix& a);

// Eigenvalue cutoff used for supports and ranks of positive operators.
double rank_cutoff(double largest_eigenvalue, const Tolerances& tol);

// Orthonormal basis of the eigenvectors of a Hermitian positive operator
// whose eigenvalues exceed rank_cutoff. Columns are ordered by decreasing
// eigenvalue.
Matrix support_basis(const Matrix& psd, const Tolerances& tol);

struct Nullspace {
  Matrix basis;                    // orthonormal columns
  std::vector<double> singular;    // all singular values, descending
  double cutoff = 0.0;             // absolute cutoff that was applied
};

// Right nullspace of a square or tall matrix via SVD; singular values
// sigma <= rel_cutoff * max(sigma_max, 1) are treated as zero.
Nullspace nullspace(const Matrix& a, double rel_cutoff);

// Positive part A_+ of a Hermitian matrix.
Matrix positive_part(const Matrix& hermitian);

}  // namespace linalg
}  // namespace qmc
