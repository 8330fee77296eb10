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

#include "qmc/density.hpp"

#include <cmath>
#include <string>

#include "qmc/error.hpp"
#include "qmc/subspace.hpp"

namespace qmc {
namespace {

constexpr double kRoundoff = 1e-14;

}  // namespace

DensityOperator::DensityOperator(const Matrix& m, const Tolerances& tol) {
  finish(m, tol, /*strict=*/true);
}

DensityOperator DensityOperator::normalized(const Matrix& m, const Tolerances& tol) {
  DensityOperator out;
  out.finish(m, tol, /*strict=*/false);
  return out;
}

void DensityOperator::finish(const Matrix& m, const Tolerances& tol, bool strict) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "density operator must be a nonempty square matrix");
  }
  if (!linalg::all_finite(m)) {
    throw Error(ErrorKind::InvalidState, "density operator has non-finite entries");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (strict && herm_dev > tol.herm) {
    throw Error(ErrorKind::InvalidState,
                "density operator is not Hermitian (deviation " + std::to_string(herm_dev) + ")");
  }
  Matrix h = linalg::hermitian_part(m);
  const double tr = h.trace().real();
  if (strict && std::abs(tr - 1.0) > tol.trace) {
    throw Error(ErrorKind::InvalidState,
                "density operator trace is " + std::to_string(tr) + ", expected 1");
  }
  if (!(tr > 0.0)) {
    throw Error(ErrorKind::InvalidState, "operator has nonpositive trace");
  }
  h /= tr;
  bool cleaned = herm_dev > kRoundoff || std::abs(tr - 1.0) > kRoundoff;

  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "density operator eigensolver failed");
  }
  const double min_eig = es.eigenvalues()(0);
  if (min_eig < -tol.psd) {
    throw Error(ErrorKind::InvalidState,
                "density operator has eigenvalue " + std::to_string(min_eig));
  }
  if (min_eig < 0.0) {
    const RealVector w = es.eigenvalues().cwiseMax(0.0);
    h = es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    h = linalg::hermitian_part(h);
    h /= h.trace().real();
    cleaned = cleaned || min_eig < -kRoundoff;
  }
  matrix_ = std::move(h);
  cleaned_ = cleaned;
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::InvalidState, "pure state vector is zero");
  const Vector u = psi / norm;
  return normalized(u * u.adjoint());
}

DensityOperator DensityOperator::basis_state(Index n, Index i) {
  if (i < 0 || i >= n) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  Matrix m = Matrix::Zero(n, n);
  m(i, i) = 1.0;
  return DensityOperator(m);
}

DensityOperator DensityOperator::maximally_mixed(Index n) {
  return DensityOperator(Matrix::Identity(n, n) / static_cast<double>(n));
}

DensityOperator DensityOperator::uniform_on(const Subspace& sub) {
  if (sub.is_zero()) throw Error(ErrorKind::ZeroSubspace, "uniform_on: zero subspace");
  return normalized(sub.projector());
}

}  // namespace qmc
