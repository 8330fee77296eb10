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

#include "qmc/subspace.hpp"

#include <string>

#include "qmc/error.hpp"

namespace qmc {

Subspace Subspace::zero(Index ambient_dim) { return Subspace(Matrix(ambient_dim, 0)); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::coordinate(Index ambient_dim, std::span<const Index> indices) {
  Matrix basis = Matrix::Zero(ambient_dim, static_cast<Index>(indices.size()));
  Index c = 0;
  for (Index i : indices) {
    if (i < 0 || i >= ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "coordinate index out of range");
    }
    basis(i, c++) = 1.0;
  }
  return span(basis);
}

Subspace Subspace::coordinate(Index ambient_dim, std::initializer_list<Index> indices) {
  return coordinate(ambient_dim, std::span<const Index>(indices.begin(), indices.size()));
}

Subspace Subspace::span(const Matrix& vectors, const Tolerances& tol) {
  if (vectors.cols() == 0) return zero(vectors.rows());
  return Subspace(linalg::support_basis(vectors * vectors.adjoint(), tol));
}

Subspace Subspace::support_of(const Matrix& psd, const Tolerances& tol) {
  if (psd.rows() != psd.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "support_of: operator is not square");
  }
  return Subspace(linalg::support_basis(psd, tol));
}

Subspace Subspace::from_orthonormal(Matrix basis, const Tolerances& tol) {
  if (!linalg::all_finite(basis)) {
    throw Error(ErrorKind::InvalidSubspace, "subspace basis has non-finite entries");
  }
  const Index k = basis.cols();
  const double dev = k == 0 ? 0.0
                            : (basis.adjoint() * basis - Matrix::Identity(k, k)).norm();
  if (dev > tol.orth) {
    throw Error(ErrorKind::InvalidSubspace,
                "subspace basis is not orthonormal (deviation " + std::to_string(dev) + ")");
  }
  return Subspace(std::move(basis));
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

bool Subspace::contained_in(const Subspace& other, const Tolerances& tol) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  }
  if (is_zero()) return true;
  if (dim() > other.dim()) return false;
  const Matrix residual = basis_ - other.basis_ * (other.basis_.adjoint() * basis_);
  return linalg::spectral_norm(residual) <= tol.inv;
}

bool Subspace::equals(const Subspace& other, const Tolerances& tol) const {
  return dim() == other.dim() && contained_in(other, tol) && other.contained_in(*this, tol);
}

bool Subspace::orthogonal_to(const Subspace& other, const Tolerances& tol) const {
  if (other.ambient_dim() != ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  }
  if (is_zero() || other.is_zero()) return true;
  return linalg::spectral_norm(other.basis_.adjoint() * basis_) <= tol.inv;
}

double Subspace::distance(const Subspace& other) const {
  return linalg::spectral_norm(projector() - other.projector());
}

Subspace Subspace::join(const Subspace& other, const Tolerances& tol) const {
  const Subspace parts[] = {*this, other};
  return qmc::join(parts, ambient_dim(), tol);
}

Subspace Subspace::orthocomplement(const Tolerances& tol) const {
  const Index n = ambient_dim();
  return support_of(Matrix::Identity(n, n) - projector(), tol);
}

Subspace Subspace::minus(const Subspace& inner, const Tolerances& tol) const {
  if (inner.is_zero()) return *this;
  const Index n = ambient_dim();
  const Matrix q = Matrix::Identity(n, n) - inner.projector();
  return support_of(q * projector() * q, tol);
}

Subspace Subspace::embed(const Matrix& isometry) const {
  if (isometry.cols() != ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "embed: isometry width differs from ambient dim");
  }
  return Subspace(isometry * basis_);
}

Subspace join(std::span<const Subspace> parts, Index ambient_dim, const Tolerances& tol) {
  Matrix sum = Matrix::Zero(ambient_dim, ambient_dim);
  for (const Subspace& s : parts) {
    if (s.ambient_dim() != ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "join: subspaces live in different spaces");
    }
    sum += s.projector();
  }
  return Subspace::support_of(sum, tol);
}

}  // namespace qmc
