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

#include "qmc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "qmc/error.hpp"

namespace qmc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidSubspace: return "InvalidSubspace";
    case ErrorKind::ZeroSubspace: return "ZeroSubspace";
    case ErrorKind::EigSolverFailure: return "EigSolverFailure";
    case ErrorKind::NoStationaryState: return "NoStationaryState";
    case ErrorKind::DecompositionDiverged: return "DecompositionDiverged";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::UnequalDimensionsInBlock: return "UnequalDimensionsInBlock";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::CycleOrderingFailed: return "CycleOrderingFailed";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotTracePreserving:
    case ErrorKind::InvalidState:
    case ErrorKind::InvalidSubspace:
    case ErrorKind::ZeroSubspace:
    case ErrorKind::NotOrthogonal:
    case ErrorKind::NotInvariant:
    case ErrorKind::NotIrreducible:
    case ErrorKind::NotStochastic:
    case ErrorKind::BadInput:
      return true;
    default:
      return false;
  }
}

namespace linalg {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector vec(const Matrix& x) {
  Vector v(x.size());
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  }
  return v;
}

Matrix unvec(const Vector& v, Index n) {
  if (v.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "unvec: vector length is not n^2");
  }
  Matrix x(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) x(i, j) = v(i * n + j);
  }
  return x;
}

Matrix hermitian_part(const Matrix& a) { return (a + a.adjoint()) / 2.0; }

bool all_finite(const Matrix& a) {
  for (Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

double rank_cutoff(double largest_eigenvalue, const Tolerances& tol) {
  return std::max(tol.rank_abs, tol.rank_rel * largest_eigenvalue);
}

Matrix support_basis(const Matrix& psd, const Tolerances& tol) {
  const Index n = psd.rows();
  if (n == 0) return Matrix(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(psd));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "support: Hermitian eigensolver failed");
  }
  const RealVector& w = es.eigenvalues();  // ascending
  const double cutoff = rank_cutoff(w(n - 1), tol);
  Index keep = 0;
  while (keep < n && w(n - 1 - keep) > cutoff) ++keep;
  Matrix basis(n, keep);
  for (Index c = 0; c < keep; ++c) basis.col(c) = es.eigenvectors().col(n - 1 - c);
  return basis;
}

Nullspace nullspace(const Matrix& a, double rel_cutoff) {
  Nullspace out;
  const Index cols = a.cols();
  if (cols == 0) return out;
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "nullspace: SVD did not converge");
  }
  const RealVector& s = svd.singularValues();
  out.singular.assign(s.data(), s.data() + s.size());
  const double smax = s.size() > 0 ? s(0) : 0.0;
  out.cutoff = rel_cutoff * std::max(smax, 1.0);
  Index rank = 0;
  while (rank < s.size() && s(rank) > out.cutoff) ++rank;
  out.basis = svd.matrixV().rightCols(cols - rank);
  return out;
}

Matrix positive_part(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(hermitian));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "positive_part: Hermitian eigensolver failed");
  }
  const RealVector w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace linalg
}  // namespace qmc
