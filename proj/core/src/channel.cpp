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

#include "qmc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmc/error.hpp"

namespace qmc {

Matrix SuperoperatorMatrix::apply(const Matrix& x) const {
  if (x.rows() != dim || x.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "superoperator applied to operator of wrong size");
  }
  return linalg::unvec(matrix * linalg::vec(x), dim);
}

QuantumChannel make_channel(std::vector<Matrix> kraus, Index dim, const Tolerances& tol,
                            bool require_tp) {
  if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "channel dimension must be >= 1");
  if (kraus.empty()) throw Error(ErrorKind::DimensionMismatch, "Kraus list is empty");
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    const Matrix& k = kraus[i];
    if (k.rows() != dim || k.cols() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Kraus operator " + std::to_string(i) + " is " + std::to_string(k.rows()) +
                      "x" + std::to_string(k.cols()) + ", expected " + std::to_string(dim) +
                      "x" + std::to_string(dim));
    }
    if (!linalg::all_finite(k)) {
      throw Error(ErrorKind::BadInput,
                  "Kraus operator " + std::to_string(i) + " has non-finite entries");
    }
    sum += k.adjoint() * k;
  }
  const double deviation = linalg::spectral_norm(sum - Matrix::Identity(dim, dim));
  const bool tp = deviation <= tol.cptp;
  if (require_tp && !tp) {
    throw Error(ErrorKind::NotTracePreserving,
                "sum of K^dag K deviates from identity by " + std::to_string(deviation));
  }
  return QuantumChannel(dim, std::move(kraus), tp, deviation);
}

QuantumChannel validate_channel(std::vector<Matrix> kraus, Index dim, const Tolerances& tol) {
  return make_channel(std::move(kraus), dim, tol, /*require_tp=*/true);
}

Matrix apply_map(const QuantumChannel& channel, const Matrix& x) {
  const Index n = channel.dim();
  if (x.rows() != n || x.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "operator size does not match channel dimension");
  }
  Matrix out = Matrix::Zero(n, n);
  for (const Matrix& k : channel.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

DensityOperator apply(const QuantumChannel& channel, const DensityOperator& state,
                      const Tolerances& tol) {
  return DensityOperator::normalized(apply_map(channel, state.matrix()), tol);
}

Matrix adjoint_apply(const QuantumChannel& channel, const Matrix& observable) {
  const Index n = channel.dim();
  if (observable.rows() != n || observable.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "observable size does not match channel dimension");
  }
  Matrix out = Matrix::Zero(n, n);
  for (const Matrix& k : channel.kraus()) out.noalias() += k.adjoint() * observable * k;
  return out;
}

SuperoperatorMatrix matrix_rep(const QuantumChannel& channel) {
  const Index n = channel.dim();
  SuperoperatorMatrix s{n, Matrix::Zero(n * n, n * n)};
  for (const Matrix& k : channel.kraus()) s.matrix += linalg::kron(k, k.conjugate());
  return s;
}

QuantumChannel from_superoperator(const SuperoperatorMatrix& s, const Tolerances& tol) {
  const Index n = s.dim;
  if (s.matrix.rows() != n * n || s.matrix.cols() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "superoperator matrix is not n^2 x n^2");
  }
  // Choi reshuffle: C[(i,k),(j,l)] = M[(i,j),(k,l)].
  Matrix choi(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) choi(i * n + k, j * n + l) = s.matrix(i * n + j, k * n + l);

  Eigen::SelfAdjointEigenSolver<Matrix> es(linalg::hermitian_part(choi));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "Choi matrix eigensolver failed");
  }
  const RealVector& w = es.eigenvalues();
  const double wmax = std::max(w(w.size() - 1), 1.0);
  if (w(0) < -1e3 * tol.psd * wmax) {
    throw Error(ErrorKind::InvalidState,
                "superoperator is not completely positive (Choi eigenvalue " +
                    std::to_string(w(0)) + ")");
  }
  std::vector<Matrix> kraus;
  for (Index c = w.size() - 1; c >= 0; --c) {
    if (w(c) <= 1e-13 * wmax) break;
    kraus.push_back(std::sqrt(w(c)) * linalg::unvec(es.eigenvectors().col(c), n));
  }
  if (kraus.empty()) kraus.push_back(Matrix::Zero(n, n));
  return make_channel(std::move(kraus), n, tol, /*require_tp=*/false);
}

QuantumChannel power(const QuantumChannel& channel, unsigned k, const Tolerances& tol) {
  const Index n = channel.dim();
  if (k == 0) return make_channel({Matrix::Identity(n, n)}, n, tol, false);
  if (k == 1) return channel;
  Matrix base = matrix_rep(channel).matrix;
  Matrix acc = Matrix::Identity(n * n, n * n);
  for (unsigned e = k; e > 0; e >>= 1) {
    if (e & 1U) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return from_superoperator(SuperoperatorMatrix{n, std::move(acc)}, tol);
}

QuantumChannel restrict_to(const QuantumChannel& channel, const Subspace& sub,
                           const Tolerances& tol) {
  if (sub.ambient_dim() != channel.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the channel's space");
  }
  if (sub.is_zero()) throw Error(ErrorKind::ZeroSubspace, "cannot restrict to the zero subspace");
  const Matrix& b = sub.basis();
  std::vector<Matrix> kraus;
  kraus.reserve(channel.kraus().size());
  for (const Matrix& k : channel.kraus()) kraus.push_back(b.adjoint() * k * b);
  return make_channel(std::move(kraus), sub.dim(), tol, /*require_tp=*/false);
}

QuantumChannel direct_sum(const QuantumChannel& a, const QuantumChannel& b) {
  const Index na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<Matrix> kraus;
  for (const Matrix& k : a.kraus()) {
    Matrix m = Matrix::Zero(n, n);
    m.topLeftCorner(na, na) = k;
    kraus.push_back(std::move(m));
  }
  for (const Matrix& k : b.kraus()) {
    Matrix m = Matrix::Zero(n, n);
    m.bottomRightCorner(nb, nb) = k;
    kraus.push_back(std::move(m));
  }
  Tolerances tol;
  tol.cptp = std::max({tol.cptp, 2 * a.kraus_sum_deviation(), 2 * b.kraus_sum_deviation()});
  return make_channel(std::move(kraus), n, tol, a.trace_preserving() && b.trace_preserving());
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<Matrix> kraus;
  for (const Matrix& ka : a.kraus())
    for (const Matrix& kb : b.kraus()) kraus.push_back(linalg::kron(ka, kb));
  Tolerances tol;
  tol.cptp = std::max({tol.cptp, 4 * a.kraus_sum_deviation(), 4 * b.kraus_sum_deviation()});
  return make_channel(std::move(kraus), a.dim() * b.dim(), tol,
                      a.trace_preserving() && b.trace_preserving());
}

}  // namespace qmc
