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

#include "qmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qmc/error.hpp"

namespace qmc {
namespace {

bool clusters_with(Complex a, Complex b, const Tolerances& tol) {
  return std::abs(a - b) <= tol.cluster;
}

std::vector<PeripheralCluster> clusters_of(const QuantumChannel& channel, const Tolerances& tol) {
  return peripheral_clusters(spectrum(channel, tol), tol);
}

}  // namespace

SpectrumReport spectrum(const QuantumChannel& channel, const Tolerances& tol) {
  const SuperoperatorMatrix m = matrix_rep(channel);
  Eigen::ComplexEigenSolver<Matrix> es(m.matrix, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::EigSolverFailure, "superoperator eigensolver did not converge");
  }
  SpectrumReport report;
  const Vector& ev = es.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  for (Complex z : report.eigenvalues) {
    report.spectral_radius = std::max(report.spectral_radius, std::abs(z));
    if (std::abs(z) >= 1.0 - tol.peripheral) report.peripheral.push_back(z);
  }
  return report;
}

std::vector<PeripheralCluster> peripheral_clusters(const SpectrumReport& report,
                                                   const Tolerances& tol) {
  std::vector<PeripheralCluster> clusters;
  std::vector<Complex> sums;
  for (Complex z : report.peripheral) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (clusters_with(z, clusters[c].value, tol)) {
        sums[c] += z;
        ++clusters[c].multiplicity;
        clusters[c].value = sums[c] / static_cast<double>(clusters[c].multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({z, 1});
      sums.push_back(z);
    }
  }
  return clusters;
}

Matrix spectral_projector(const Matrix& m, Complex lambda, Index expected_multiplicity,
                          const Tolerances& tol) {
  const Index size = m.rows();
  const Matrix shifted = m - lambda * Matrix::Identity(size, size);
  const linalg::Nullspace right = linalg::nullspace(shifted, tol.null_rel);
  const linalg::Nullspace left = linalg::nullspace(shifted.adjoint(), tol.null_rel);
  const Index r = right.basis.cols();
  if (r != expected_multiplicity || left.basis.cols() != r) {
    throw Error(ErrorKind::EigSolverFailure,
                "eigenvalue (" + std::to_string(lambda.real()) + "," +
                    std::to_string(lambda.imag()) + ") has algebraic multiplicity " +
                    std::to_string(expected_multiplicity) + " but eigenspace dimensions " +
                    std::to_string(r) + "/" + std::to_string(left.basis.cols()) +
                    "; check peripheral/cluster tolerances");
  }
  const Matrix gram = left.basis.adjoint() * right.basis;
  Eigen::FullPivLU<Matrix> lu(gram);
  if (!lu.isInvertible()) {
    throw Error(ErrorKind::EigSolverFailure, "left/right eigenspaces are not paired");
  }
  Matrix p = right.basis * lu.solve(left.basis.adjoint());
  const double scale = std::max(1.0, p.norm());
  const double idem = (p * p - p).cwiseAbs().maxCoeff();
  if (idem > tol.limit * scale) {
    throw Error(ErrorKind::EigSolverFailure,
                "spectral projector is not idempotent (residual " + std::to_string(idem) + ")");
  }
  return p;
}

SuperoperatorMatrix e_infinity(const QuantumChannel& channel, const Tolerances& tol) {
  const SuperoperatorMatrix m = matrix_rep(channel);
  for (const PeripheralCluster& c : clusters_of(channel, tol)) {
    if (clusters_with(c.value, Complex(1.0, 0.0), tol)) {
      return {m.dim, spectral_projector(m.matrix, Complex(1.0, 0.0), c.multiplicity, tol)};
    }
  }
  throw Error(ErrorKind::EigSolverFailure, "no eigenvalue 1 found; is the channel CPTP?");
}

SuperoperatorMatrix e_phi(const QuantumChannel& channel, const Tolerances& tol) {
  const SuperoperatorMatrix m = matrix_rep(channel);
  SuperoperatorMatrix out{m.dim, Matrix::Zero(m.matrix.rows(), m.matrix.cols())};
  for (const PeripheralCluster& c : clusters_of(channel, tol)) {
    out.matrix += spectral_projector(m.matrix, c.value, c.multiplicity, tol);
  }
  return out;
}

SuperoperatorMatrix peripheral_part(const QuantumChannel& channel, const Tolerances& tol) {
  const SuperoperatorMatrix m = matrix_rep(channel);
  SuperoperatorMatrix out{m.dim, Matrix::Zero(m.matrix.rows(), m.matrix.cols())};
  for (const PeripheralCluster& c : clusters_of(channel, tol)) {
    out.matrix += c.value * spectral_projector(m.matrix, c.value, c.multiplicity, tol);
  }
  return out;
}

FixedSpace fixed_space(const QuantumChannel& channel, const Tolerances& tol) {
  const Index n = channel.dim();
  const Index n2 = n * n;
  const SuperoperatorMatrix m = matrix_rep(channel);
  const linalg::Nullspace ns =
      linalg::nullspace(m.matrix - Matrix::Identity(n2, n2), tol.null_rel);

  FixedSpace out;
  out.dim_complex = ns.basis.cols();
  out.singular_values = ns.singular;
  out.cutoff = ns.cutoff;
  if (out.dim_complex == 0) {
    throw Error(ErrorKind::EigSolverFailure, "fixed space is empty; is the channel CPTP?");
  }
  for (Index c = 0; c < ns.basis.cols(); ++c) out.basis.push_back(linalg::unvec(ns.basis.col(c), n));

  // Hermitian and anti-Hermitian parts, flattened to real vectors.
  RealMatrix real_parts(2 * n2, 2 * out.dim_complex);
  const Complex i_unit(0.0, 1.0);
  for (Index c = 0; c < out.dim_complex; ++c) {
    const Matrix& b = out.basis[static_cast<std::size_t>(c)];
    const Vector h1 = linalg::vec((b + b.adjoint()) / 2.0);
    const Vector h2 = linalg::vec((b - b.adjoint()) / (2.0 * i_unit));
    real_parts.col(2 * c) << h1.real(), h1.imag();
    real_parts.col(2 * c + 1) << h2.real(), h2.imag();
  }
  Eigen::JacobiSVD<RealMatrix> svd(real_parts, Eigen::ComputeThinU);
  const RealVector& s = svd.singularValues();
  const double cutoff = std::max(1e-12, 1e-6 * (s.size() > 0 ? s(0) : 0.0));
  Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  if (rank != out.dim_complex) {
    throw Error(ErrorKind::EigSolverFailure,
                "Hermitian fixed basis has real dimension " + std::to_string(rank) +
                    ", expected " + std::to_string(out.dim_complex));
  }
  for (Index c = 0; c < rank; ++c) {
    Vector v(n2);
    v.real() = svd.matrixU().col(c).head(n2);
    v.imag() = svd.matrixU().col(c).tail(n2);
    out.hermitian_basis.push_back(linalg::hermitian_part(linalg::unvec(v, n)));
  }
  return out;
}

DensityOperator full_stationary_state(const QuantumChannel& channel, const Tolerances& tol) {
  const Index n = channel.dim();
  const SuperoperatorMatrix einf = e_infinity(channel, tol);
  return DensityOperator::normalized(einf.apply(Matrix::Identity(n, n) / static_cast<double>(n)),
                                     tol);
}

}  // namespace qmc
