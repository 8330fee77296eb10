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

#include <vector>

#include "qmc/channel.hpp"

namespace qmc {

struct SpectrumReport {
  // All n^2 eigenvalues of the superoperator, sorted by decreasing modulus
  // then by argument.
  std::vector<Complex> eigenvalues;
  // Those with |lambda| >= 1 - tol.peripheral.
  std::vector<Complex> peripheral;
  double spectral_radius = 0.0;
};

// A group of numerically identical peripheral eigenvalues.
struct PeripheralCluster {
  Complex value;
  Index multiplicity = 0;
};

struct FixedSpace {
  Index dim_complex = 0;
  std::vector<Matrix> basis;            // orthonormal in Hilbert-Schmidt
  std::vector<Matrix> hermitian_basis;  // real-orthonormal Hermitian basis
  std::vector<double> singular_values;  // of (M - I), descending
  double cutoff = 0.0;
};

SpectrumReport spectrum(const QuantumChannel& channel, const Tolerances& tol = {});

std::vector<PeripheralCluster> peripheral_clusters(const SpectrumReport& report,
                                                   const Tolerances& tol = {});

FixedSpace fixed_space(const QuantumChannel& channel, const Tolerances& tol = {});

// Spectral projector onto the eigenvalue-lambda part of a semisimple
// eigenvalue, built from matched right and left eigenspaces. Throws
// EigSolverFailure when the eigenspace dimensions disagree with
// expected_multiplicity or the result is not idempotent.
Matrix spectral_projector(const Matrix& m, Complex lambda, Index expected_multiplicity,
                          const Tolerances& tol = {});

// Cesaro limit E_inf: the spectral projector for eigenvalue 1.
SuperoperatorMatrix e_infinity(const QuantumChannel& channel, const Tolerances& tol = {});

// E_phi: the sum of spectral projectors over the peripheral spectrum. It is
// idempotent and equals lim E^{n_i} along a subsequence of powers.
SuperoperatorMatrix e_phi(const QuantumChannel& channel, const Tolerances& tol = {});

// E o E_phi = sum lambda_k P_k over the peripheral spectrum; its nonzero
// eigenvalues are the peripheral eigenvalues.
SuperoperatorMatrix peripheral_part(const QuantumChannel& channel, const Tolerances& tol = {});

// E_inf(I/n) renormalized: a stationary state whose support is the whole
// recurrent subspace.
DensityOperator full_stationary_state(const QuantumChannel& channel,
                                      const Tolerances& tol = {});

}  // namespace qmc
