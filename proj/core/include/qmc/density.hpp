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

#include "qmc/linalg.hpp"
#include "qmc/tolerances.hpp"

namespace qmc {

class Subspace;

// Positive semidefinite, unit-trace operator. Construction symmetrizes the
// input, clips eigenvalues in [-psd, 0) to zero and renormalizes; cleaned()
// reports whether that changed anything beyond roundoff.
class DensityOperator {
 public:
  // Strict: throws InvalidState unless the input is Hermitian, PSD and unit
  // trace within tolerance.
  explicit DensityOperator(const Matrix& m, const Tolerances& tol = {});

  // Lenient: any nonzero PSD-up-to-roundoff operator, rescaled to unit
  // trace. Used for evolved and derived states.
  static DensityOperator normalized(const Matrix& m, const Tolerances& tol = {});

  static DensityOperator pure(const Vector& psi);
  static DensityOperator basis_state(Index n, Index i);
  static DensityOperator maximally_mixed(Index n);
  // P_X / dim(X)
  static DensityOperator uniform_on(const Subspace& sub);

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  bool cleaned() const { return cleaned_; }

 private:
  DensityOperator() = default;
  void finish(const Matrix& m, const Tolerances& tol, bool strict);

  Matrix matrix_;
  bool cleaned_ = false;
};

}  // namespace qmc
