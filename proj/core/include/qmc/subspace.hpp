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

#include <span>
#include <vector>

#include "qmc/linalg.hpp"
#include "qmc/tolerances.hpp"

namespace qmc {

// A subspace of C^n held as an n x k matrix with orthonormal columns.
// k = 0 is the zero subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);
  // span{|i> : i in indices}
  static Subspace coordinate(Index ambient_dim, std::span<const Index> indices);
  static Subspace coordinate(Index ambient_dim, std::initializer_list<Index> indices);

  // Span of arbitrary columns; numerically dependent directions are dropped
  // with the support rank cutoff.
  static Subspace span(const Matrix& vectors, const Tolerances& tol = {});
  // Support of a Hermitian positive operator.
  static Subspace support_of(const Matrix& psd, const Tolerances& tol = {});
  // Takes ownership of an already orthonormal basis; throws InvalidSubspace
  // when B^dag B deviates from I by more than tol.orth.
  static Subspace from_orthonormal(Matrix basis, const Tolerances& tol = {});

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return basis_.cols() == 0; }
  const Matrix& basis() const { return basis_; }
  Matrix projector() const;

  // X subset Y  iff  ||(I - P_Y) P_X||_2 <= tol.inv
  bool contained_in(const Subspace& other, const Tolerances& tol = {}) const;
  bool equals(const Subspace& other, const Tolerances& tol = {}) const;
  bool orthogonal_to(const Subspace& other, const Tolerances& tol = {}) const;
  // ||P_X - P_Y||_2
  double distance(const Subspace& other) const;

  Subspace join(const Subspace& other, const Tolerances& tol = {}) const;
  Subspace orthocomplement(const Tolerances& tol = {}) const;
  // This subspace intersected with inner's orthocomplement. Exact when
  // inner is contained in this subspace.
  Subspace minus(const Subspace& inner, const Tolerances& tol = {}) const;

  // Image under an isometry V : C^k -> C^n, where k is this ambient dim.
  Subspace embed(const Matrix& isometry) const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_ = Matrix(0, 0);
};

Subspace join(std::span<const Subspace> parts, Index ambient_dim,
              const Tolerances& tol = {});

}  // namespace qmc
