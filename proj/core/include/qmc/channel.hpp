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

#include "qmc/density.hpp"
#include "qmc/linalg.hpp"
#include "qmc/subspace.hpp"
#include "qmc/tolerances.hpp"

namespace qmc {

// Matrix M = sum_i E_i (x) conj(E_i) acting on row-stacked vectorizations.
struct SuperoperatorMatrix {
  Index dim = 0;  // n; the matrix is n^2 x n^2
  Matrix matrix;

  Matrix apply(const Matrix& x) const;
};

// A completely positive map in Kraus form. Channels built through
// validate_channel are trace preserving; restrictions to non-invariant
// subspaces are trace non-increasing and carry trace_preserving() == false.
class QuantumChannel {
 public:
  Index dim() const { return dim_; }
  std::span<const Matrix> kraus() const { return kraus_; }
  bool trace_preserving() const { return trace_preserving_; }
  // ||sum_i E_i^dag E_i - I||_2
  double kraus_sum_deviation() const { return deviation_; }

 private:
  friend QuantumChannel make_channel(std::vector<Matrix>, Index, const Tolerances&, bool);

  QuantumChannel(Index dim, std::vector<Matrix> kraus, bool tp, double deviation)
      : dim_(dim), kraus_(std::move(kraus)), trace_preserving_(tp), deviation_(deviation) {}

  Index dim_ = 0;
  std::vector<Matrix> kraus_;
  bool trace_preserving_ = true;
  double deviation_ = 0.0;
};

// Throws DimensionMismatch for an empty list or mis-sized operators and
// NotTracePreserving when ||sum E^dag E - I|| > tol.cptp.
QuantumChannel validate_channel(std::vector<Matrix> kraus, Index dim,
                                const Tolerances& tol = {});

// Builds a channel that may be trace non-increasing. Internal builders use
// this; the flag is computed from the actual Kraus sum. With require_tp the
// call behaves like validate_channel.
QuantumChannel make_channel(std::vector<Matrix> kraus, Index dim,
                            const Tolerances& tol, bool require_tp);

// sum_i E_i X E_i^dag for any n x n operator X.
Matrix apply_map(const QuantumChannel& channel, const Matrix& x);

DensityOperator apply(const QuantumChannel& channel, const DensityOperator& state,
                      const Tolerances& tol = {});

// Heisenberg picture: sum_i E_i^dag M E_i.
Matrix adjoint_apply(const QuantumChannel& channel, const Matrix& observable);

SuperoperatorMatrix matrix_rep(const QuantumChannel& channel);

// Kraus form of a completely positive superoperator (via its Choi matrix).
QuantumChannel from_superoperator(const SuperoperatorMatrix& s, const Tolerances& tol = {});

// E^k. The superoperator is powered by repeated squaring and converted back
// to at most n^2 Kraus operators, so the Kraus count does not blow up.
QuantumChannel power(const QuantumChannel& channel, unsigned k, const Tolerances& tol = {});

// Compression B^dag E_i B onto a nonzero subspace with basis B.
QuantumChannel restrict_to(const QuantumChannel& channel, const Subspace& sub,
                           const Tolerances& tol = {});

QuantumChannel direct_sum(const QuantumChannel& a, const QuantumChannel& b);
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace qmc
