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

#include "qmc/standard_channels.hpp"

#include <cmath>

#include "qmc/error.hpp"

namespace qmc::channels {

QuantumChannel identity(Index n) { return validate_channel({Matrix::Identity(n, n)}, n); }

QuantumChannel unitary(const Matrix& u) { return validate_channel({u}, u.rows()); }

QuantumChannel amplitude_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::BadInput, "amplitude damping parameter must lie in [0, 1]");
  }
  Matrix e0 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - p);
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 1) = std::sqrt(p);
  return validate_channel({e0, e1}, 2);
}

QuantumChannel completely_dephasing(Index n) {
  std::vector<Matrix> kraus;
  for (Index i = 0; i < n; ++i) {
    Matrix k = Matrix::Zero(n, n);
    k(i, i) = 1.0;
    kraus.push_back(std::move(k));
  }
  return validate_channel(std::move(kraus), n);
}

QuantumChannel not_gate() {
  Matrix k0 = Matrix::Zero(2, 2);
  k0(1, 0) = 1.0;
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = 1.0;
  return validate_channel({k0, k1}, 2);
}

QuantumChannel cyclic_shift(Index n) {
  std::vector<Matrix> kraus;
  for (Index i = 0; i < n; ++i) {
    Matrix k = Matrix::Zero(n, n);
    k((i + 1) % n, i) = 1.0;
    kraus.push_back(std::move(k));
  }
  return validate_channel(std::move(kraus), n);
}

}  // namespace qmc::channels
