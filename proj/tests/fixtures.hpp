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

#include <cmath>
#include <string>
#include <vector>

#include "qmc/channel.hpp"
#include "qmc/classical.hpp"
#include "qmc/standard_channels.hpp"

namespace qmc::fixtures {

// Kraus |v_i><i| with v_0 = |1+2>, v_1 = |0+2>, v_2 = |1+0> (normalized).
inline QuantumChannel three_kraus() {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> kraus;
  const int pairs[3][2] = {{1, 2}, {0, 2}, {1, 0}};
  for (int i = 0; i < 3; ++i) {
    Matrix k = Matrix::Zero(3, 3);
    k(pairs[i][0], i) = s;
    k(pairs[i][1], i) = s;
    kraus.push_back(k);
  }
  return validate_channel(std::move(kraus), 3);
}

inline Matrix three_kraus_stationary() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix rho = Matrix::Zero(3, 3);
  const int pairs[3][2] = {{1, 2}, {0, 2}, {1, 0}};
  for (const auto& p : pairs) {
    Vector v = Vector::Zero(3);
    v(p[0]) = s;
    v(p[1]) = s;
    rho += v * v.adjoint() / 3.0;
  }
  return rho;
}

inline QuantumChannel tensor_fixture(Index a, const QuantumChannel& eb) {
  return tensor(channels::identity(a), eb);
}

// Primitive dim-b channel (unique full-rank stationary state, aperiodic).
inline QuantumChannel primitive(Index b, std::uint64_t seed) {
  if (b == 1) return channels::identity(1);
  return classical::random_channel(b, 2, seed);
}

struct Named {
  std::string name;
  QuantumChannel channel;
};

// Small structured fixtures shared by several suites.
inline std::vector<Named> structured() {
  using namespace channels;
  return {
      {"not", not_gate()},
      {"amplitude_damping", amplitude_damping(0.5)},
      {"three_kraus", three_kraus()},
      {"dephasing2", completely_dephasing(2)},
      {"dephasing3", completely_dephasing(3)},
      {"identity2", identity(2)},
      {"cycle3", cyclic_shift(3)},
      {"tensor_2_ad", tensor_fixture(2, amplitude_damping(0.5))},
      {"tensor_3_prim2", tensor_fixture(3, primitive(2, 11))},
      {"ad_plus_ad", direct_sum(amplitude_damping(0.5), amplitude_damping(0.3))},
      {"tensor_plus_cycle", direct_sum(tensor_fixture(2, amplitude_damping(0.4)), cyclic_shift(2))},
      {"tensor_plus_dephasing", direct_sum(tensor_fixture(2, primitive(2, 5)), completely_dephasing(2))},
  };
}

// (1/N) sum_{m=1..N} E^m(rho) by plain iteration.
inline Matrix cesaro_average(const QuantumChannel& ch, const Matrix& rho, int n_terms) {
  Matrix cur = rho;
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  for (int m = 1; m <= n_terms; ++m) {
    cur = apply_map(ch, cur);
    acc += cur;
  }
  return acc / static_cast<double>(n_terms);
}

// Rank by Hermitian eigenvalues above a relative threshold.
inline Index numerical_rank(const Matrix& psd, double rel = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((psd + psd.adjoint()) / 2.0);
  const double top = std::max(es.eigenvalues().maxCoeff(), 0.0);
  Index r = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > std::max(1e-10, rel * top)) ++r;
  return r;
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace qmc::fixtures
