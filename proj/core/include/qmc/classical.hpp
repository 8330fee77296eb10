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

#include <cstdint>
#include <vector>

#include "qmc/channel.hpp"

// Classical Markov chains as a reference model for the quantum analyses,
// plus seeded fixture generators.
namespace qmc::classical {

class StochasticMatrix {
 public:
  // Throws NotStochastic unless entries lie in [0, 1] and rows sum to 1
  // within row_tol.
  explicit StochasticMatrix(RealMatrix p, double row_tol = 1e-12);

  Index n() const { return p_.rows(); }
  const RealMatrix& matrix() const { return p_; }
  double operator()(Index i, Index j) const { return p_(i, j); }

 private:
  RealMatrix p_;
};

struct ClassicalStructure {
  std::vector<std::vector<Index>> sccs;         // each sorted ascending
  std::vector<std::vector<Index>> bsccs;        // closed SCCs
  std::vector<Index> transient_states;
  std::vector<Index> periods;                   // one per BSCC
};

// Kraus operators sqrt(P_ij) |j><i| for every nonzero transition.
QuantumChannel embed_stochastic(const StochasticMatrix& p, const Tolerances& tol = {});

// Strongly connected components of the positive-entry digraph (Tarjan),
// closed components as BSCCs, periods by reachability-by-length.
ClassicalStructure classical_structure(const StochasticMatrix& p);

// Row i of lim (1/N) sum_{m=1..N} P^m, from absorption probabilities and
// the stationary distribution of each closed class.
RealMatrix cesaro_limit(const StochasticMatrix& p);

// k Kraus operators obtained by orthonormalizing a kn x n block column of
// complex Gaussians.
QuantumChannel random_channel(Index n, Index k, std::uint64_t seed);

// Density operator of rank `rank` (0 means full) with Gaussian purification.
DensityOperator random_state(Index n, std::uint64_t seed, Index rank = 0);

// Random row-stochastic matrix where each entry is kept with probability
// density.
StochasticMatrix random_stochastic(Index n, std::uint64_t seed, double density = 0.5);

// Random stochastic matrix with planted structure: several closed classes
// (some periodic) and transient states feeding into them.
StochasticMatrix random_structured_stochastic(Index n, std::uint64_t seed);

// Random irreducible stochastic matrix; when period > 1 the states are laid
// out in period cyclic layers.
StochasticMatrix random_irreducible_stochastic(Index n, std::uint64_t seed, Index period = 1);

}  // namespace qmc::classical
