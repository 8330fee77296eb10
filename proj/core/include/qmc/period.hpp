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

struct PeriodicSplit {
  Index d = 1;
  std::vector<Subspace> cycles;  // E(cycles[i-1]) = cycles[i], indices mod d
};

struct CyclicResolution {
  std::vector<Matrix> projectors;  // adjoint_apply(E, P_k) = P_{k-1}
};

// gcd{ m in [1, m_max] : supp(rho) subset supp(E^m(rho)) } == 1.
// The gcd of an empty set is 0, so a state that never returns is not
// aperiodic. m_max = 0 means n^4.
bool is_aperiodic_state(const QuantumChannel& channel, const DensityOperator& state,
                        std::size_t m_max = 0, const Tolerances& tol = {});

// Same search, returning the gcd itself.
std::size_t return_time_gcd(const QuantumChannel& channel, const DensityOperator& state,
                            std::size_t m_max = 0, const Tolerances& tol = {});

// Number of peripheral eigenvalues of an irreducible channel. Throws
// NotIrreducible otherwise.
Index period_irreducible(const QuantumChannel& channel, const Tolerances& tol = {});

PeriodicSplit periodic_decomposition(const QuantumChannel& channel,
                                     const AnalysisOptions& opts = {});

CyclicResolution cyclic_resolution(const QuantumChannel& channel,
                                   const AnalysisOptions& opts = {});

// Sum of the periods of the BSCCs in a BSCC decomposition.
Index period_sum(const QuantumChannel& channel, const AnalysisOptions& opts = {});

}  // namespace qmc
