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

#include "qmc/channel.hpp"
#include "qmc/decomp.hpp"

namespace qmc {

// H = (H_A (x) H_B) (+) K. Only dimensions and the carrier are reported;
// the factorization isometry of the carrier is not constructed.
struct NoiselessResult {
  bool found = false;
  Index dim_a = 0;
  Index dim_b = 0;
  Index block_index = 0;  // chosen coherence block (first maximal one)
  Subspace carrier;       // H_A (x) H_B
  Subspace remainder;     // K
};

NoiselessResult find_max_ns(const QuantumChannel& channel, const AnalysisOptions& opts = {});

// Same selection applied to an existing decomposition.
NoiselessResult select_max_ns(const TwoLevelDecomposition& decomposition, Index ambient_dim,
                              const Tolerances& tol = {});

// Checks that the carrier is invariant, that the fixed space on it has
// complex dimension dim_a^2, and that sampled minimal stationary states
// inside it have dim_b-dimensional BSCC supports.
bool verify_noiseless(const QuantumChannel& channel, const NoiselessResult& result,
                      const AnalysisOptions& opts = {}, std::size_t samples = 4);

}  // namespace qmc
