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

struct BsccSet {
  std::vector<Subspace> bsccs;
  Subspace transient;
};

struct CoherenceBlock {
  Subspace carrier;              // X_l, the direct sum of the block's BSCCs
  std::vector<Subspace> bsccs;
  Index n_l = 0;
  Index period = 0;              // 0 until the three-level pass fills it
  // For each BSCC, its cyclic subspaces in E-order (one entry when the
  // BSCC is aperiodic).
  std::vector<std::vector<Subspace>> cyclic_splits;
};

struct TwoLevelDecomposition {
  std::vector<CoherenceBlock> blocks;
  Subspace transient;
  // Singular values of (M - I) on BSCC pairs that sat within three decades
  // of the nullspace cutoff while testing coherence.
  std::vector<double> borderline_singular_values;
};

// Minimal stationary state inside an invariant subspace: its support is a
// BSCC contained in sub. Throws NoStationaryState when sub carries no
// stationary state.
DensityOperator find_minimal_stationary(const QuantumChannel& channel, const Subspace& sub,
                                        const AnalysisOptions& opts = {});

BsccSet bscc_decomposition(const QuantumChannel& channel, const AnalysisOptions& opts = {});

struct CoherenceTest {
  bool coherent = false;
  Index fixed_dim = 0;  // complex dimension of F
  std::vector<double> singular_values;
  double cutoff = 0.0;
};

CoherenceTest coherence_test(const QuantumChannel& channel, const Subspace& b1,
                             const Subspace& b2, const Tolerances& tol = {});

// Stationary coherence between two orthogonal BSCCs: dim F > 2 where F is
// the fixed space on b1 (+) b2.
bool has_coherence(const QuantumChannel& channel, const Subspace& b1, const Subspace& b2,
                   const Tolerances& tol = {});

TwoLevelDecomposition two_level_decomposition(const QuantumChannel& channel,
                                              const AnalysisOptions& opts = {});

// Unique stationary state with full support.
bool is_irreducible(const QuantumChannel& channel, const Tolerances& tol = {});

// Two-level decomposition with per-block periods and per-BSCC cyclic
// subspaces filled in.
TwoLevelDecomposition three_level_decomposition(const QuantumChannel& channel,
                                                const AnalysisOptions& opts = {});

}  // namespace qmc
