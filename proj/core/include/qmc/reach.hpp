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

#include <optional>
#include <vector>

#include "qmc/channel.hpp"

namespace qmc {

struct ReachResult {
  Subspace subspace;
  // Cumulative dimension after joining supp(E^i(rho)), i = 0..n-1.
  std::vector<Index> steps_profile;
};

Subspace support(const DensityOperator& state, const Tolerances& tol = {});

// E(X) = supp(E(P_X / dim X)).
Subspace image(const QuantumChannel& channel, const Subspace& sub,
               const Tolerances& tol = {});

ReachResult reachable_space(const QuantumChannel& channel, const DensityOperator& state,
                            const Tolerances& tol = {});

bool is_invariant(const QuantumChannel& channel, const Subspace& sub,
                  const Tolerances& tol = {});

// supp(E_inf(I/n)); its orthocomplement is the largest transient subspace.
Subspace recurrent_subspace(const QuantumChannel& channel, const Tolerances& tol = {});

bool is_transient(const QuantumChannel& channel, const Subspace& sub,
                  const Tolerances& tol = {});

// Least m in [1, m_max] with supp(E^m(rho)) = H, or nullopt when the
// support never fills the space within m_max steps. m_max = 0 means n^4.
std::optional<std::size_t> saturation_time(const QuantumChannel& channel,
                                           const DensityOperator& state,
                                           std::size_t m_max = 0,
                                           const Tolerances& tol = {});

}  // namespace qmc
