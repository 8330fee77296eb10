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
#include <optional>
#include <string>

#include "qmc/channel.hpp"

namespace qmc {

struct LimitReport {
  bool limit_exists = false;   // peripheral spectrum is {1}
  bool unique_limit = false;   // ... and eigenvalue 1 has geometric multiplicity 1
  std::optional<DensityOperator> limiting_state;
  bool full_support = false;
  Index peripheral_count = 0;      // with multiplicity
  Index multiplicity_of_one = 0;   // geometric, SVD nullity of (M - I)
};

LimitReport limit_report(const QuantumChannel& channel, const Tolerances& tol = {});

// Power iteration of one state until successive iterates differ by less
// than stop_delta in trace norm, or horizon steps elapse.
struct PowerIteration {
  Matrix last;              // E^steps(rho)
  std::size_t steps = 0;
  double final_delta = 0.0; // ||E^steps(rho) - E^{steps-1}(rho)||_1
};

PowerIteration iterate_state(const QuantumChannel& channel, const Matrix& rho,
                             std::size_t horizon = 500, double stop_delta = 1e-10);

struct EquivalenceOptions {
  std::size_t samples = 8;          // random states, on top of the basis states
  std::size_t horizon = 500;
  double stop_delta = 1e-10;
  double converged_delta = 1e-6;    // final step size accepted as converged
  double same_limit = 1e-6;         // trace-norm distance between limits
  std::uint64_t seed = 7;
  Tolerances tol{};
};

// Each criterion evaluated independently. Field names follow the three
// routes: empirical (power iteration over sampled states), structural
// (decomposition and periods) and spectral.
struct LimitEquivalences {
  // Limit theorem: full-support limiting state.
  bool empirical_primitive = false;
  bool irreducible_aperiodic = false;
  bool spectral_primitive = false;
  // Existence of limits for every state.
  bool empirical_limit_exists = false;
  bool spectral_limit_exists = false;
  // Unique limiting state.
  bool empirical_unique_limit = false;
  bool unique_bscc_aperiodic = false;
  bool spectral_unique_limit = false;

  bool agree = false;
  std::string counterexample;  // empty when agree
};

LimitEquivalences check_limit_equivalences(const QuantumChannel& channel,
                                           const EquivalenceOptions& opts = {});

}  // namespace qmc
