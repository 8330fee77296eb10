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

#include <cstddef>
#include <cstdint>
#include <optional>

namespace qmc {

// Numerical thresholds shared by every analysis. One value is threaded
// through the whole pipeline so that a run is reproducible from its report.
struct Tolerances {
  double cptp = 1e-8;        // ||sum K^dag K - I||
  double herm = 1e-10;       // ||A - A^dag|| for user-supplied states
  double psd = 1e-9;         // most negative eigenvalue tolerated in a state
  double trace = 1e-10;      // |tr(rho) - 1|
  double orth = 1e-10;       // ||B^dag B - I|| for subspace bases
  double apply = 1e-9;       // channel action / representation agreement
  double peripheral = 1e-9;  // |lambda| >= 1 - peripheral counts as peripheral
  double cluster = 1e-8;     // eigenvalues closer than this are identified
  double fix = 1e-8;         // ||E(X) - X|| for fixed points
  double null_rel = 1e-9;    // SVD nullspace cutoff relative to sigma_max
  double rank_abs = 1e-10;   // absolute eigenvalue cutoff for supports
  double rank_rel = 1e-9;    // relative eigenvalue cutoff for supports
  double inv = 1e-8;         // subspace inclusion / invariance
  double limit = 1e-8;       // idempotence of limit projectors
  double norm = 1e-9;        // slack for norm inequalities
};

// Options for the analyses that make choices (decompositions) or iterate
// (gcd periods, saturation).
struct AnalysisOptions {
  Tolerances tol{};
  // Unset: deterministic choice of traceless fixed points. Set: random
  // real combinations drawn from this seed.
  std::optional<std::uint64_t> seed{};
  // 0 means the default n^4.
  std::size_t m_max = 0;
};

inline std::size_t default_m_max(std::size_t n) { return n * n * n * n; }

}  // namespace qmc
