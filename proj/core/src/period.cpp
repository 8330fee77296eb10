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

#include "qmc/period.hpp"

#include <numeric>
#include <string>

#include "qmc/decomp.hpp"
#include "qmc/error.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {

std::size_t return_time_gcd(const QuantumChannel& channel, const DensityOperator& state,
                            std::size_t m_max, const Tolerances& tol) {
  const Index n = channel.dim();
  if (state.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match channel");
  }
  if (m_max == 0) m_max = default_m_max(static_cast<std::size_t>(n));
  const Subspace start = support(state, tol);
  Matrix rho = state.matrix();
  std::size_t g = 0;
  for (std::size_t m = 1; m <= m_max && g != 1; ++m) {
    rho = apply_map(channel, rho);
    rho /= rho.trace().real();
    if (start.contained_in(Subspace::support_of(rho, tol), tol)) g = std::gcd(g, m);
  }
  return g;
}

bool is_aperiodic_state(const QuantumChannel& channel, const DensityOperator& state,
                        std::size_t m_max, const Tolerances& tol) {
  return return_time_gcd(channel, state, m_max, tol) == 1;
}

Index period_irreducible(const QuantumChannel& channel, const Tolerances& tol) {
  if (!is_irreducible(channel, tol)) {
    throw Error(ErrorKind::NotIrreducible, "period is defined here for irreducible chains only");
  }
  const std::vector<PeripheralCluster> clusters = peripheral_clusters(spectrum(channel, tol), tol);
  for (const PeripheralCluster& c : clusters) {
    if (c.multiplicity != 1) {
      throw Error(ErrorKind::EigSolverFailure,
                  "peripheral eigenvalue of an irreducible chain has multiplicity " +
                      std::to_string(c.multiplicity));
    }
  }
  return static_cast<Index>(clusters.size());
}

PeriodicSplit periodic_decomposition(const QuantumChannel& channel, const AnalysisOptions& opts) {
  const Tolerances& tol = opts.tol;
  const Index n = channel.dim();
  PeriodicSplit out;
  out.d = period_irreducible(channel, tol);
  if (out.d == 1) {
    out.cycles.push_back(Subspace::full(n));
    return out;
  }
  const QuantumChannel ed = power(channel, static_cast<unsigned>(out.d), tol);
  const BsccSet bs = bscc_decomposition(ed, opts);
  if (static_cast<Index>(bs.bsccs.size()) != out.d || !bs.transient.is_zero()) {
    throw Error(ErrorKind::CycleOrderingFailed,
                "E^d has " + std::to_string(bs.bsccs.size()) + " BSCCs, expected " +
                    std::to_string(out.d));
  }
  std::vector<bool> used(bs.bsccs.size(), false);
  out.cycles.push_back(bs.bsccs[0]);
  used[0] = true;
  for (Index i = 1; i < out.d; ++i) {
    const Subspace next = image(channel, out.cycles.back(), tol);
    bool matched = false;
    for (std::size_t j = 0; j < bs.bsccs.size(); ++j) {
      if (!used[j] && next.equals(bs.bsccs[j], tol)) {
        out.cycles.push_back(bs.bsccs[j]);
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::CycleOrderingFailed,
                  "image of cyclic subspace " + std::to_string(i - 1) + " matches no other");
    }
  }
  if (!image(channel, out.cycles.back(), tol).equals(out.cycles.front(), tol)) {
    throw Error(ErrorKind::CycleOrderingFailed, "cyclic order does not close up");
  }
  return out;
}

CyclicResolution cyclic_resolution(const QuantumChannel& channel, const AnalysisOptions& opts) {
  const PeriodicSplit split = periodic_decomposition(channel, opts);
  CyclicResolution out;
  for (const Subspace& c : split.cycles) out.projectors.push_back(c.projector());
  const std::size_t d = out.projectors.size();
  for (std::size_t k = 0; k < d; ++k) {
    const Matrix pulled = adjoint_apply(channel, out.projectors[k]);
    const double err = (pulled - out.projectors[(k + d - 1) % d]).cwiseAbs().maxCoeff();
    if (err > opts.tol.fix) {
      throw Error(ErrorKind::CycleOrderingFailed,
                  "adjoint map does not shift the cyclic projectors (error " +
                      std::to_string(err) + ")");
    }
  }
  return out;
}

Index period_sum(const QuantumChannel& channel, const AnalysisOptions& opts) {
  const BsccSet bs = bscc_decomposition(channel, opts);
  Index sum = 0;
  for (const Subspace& b : bs.bsccs) {
    sum += period_irreducible(restrict_to(channel, b, opts.tol), opts.tol);
  }
  return sum;
}

}  // namespace qmc
