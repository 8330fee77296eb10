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

#include "qmc/limits.hpp"

#include <complex>
#include <sstream>
#include <vector>

#include "qmc/classical.hpp"
#include "qmc/decomp.hpp"
#include "qmc/error.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {

LimitReport limit_report(const QuantumChannel& channel, const Tolerances& tol) {
  LimitReport out;
  const SpectrumReport spec = spectrum(channel, tol);
  out.peripheral_count = static_cast<Index>(spec.peripheral.size());
  const std::vector<PeripheralCluster> clusters = peripheral_clusters(spec, tol);
  out.limit_exists = !clusters.empty();
  for (const PeripheralCluster& c : clusters) {
    if (std::abs(c.value - Complex(1.0, 0.0)) > tol.cluster) out.limit_exists = false;
  }
  const FixedSpace fs = fixed_space(channel, tol);
  out.multiplicity_of_one = fs.dim_complex;
  out.unique_limit = out.limit_exists && fs.dim_complex == 1;
  if (out.unique_limit) {
    out.limiting_state = full_stationary_state(channel, tol);
    out.full_support = support(*out.limiting_state, tol).dim() == channel.dim();
  }
  return out;
}

PowerIteration iterate_state(const QuantumChannel& channel, const Matrix& rho,
                             std::size_t horizon, double stop_delta) {
  PowerIteration out;
  out.last = rho;
  for (std::size_t step = 1; step <= horizon; ++step) {
    Matrix next = apply_map(channel, out.last);
    out.final_delta = linalg::trace_norm(next - out.last);
    out.last = std::move(next);
    out.steps = step;
    if (out.final_delta < stop_delta) break;
  }
  return out;
}

namespace {

bool structural_aperiodic_on(const QuantumChannel& channel, const Subspace& b,
                             const Tolerances& tol) {
  return period_irreducible(restrict_to(channel, b, tol), tol) == 1;
}

}  // namespace

LimitEquivalences check_limit_equivalences(const QuantumChannel& channel,
                                           const EquivalenceOptions& opts) {
  const Tolerances& tol = opts.tol;
  const Index n = channel.dim();
  LimitEquivalences out;

  std::vector<Matrix> samples;
  for (Index i = 0; i < n; ++i) samples.push_back(DensityOperator::basis_state(n, i).matrix());
  for (std::size_t s = 0; s < opts.samples; ++s) {
    samples.push_back(classical::random_state(n, opts.seed + s, 0).matrix());
  }
  std::vector<Matrix> limits;
  bool all_converged = true;
  for (const Matrix& rho : samples) {
    const PowerIteration it = iterate_state(channel, rho, opts.horizon, opts.stop_delta);
    if (it.final_delta > opts.converged_delta) all_converged = false;
    limits.push_back(it.last);
  }
  out.empirical_limit_exists = all_converged;
  bool same = all_converged;
  for (std::size_t i = 1; same && i < limits.size(); ++i) {
    if (linalg::trace_norm(limits[i] - limits[0]) > opts.same_limit) same = false;
  }
  out.empirical_unique_limit = same;
  out.empirical_primitive =
      same && support(DensityOperator::normalized(limits[0], tol), tol).dim() == n;

  AnalysisOptions aopts;
  aopts.tol = tol;
  const bool irreducible = is_irreducible(channel, tol);
  out.irreducible_aperiodic = irreducible && period_irreducible(channel, tol) == 1;
  const BsccSet bs = bscc_decomposition(channel, aopts);
  out.unique_bscc_aperiodic =
      bs.bsccs.size() == 1 && structural_aperiodic_on(channel, bs.bsccs.front(), tol);

  const LimitReport lr = limit_report(channel, tol);
  out.spectral_limit_exists = lr.limit_exists;
  out.spectral_unique_limit = lr.unique_limit;
  out.spectral_primitive = lr.unique_limit && lr.full_support;

  std::ostringstream why;
  auto compare = [&](const char* name, bool a, bool b, bool c) {
    if (a == b && b == c) return;
    why << name << ": empirical=" << a << " structural=" << b << " spectral=" << c << "; ";
  };
  compare("primitive", out.empirical_primitive, out.irreducible_aperiodic,
          out.spectral_primitive);
  if (out.empirical_limit_exists != out.spectral_limit_exists) {
    why << "limit exists: empirical=" << out.empirical_limit_exists
        << " spectral=" << out.spectral_limit_exists << "; ";
  }
  compare("unique limit", out.empirical_unique_limit, out.unique_bscc_aperiodic,
          out.spectral_unique_limit);
  out.counterexample = why.str();
  out.agree = out.counterexample.empty();
  return out;
}

}  // namespace qmc
