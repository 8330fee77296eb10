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

#include "qmc/decomp.hpp"

#include <random>
#include <string>

#include "qmc/error.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {
namespace {

// Stationary state with full support on the invariant subspace sub (whose
// restriction is assumed to have no transient part), in ambient coordinates.
Matrix full_stationary_on(const QuantumChannel& channel, const Subspace& sub,
                          const Tolerances& tol) {
  const QuantumChannel r = restrict_to(channel, sub, tol);
  const DensityOperator local = full_stationary_state(r, tol);
  return sub.basis() * local.matrix() * sub.basis().adjoint();
}

// A nonzero traceless Hermitian fixed point of the restriction with
// full-support stationary state sigma (local coordinates).
Matrix traceless_fixed_point(const FixedSpace& fs, const Matrix& sigma,
                             std::optional<std::mt19937_64>& rng) {
  auto make_traceless = [&](const Matrix& a) -> Matrix {
    return a - a.trace().real() * sigma;
  };
  if (rng) {
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < 16; ++attempt) {
      Matrix a = Matrix::Zero(sigma.rows(), sigma.cols());
      for (const Matrix& h : fs.hermitian_basis) a += gauss(*rng) * h;
      Matrix t = make_traceless(a);
      if (t.norm() > 1e-6 * a.norm()) return t;
    }
  }
  for (const Matrix& h : fs.hermitian_basis) {
    Matrix t = make_traceless(h);
    if (t.norm() > 1e-6 * h.norm()) return t;
  }
  throw Error(ErrorKind::EigSolverFailure,
              "every Hermitian fixed point is proportional to the stationary state");
}

bool near_borderline(double s, double cutoff) {
  return cutoff > 0.0 && s > cutoff * 1e-3 && s < cutoff * 1e3;
}

}  // namespace

DensityOperator find_minimal_stationary(const QuantumChannel& channel, const Subspace& sub,
                                        const AnalysisOptions& opts) {
  const Tolerances& tol = opts.tol;
  const Index n = channel.dim();
  if (sub.ambient_dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the channel's space");
  }
  if (sub.is_zero()) throw Error(ErrorKind::ZeroSubspace, "find_minimal_stationary: zero subspace");
  if (!is_invariant(channel, sub, tol)) {
    throw Error(ErrorKind::NoStationaryState, "subspace is not invariant");
  }

  std::optional<std::mt19937_64> rng;
  if (opts.seed) rng.emplace(*opts.seed);

  // Start from the full-support stationary state of the recurrent part of sub.
  const QuantumChannel on_sub = restrict_to(channel, sub, tol);
  const DensityOperator local = full_stationary_state(on_sub, tol);
  Matrix sigma = sub.basis() * local.matrix() * sub.basis().adjoint();
  Subspace current = Subspace::support_of(sigma, tol);
  if (current.is_zero()) {
    throw Error(ErrorKind::NoStationaryState, "no stationary state supported in subspace");
  }

  for (Index iter = 0; iter <= n; ++iter) {
    const QuantumChannel r = restrict_to(channel, current, tol);
    const FixedSpace fs = fixed_space(r, tol);
    if (fs.dim_complex == 1) return DensityOperator::normalized(sigma, tol);

    const Matrix& b = current.basis();
    const Matrix sigma_local = b.adjoint() * sigma * b;
    const Matrix a = traceless_fixed_point(fs, sigma_local, rng);
    const Subspace smaller_local = Subspace::support_of(linalg::positive_part(a), tol);
    if (smaller_local.is_zero() || smaller_local.dim() >= current.dim()) {
      throw Error(ErrorKind::EigSolverFailure,
                  "positive part of a traceless fixed point did not shrink the support");
    }
    const Subspace smaller = smaller_local.embed(b);
    if (!is_invariant(channel, smaller, tol)) {
      throw Error(ErrorKind::EigSolverFailure,
                  "support of a positive fixed point is not invariant; tolerances too loose");
    }
    sigma = full_stationary_on(channel, smaller, tol);
    current = smaller;
  }
  throw Error(ErrorKind::DecompositionDiverged, "minimal stationary search did not terminate");
}

BsccSet bscc_decomposition(const QuantumChannel& channel, const AnalysisOptions& opts) {
  const Tolerances& tol = opts.tol;
  const Index n = channel.dim();
  const Subspace recurrent = recurrent_subspace(channel, tol);

  BsccSet out;
  Subspace covered = Subspace::zero(n);
  for (Index iter = 0; covered.dim() < recurrent.dim(); ++iter) {
    if (iter >= n) {
      throw Error(ErrorKind::DecompositionDiverged,
                  "BSCC search exceeded dim(H) iterations; tolerances too loose");
    }
    const Subspace remaining = recurrent.minus(covered, tol);
    AnalysisOptions step = opts;
    if (opts.seed) step.seed = *opts.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(iter + 1);
    const DensityOperator minimal = find_minimal_stationary(channel, remaining, step);
    Subspace bscc = support(minimal, tol);
    out.bsccs.push_back(bscc);
    const Index before = covered.dim();
    covered = join(out.bsccs, n, tol);
    if (covered.dim() != before + bscc.dim()) {
      throw Error(ErrorKind::DecompositionDiverged, "BSCCs are not mutually orthogonal");
    }
  }
  if (!covered.equals(recurrent, tol)) {
    throw Error(ErrorKind::DecompositionDiverged, "BSCCs do not span the recurrent subspace");
  }
  out.transient = recurrent.orthocomplement(tol);
  return out;
}

CoherenceTest coherence_test(const QuantumChannel& channel, const Subspace& b1,
                             const Subspace& b2, const Tolerances& tol) {
  if (b1.ambient_dim() != channel.dim() || b2.ambient_dim() != channel.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces do not live in the channel's space");
  }
  if (b1.is_zero() || b2.is_zero()) throw Error(ErrorKind::ZeroSubspace, "coherence: zero subspace");
  if (!b1.orthogonal_to(b2, tol)) {
    throw Error(ErrorKind::NotOrthogonal, "coherence test needs orthogonal BSCCs");
  }
  const Subspace sum = b1.join(b2, tol);
  if (!is_invariant(channel, sum, tol)) {
    throw Error(ErrorKind::NotInvariant, "b1 (+) b2 is not invariant");
  }
  const QuantumChannel r = restrict_to(channel, sum, tol);
  const Index k2 = r.dim() * r.dim();
  const linalg::Nullspace ns =
      linalg::nullspace(matrix_rep(r).matrix - Matrix::Identity(k2, k2), tol.null_rel);
  CoherenceTest out;
  out.fixed_dim = ns.basis.cols();
  out.coherent = out.fixed_dim > 2;
  out.singular_values = ns.singular;
  out.cutoff = ns.cutoff;
  return out;
}

bool has_coherence(const QuantumChannel& channel, const Subspace& b1, const Subspace& b2,
                   const Tolerances& tol) {
  return coherence_test(channel, b1, b2, tol).coherent;
}

TwoLevelDecomposition two_level_decomposition(const QuantumChannel& channel,
                                              const AnalysisOptions& opts) {
  const Tolerances& tol = opts.tol;
  const Index n = channel.dim();
  const BsccSet bs = bscc_decomposition(channel, opts);

  TwoLevelDecomposition out;
  out.transient = bs.transient;
  const std::size_t count = bs.bsccs.size();
  std::vector<bool> open(count, true);
  for (std::size_t i = 0; i < count; ++i) {
    if (!open[i]) continue;
    open[i] = false;
    CoherenceBlock block;
    block.bsccs.push_back(bs.bsccs[i]);
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!open[j]) continue;
      const CoherenceTest t = coherence_test(channel, bs.bsccs[i], bs.bsccs[j], tol);
      for (double s : t.singular_values) {
        if (near_borderline(s, t.cutoff)) out.borderline_singular_values.push_back(s);
      }
      if (t.coherent) {
        block.bsccs.push_back(bs.bsccs[j]);
        open[j] = false;
      }
    }
    for (const Subspace& b : block.bsccs) {
      if (b.dim() != block.bsccs.front().dim()) {
        throw Error(ErrorKind::UnequalDimensionsInBlock,
                    "coherent BSCCs have dimensions " + std::to_string(block.bsccs.front().dim()) +
                        " and " + std::to_string(b.dim()));
      }
    }
    block.n_l = static_cast<Index>(block.bsccs.size());
    block.carrier = join(block.bsccs, n, tol);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool is_irreducible(const QuantumChannel& channel, const Tolerances& tol) {
  if (fixed_space(channel, tol).dim_complex != 1) return false;
  return support(full_stationary_state(channel, tol), tol).dim() == channel.dim();
}

TwoLevelDecomposition three_level_decomposition(const QuantumChannel& channel,
                                                const AnalysisOptions& opts) {
  TwoLevelDecomposition out = two_level_decomposition(channel, opts);
  for (CoherenceBlock& block : out.blocks) {
    block.cyclic_splits.clear();
    for (std::size_t j = 0; j < block.bsccs.size(); ++j) {
      const Subspace& b = block.bsccs[j];
      const QuantumChannel r = restrict_to(channel, b, opts.tol);
      const PeriodicSplit split = periodic_decomposition(r, opts);
      if (j == 0) {
        block.period = split.d;
      } else if (split.d != block.period) {
        throw Error(ErrorKind::UnequalDimensionsInBlock,
                    "coherent BSCCs have periods " + std::to_string(block.period) + " and " +
                        std::to_string(split.d));
      }
      std::vector<Subspace> cycles;
      for (const Subspace& c : split.cycles) cycles.push_back(c.embed(b.basis()));
      block.cyclic_splits.push_back(std::move(cycles));
    }
  }
  return out;
}

}  // namespace qmc
