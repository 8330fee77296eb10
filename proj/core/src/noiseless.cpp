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

#include "qmc/noiseless.hpp"

#include "qmc/error.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {

NoiselessResult select_max_ns(const TwoLevelDecomposition& decomposition, Index ambient_dim,
                              const Tolerances& tol) {
  NoiselessResult out;
  Index best = 1;
  for (std::size_t l = 0; l < decomposition.blocks.size(); ++l) {
    if (decomposition.blocks[l].n_l > best) {
      best = decomposition.blocks[l].n_l;
      out.block_index = static_cast<Index>(l);
    }
  }
  if (best <= 1) {
    out.carrier = Subspace::zero(ambient_dim);
    out.remainder = Subspace::full(ambient_dim);
    return out;
  }
  const CoherenceBlock& block = decomposition.blocks[static_cast<std::size_t>(out.block_index)];
  out.found = true;
  out.dim_a = best;
  out.dim_b = block.bsccs.front().dim();
  out.carrier = block.carrier;
  out.remainder = block.carrier.orthocomplement(tol);
  return out;
}

NoiselessResult find_max_ns(const QuantumChannel& channel, const AnalysisOptions& opts) {
  return select_max_ns(two_level_decomposition(channel, opts), channel.dim(), opts.tol);
}

bool verify_noiseless(const QuantumChannel& channel, const NoiselessResult& result,
                      const AnalysisOptions& opts, std::size_t samples) {
  const Tolerances& tol = opts.tol;
  if (!result.found) return false;
  if (result.dim_a * result.dim_b != result.carrier.dim()) return false;
  if (result.carrier.dim() + result.remainder.dim() != channel.dim()) return false;
  if (!result.carrier.orthogonal_to(result.remainder, tol)) return false;
  try {
    if (!is_invariant(channel, result.carrier, tol)) return false;
    const QuantumChannel on_carrier = restrict_to(channel, result.carrier, tol);
    if (fixed_space(on_carrier, tol).dim_complex != result.dim_a * result.dim_a) return false;
    for (std::size_t s = 0; s < samples; ++s) {
      AnalysisOptions o = opts;
      o.seed = opts.seed.value_or(0) + s + 1;
      const DensityOperator sigma = find_minimal_stationary(channel, result.carrier, o);
      const Subspace b = support(sigma, tol);
      if (b.dim() != result.dim_b) return false;
      if (!b.contained_in(result.carrier, tol)) return false;
      if (!is_invariant(channel, b, tol)) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace qmc
