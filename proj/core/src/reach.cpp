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

#include "qmc/reach.hpp"

#include "qmc/error.hpp"
#include "qmc/spectral.hpp"

namespace qmc {
namespace {

void require_nonzero(const QuantumChannel& channel, const Subspace& sub, const char* what) {
  if (sub.ambient_dim() != channel.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": subspace does not live in the channel's space");
  }
  if (sub.is_zero()) throw Error(ErrorKind::ZeroSubspace, std::string(what) + ": zero subspace");
}

// One step of the evolution, rescaled to unit trace so that supports of
// long orbits stay well above the rank cutoff.
Matrix step(const QuantumChannel& channel, const Matrix& rho) {
  Matrix next = apply_map(channel, rho);
  const double tr = next.trace().real();
  if (tr > 0.0) next /= tr;
  return next;
}

}  // namespace

Subspace support(const DensityOperator& state, const Tolerances& tol) {
  return Subspace::support_of(state.matrix(), tol);
}

Subspace image(const QuantumChannel& channel, const Subspace& sub, const Tolerances& tol) {
  require_nonzero(channel, sub, "image");
  const Matrix rho = sub.projector() / static_cast<double>(sub.dim());
  return Subspace::support_of(apply_map(channel, rho), tol);
}

ReachResult reachable_space(const QuantumChannel& channel, const DensityOperator& state,
                            const Tolerances& tol) {
  const Index n = channel.dim();
  if (state.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match channel");
  }
  ReachResult out;
  Matrix rho = state.matrix();
  out.subspace = Subspace::support_of(rho, tol);
  out.steps_profile.push_back(out.subspace.dim());
  for (Index i = 1; i < n; ++i) {
    rho = step(channel, rho);
    out.subspace = out.subspace.join(Subspace::support_of(rho, tol), tol);
    out.steps_profile.push_back(out.subspace.dim());
  }
  return out;
}

bool is_invariant(const QuantumChannel& channel, const Subspace& sub, const Tolerances& tol) {
  require_nonzero(channel, sub, "is_invariant");
  const Index n = channel.dim();
  const Matrix p = sub.projector();
  const Matrix q = Matrix::Identity(n, n) - p;
  const Matrix leak = q * apply_map(channel, p / static_cast<double>(sub.dim())) * q;
  return linalg::spectral_norm(leak) <= tol.inv;
}

Subspace recurrent_subspace(const QuantumChannel& channel, const Tolerances& tol) {
  return support(full_stationary_state(channel, tol), tol);
}

bool is_transient(const QuantumChannel& channel, const Subspace& sub, const Tolerances& tol) {
  require_nonzero(channel, sub, "is_transient");
  return sub.orthogonal_to(recurrent_subspace(channel, tol), tol);
}

std::optional<std::size_t> saturation_time(const QuantumChannel& channel,
                                           const DensityOperator& state, std::size_t m_max,
                                           const Tolerances& tol) {
  const Index n = channel.dim();
  if (state.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match channel");
  }
  if (m_max == 0) m_max = default_m_max(static_cast<std::size_t>(n));
  Matrix rho = state.matrix();
  for (std::size_t m = 1; m <= m_max; ++m) {
    rho = step(channel, rho);
    if (Subspace::support_of(rho, tol).dim() == n) return m;
  }
  return std::nullopt;
}

}  // namespace qmc
