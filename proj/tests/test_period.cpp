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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qmc/decomp.hpp"
#include "qmc/error.hpp"
#include "qmc/limits.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {
namespace {

using fixtures::max_abs;

Subspace line(Index n, Index i) { return Subspace::coordinate(n, {i}); }

TEST(AperiodicState, Examples) {
  const QuantumChannel nt = channels::not_gate();
  EXPECT_EQ(return_time_gcd(nt, DensityOperator::basis_state(2, 0)), 2u);
  EXPECT_FALSE(is_aperiodic_state(nt, DensityOperator::basis_state(2, 0)));
  EXPECT_TRUE(is_aperiodic_state(nt, DensityOperator::maximally_mixed(2)));
  const QuantumChannel ex = fixtures::three_kraus();
  for (Index i = 0; i < 3; ++i) EXPECT_TRUE(is_aperiodic_state(ex, DensityOperator::basis_state(3, i)));
}

TEST(PeriodIrreducible, Examples) {
  EXPECT_EQ(period_irreducible(channels::not_gate()), 2);
  EXPECT_EQ(period_irreducible(fixtures::three_kraus()), 1);
  EXPECT_EQ(period_irreducible(channels::cyclic_shift(3)), 3);
}

TEST(PeriodIrreducible, RejectsReducible) {
  try {
    period_irreducible(channels::amplitude_damping(0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
}

TEST(PeriodicDecomposition, Examples) {
  const PeriodicSplit nt = periodic_decomposition(channels::not_gate());
  EXPECT_EQ(nt.d, 2);
  ASSERT_EQ(nt.cycles.size(), 2u);
  EXPECT_TRUE(image(channels::not_gate(), nt.cycles[0]).equals(nt.cycles[1]));
  EXPECT_TRUE(nt.cycles[0].equals(line(2, 0)) || nt.cycles[0].equals(line(2, 1)));

  const QuantumChannel c3 = channels::cyclic_shift(3);
  const PeriodicSplit s3 = periodic_decomposition(c3);
  ASSERT_EQ(s3.cycles.size(), 3u);
  // Basis lines in cyclic order i -> i+1.
  Index start = -1;
  for (Index i = 0; i < 3; ++i)
    if (s3.cycles[0].equals(line(3, i))) start = i;
  ASSERT_GE(start, 0);
  for (Index k = 0; k < 3; ++k) EXPECT_TRUE(s3.cycles[k].equals(line(3, (start + k) % 3)));

  const PeriodicSplit ex = periodic_decomposition(fixtures::three_kraus());
  EXPECT_EQ(ex.d, 1);
  ASSERT_EQ(ex.cycles.size(), 1u);
  EXPECT_EQ(ex.cycles[0].dim(), 3);
}

TEST(PeriodicDecomposition, SplitInvariants) {
  std::vector<QuantumChannel> chans{channels::not_gate(), channels::cyclic_shift(3),
                                    channels::cyclic_shift(4)};
  for (std::uint64_t s = 0; s < 6; ++s) {
    chans.push_back(classical::embed_stochastic(classical::random_irreducible_stochastic(5, s, 1 + s % 3)));
  }
  for (const QuantumChannel& ch : chans) {
    const PeriodicSplit split = periodic_decomposition(ch);
    const auto d = static_cast<std::size_t>(split.d);
    ASSERT_EQ(split.cycles.size(), d);
    EXPECT_EQ(join(split.cycles, ch.dim()).dim(), ch.dim());
    const QuantumChannel ed = power(ch, static_cast<unsigned>(d));
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_TRUE(image(ch, split.cycles[i]).equals(split.cycles[(i + 1) % d]));
      for (std::size_t j = i + 1; j < d; ++j) EXPECT_TRUE(split.cycles[i].orthogonal_to(split.cycles[j]));
      EXPECT_TRUE(is_invariant(ed, split.cycles[i]));
      const LimitReport lr = limit_report(restrict_to(ed, split.cycles[i]));
      EXPECT_TRUE(lr.unique_limit && lr.full_support);
    }
  }
}

TEST(CyclicResolution, Examples) {
  const CyclicResolution nt = cyclic_resolution(channels::not_gate());
  ASSERT_EQ(nt.projectors.size(), 2u);
  const QuantumChannel ch = channels::not_gate();
  EXPECT_LT(max_abs(adjoint_apply(ch, nt.projectors[0]) - nt.projectors[1]), 1e-8);
  EXPECT_LT(max_abs(adjoint_apply(ch, nt.projectors[1]) - nt.projectors[0]), 1e-8);

  const CyclicResolution ex = cyclic_resolution(fixtures::three_kraus());
  ASSERT_EQ(ex.projectors.size(), 1u);
  EXPECT_LT(max_abs(ex.projectors[0] - Matrix::Identity(3, 3)), 1e-8);

  const QuantumChannel c3 = channels::cyclic_shift(3);
  const CyclicResolution r3 = cyclic_resolution(c3);
  ASSERT_EQ(r3.projectors.size(), 3u);
  Matrix sum = Matrix::Zero(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    sum += r3.projectors[k];
    EXPECT_LT(max_abs(adjoint_apply(c3, r3.projectors[k]) - r3.projectors[(k + 2) % 3]), 1e-8);
  }
  EXPECT_LT(max_abs(sum - Matrix::Identity(3, 3)), 1e-8);
}

TEST(PeriodSum, Examples) {
  EXPECT_EQ(period_sum(channels::not_gate()), 2);
  EXPECT_EQ(period_sum(channels::completely_dephasing(2)), 2);
  const QuantumChannel tf = fixtures::tensor_fixture(2, channels::amplitude_damping(0.5));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AnalysisOptions opts;
    opts.seed = seed;
    EXPECT_EQ(period_sum(tf, opts), 2);
  }
}

TEST(Period, GcdDefinitionAgreesOnIrreducibleFixtures) {
  std::vector<QuantumChannel> chans{channels::not_gate(), channels::cyclic_shift(3), fixtures::three_kraus()};
  for (const QuantumChannel& ch : chans) {
    const Index d = period_irreducible(ch);
    const std::size_t m_max = default_m_max(static_cast<std::size_t>(ch.dim()));
    // Minimal d' with every sampled state aperiodic under E^{d'}.
    Index minimal = 0;
    for (Index dp = 1; dp <= ch.dim() && minimal == 0; ++dp) {
      const QuantumChannel p = power(ch, static_cast<unsigned>(dp));
      bool all = true;
      for (Index i = 0; i < ch.dim(); ++i) all = all && is_aperiodic_state(p, DensityOperator::basis_state(ch.dim(), i), m_max);
      for (std::uint64_t s = 0; s < 5; ++s) all = all && is_aperiodic_state(p, classical::random_state(ch.dim(), s, 1), m_max);
      if (all) minimal = dp;
    }
    EXPECT_EQ(minimal, d);
  }
}

TEST(Period, TrivialTransientAndSimplePeripheralMeansAperiodicStates) {
  std::vector<QuantumChannel> chans{fixtures::three_kraus(), classical::random_channel(3, 2, 4)};
  for (const QuantumChannel& ch : chans) {
    ASSERT_TRUE(recurrent_subspace(ch).equals(Subspace::full(ch.dim())));
    ASSERT_EQ(spectrum(ch).peripheral.size(), 1u);
    for (std::uint64_t s = 0; s < 10; ++s)
      EXPECT_TRUE(is_aperiodic_state(ch, classical::random_state(ch.dim(), s, 1)));
  }
}

TEST(Period, ClassicalAgreement) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Index n = 2 + static_cast<Index>(s % 5);
    const Index d = 1 + static_cast<Index>(s % std::min<Index>(n, 3));
    const classical::StochasticMatrix p = classical::random_irreducible_stochastic(n, s, d);
    const classical::ClassicalStructure cs = classical::classical_structure(p);
    ASSERT_EQ(cs.bsccs.size(), 1u);
    EXPECT_EQ(period_irreducible(classical::embed_stochastic(p)), cs.periods[0]);
  }
}

}  // namespace
}  // namespace qmc
