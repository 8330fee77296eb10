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
#include "qmc/limits.hpp"
#include "qmc/spectral.hpp"

namespace qmc {
namespace {

using fixtures::max_abs;

TEST(LimitReport, AmplitudeDamping) {
  const LimitReport r = limit_report(channels::amplitude_damping(0.5));
  EXPECT_TRUE(r.limit_exists);
  EXPECT_TRUE(r.unique_limit);
  ASSERT_TRUE(r.limiting_state.has_value());
  EXPECT_LT(max_abs(r.limiting_state->matrix() - DensityOperator::basis_state(2, 0).matrix()), 1e-8);
  EXPECT_FALSE(r.full_support);
  const PowerIteration it = iterate_state(channels::amplitude_damping(0.5), DensityOperator::basis_state(2, 1).matrix());
  EXPECT_LT(max_abs(it.last - r.limiting_state->matrix()), 1e-8);
}

TEST(LimitReport, NotEncoding) {
  const LimitReport r = limit_report(channels::not_gate());
  EXPECT_FALSE(r.limit_exists);
  EXPECT_FALSE(r.unique_limit);
  EXPECT_EQ(r.peripheral_count, 2);
  const PowerIteration it = iterate_state(channels::not_gate(), DensityOperator::basis_state(2, 0).matrix());
  EXPECT_GT(it.final_delta, 1.0);
}

TEST(LimitReport, ThreeKraus) {
  const LimitReport r = limit_report(fixtures::three_kraus());
  EXPECT_TRUE(r.limit_exists && r.unique_limit && r.full_support);
  ASSERT_TRUE(r.limiting_state.has_value());
  EXPECT_LT(max_abs(r.limiting_state->matrix() - fixtures::three_kraus_stationary()), 1e-8);
}

TEST(LimitReport, NonUniqueHasNoLimitingState) {
  const LimitReport r = limit_report(channels::completely_dephasing(2));
  EXPECT_TRUE(r.limit_exists);
  EXPECT_FALSE(r.unique_limit);
  EXPECT_FALSE(r.limiting_state.has_value());
  EXPECT_EQ(r.multiplicity_of_one, 2);
}

TEST(LimitReport, InvariantsAndPowerIterationOracle) {
  std::vector<fixtures::Named> chans = fixtures::structured();
  for (std::uint64_t s = 0; s < 10; ++s)
    chans.push_back({"random" + std::to_string(s), classical::random_channel(1 + s % 4, 1 + s % 3, s)});
  for (const auto& [name, ch] : chans) {
    const LimitReport r = limit_report(ch);
    if (r.unique_limit) EXPECT_TRUE(r.limit_exists) << name;
    if (r.full_support) EXPECT_TRUE(r.unique_limit) << name;
    const SuperoperatorMatrix einf = e_infinity(ch);
    double worst_step = 0.0;
    for (std::uint64_t k = 0; k < 20; ++k) {
      const Matrix rho = classical::random_state(ch.dim(), 500 + k).matrix();
      Matrix cur = rho;
      for (int m = 0; m < 499; ++m) cur = apply_map(ch, cur);
      const Matrix next = apply_map(ch, cur);
      worst_step = std::max(worst_step, linalg::trace_norm(next - cur));
      if (r.limit_exists) EXPECT_LE(linalg::trace_norm(next - einf.apply(rho)), 1e-6) << name;
    }
    if (!r.limit_exists) EXPECT_GT(worst_step, 1e-3) << name;
  }
}

TEST(LimitReport, UnitalUniqueLimitIsMaximallyMixed) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    // Mixture of two random unitaries is unital.
    const QuantumChannel u1 = classical::random_channel(3, 1, s);
    const QuantumChannel u2 = classical::random_channel(3, 1, s + 100);
    std::vector<Matrix> kraus{u1.kraus()[0] / std::sqrt(2.0), u2.kraus()[0] / std::sqrt(2.0)};
    const QuantumChannel ch = validate_channel(kraus, 3);
    const LimitReport r = limit_report(ch);
    ASSERT_TRUE(r.unique_limit);
    EXPECT_LT(max_abs(r.limiting_state->matrix() - Matrix::Identity(3, 3) / 3.0), 1e-8);
  }
}

TEST(Equivalences, Examples) {
  const LimitEquivalences ex = check_limit_equivalences(fixtures::three_kraus());
  EXPECT_TRUE(ex.empirical_primitive && ex.irreducible_aperiodic && ex.spectral_primitive);
  EXPECT_TRUE(ex.agree) << ex.counterexample;

  const LimitEquivalences nt = check_limit_equivalences(channels::not_gate());
  EXPECT_FALSE(nt.empirical_primitive || nt.irreducible_aperiodic || nt.spectral_primitive);
  EXPECT_TRUE(nt.agree) << nt.counterexample;

  const LimitEquivalences ad = check_limit_equivalences(channels::amplitude_damping(0.5));
  EXPECT_TRUE(ad.unique_bscc_aperiodic);
  EXPECT_TRUE(ad.spectral_unique_limit);
  EXPECT_TRUE(ad.agree) << ad.counterexample;
}

TEST(Equivalences, AgreeOnFixtures) {
  for (const auto& [name, ch] : fixtures::structured()) {
    const LimitEquivalences e = check_limit_equivalences(ch);
    EXPECT_TRUE(e.agree) << name << ": " << e.counterexample;
  }
}

}  // namespace
}  // namespace qmc
