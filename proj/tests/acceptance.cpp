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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "qmc/decomp.hpp"
#include "qmc/limits.hpp"
#include "qmc/noiseless.hpp"
#include "qmc/period.hpp"
#include "qmc/reach.hpp"
#include "qmc/spectral.hpp"

namespace qmc {
namespace {

using fixtures::max_abs;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

Subspace line(Index n, Index i) { return Subspace::coordinate(n, {i}); }

void criterion_not(Outcome& o) {
  const QuantumChannel ch = channels::not_gate();
  o.check(is_irreducible(ch), "irreducible");
  o.check(period_irreducible(ch) == 2, "period 2");
  const PeriodicSplit split = periodic_decomposition(ch);
  o.check(split.cycles.size() == 2 &&
              ((split.cycles[0].equals(line(2, 0)) && split.cycles[1].equals(line(2, 1))) ||
               (split.cycles[0].equals(line(2, 1)) && split.cycles[1].equals(line(2, 0)))),
          "cyclic subspaces are the basis lines");
  const SuperoperatorMatrix einf = e_infinity(ch);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Matrix rho = classical::random_state(2, s).matrix();
    o.check(max_abs(einf.apply(rho) - Matrix::Identity(2, 2) / 2.0) <= 1e-8, "E_inf(rho) = I/2");
  }
}

void criterion_amplitude_damping(Outcome& o) {
  const QuantumChannel ch = channels::amplitude_damping(0.5);
  o.check(reachable_space(ch, DensityOperator::basis_state(2, 0)).subspace.equals(line(2, 0)),
          "reachable space of |0><0|");
  o.check(!is_irreducible(ch), "reducible");
  const BsccSet bs = bscc_decomposition(ch);
  o.check(bs.bsccs.size() == 1 && bs.bsccs[0].equals(line(2, 0)), "unique BSCC span{|0>}");
  o.check(bs.transient.equals(line(2, 1)), "transient span{|1>}");
  const LimitReport lr = limit_report(ch);
  o.check(lr.unique_limit && lr.limiting_state &&
              max_abs(lr.limiting_state->matrix() - DensityOperator::basis_state(2, 0).matrix()) <= 1e-8,
          "limiting state |0><0|");
  o.check(!lr.full_support, "no full support");
}

void criterion_three_kraus(Outcome& o) {
  const QuantumChannel ch = fixtures::three_kraus();
  o.check(is_irreducible(ch), "irreducible");
  o.check(period_irreducible(ch) == 1, "aperiodic");
  const LimitReport lr = limit_report(ch);
  o.check(lr.unique_limit && lr.limiting_state &&
              max_abs(lr.limiting_state->matrix() - fixtures::three_kraus_stationary()) <= 1e-8,
          "stationary state");
  o.check(saturation_time(ch, DensityOperator::basis_state(3, 0)) == std::optional<std::size_t>(3),
          "saturation time 3");
}

void equivalence_suite(Outcome& o) {
  std::vector<fixtures::Named> chans = fixtures::structured();
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Index n = 1 + static_cast<Index>(s % 4);
    const Index k = 1 + static_cast<Index>((s / 4) % 4);
    chans.push_back({"random(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",seed=" +
                         std::to_string(s) + ")",
                     classical::random_channel(n, k, s)});
  }
  int violations = 0;
  for (const auto& [name, ch] : chans) {
    const LimitEquivalences e = check_limit_equivalences(ch);
    if (!e.agree) {
      ++violations;
      o.check(false, name + ": " + e.counterexample);
    }
  }
  o.detail << (o.pass ? "" : "; ") << chans.size() << " channels, " << violations << " violations";
}

void classical_differential(Outcome& o) {
  int mismatches = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Index n = 1 + static_cast<Index>(s % 6);
    const classical::StochasticMatrix p = s % 5 == 4 ? classical::random_stochastic(n, 7000 + s, 0.4)
                                                     : classical::random_structured_stochastic(n, 7000 + s);
    const classical::ClassicalStructure cs = classical::classical_structure(p);
    const QuantumChannel ch = classical::embed_stochastic(p);
    const BsccSet bs = bscc_decomposition(ch);
    bool ok = bs.bsccs.size() == cs.bsccs.size();
    for (std::size_t c = 0; ok && c < cs.bsccs.size(); ++c) {
      const Subspace want = Subspace::coordinate(n, cs.bsccs[c]);
      bool hit = false;
      for (const Subspace& b : bs.bsccs) {
        if (b.distance(want) <= 1e-8) {
          hit = true;
          ok = ok && period_irreducible(restrict_to(ch, b)) == cs.periods[c];
        }
      }
      ok = ok && hit;
    }
    ok = ok && bs.transient.distance(Subspace::coordinate(n, cs.transient_states)) <= 1e-8;
    const RealMatrix lim = classical::cesaro_limit(p);
    const SuperoperatorMatrix einf = e_infinity(ch);
    for (Index i = 0; ok && i < n; ++i) {
      const Matrix out = einf.apply(DensityOperator::basis_state(n, i).matrix());
      for (Index j = 0; j < n; ++j) ok = ok && std::abs(out(j, j).real() - lim(i, j)) <= 1e-8;
    }
    if (!ok) {
      ++mismatches;
      o.check(false, "seed " + std::to_string(7000 + s));
    }
  }
  o.detail << (o.pass ? "" : "; ") << "50 matrices, " << mismatches << " mismatches";
}

std::vector<fixtures::Named> decomposition_fixtures() {
  using namespace channels;
  return {
      {"tensor(2,ad)", fixtures::tensor_fixture(2, amplitude_damping(0.5))},
      {"tensor(3,prim2)", fixtures::tensor_fixture(3, fixtures::primitive(2, 11))},
      {"tensor(2,not)", fixtures::tensor_fixture(2, not_gate())},
      {"ad+ad", direct_sum(amplitude_damping(0.5), amplitude_damping(0.3))},
      {"tensor+cycle", direct_sum(fixtures::tensor_fixture(2, amplitude_damping(0.4)), cyclic_shift(2))},
      {"tensor+dephasing", direct_sum(fixtures::tensor_fixture(2, fixtures::primitive(2, 5)), completely_dephasing(2))},
      {"tensor(2,prim2)+tensor(3,ad)", direct_sum(fixtures::tensor_fixture(2, fixtures::primitive(2, 6)),
                                                  fixtures::tensor_fixture(3, amplitude_damping(0.5)))},
      {"dephasing2", completely_dephasing(2)},
      {"dephasing3", completely_dephasing(3)},
  };
}

void two_level_invariants(Outcome& o) {
  int violations = 0;
  auto fail = [&](const std::string& what) {
    ++violations;
    o.check(false, what);
  };
  for (const auto& [name, ch] : decomposition_fixtures()) {
    const TwoLevelDecomposition base = two_level_decomposition(ch);
    Index sum_sq = 0;
    for (std::size_t l = 0; l < base.blocks.size(); ++l) {
      const CoherenceBlock& b = base.blocks[l];
      sum_sq += b.n_l * b.n_l;
      for (std::size_t i = 0; i < b.bsccs.size(); ++i) {
        if (b.bsccs[i].dim() != b.bsccs[0].dim()) fail(name + ": unequal BSCC dims");
        for (std::size_t j = i + 1; j < b.bsccs.size(); ++j)
          if (!has_coherence(ch, b.bsccs[i], b.bsccs[j])) fail(name + ": no coherence inside block");
      }
      for (std::size_t m = l + 1; m < base.blocks.size(); ++m)
        for (const Subspace& x : b.bsccs)
          for (const Subspace& y : base.blocks[m].bsccs)
            if (has_coherence(ch, x, y)) fail(name + ": coherence across blocks");
    }
    if (fixed_space(ch).dim_complex != sum_sq) fail(name + ": fixed space dimension law");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      AnalysisOptions opts;
      opts.seed = seed;
      const TwoLevelDecomposition d = two_level_decomposition(ch, opts);
      bool same = d.blocks.size() == base.blocks.size();
      for (const CoherenceBlock& b : d.blocks) {
        bool matched = false;
        for (const CoherenceBlock& c : base.blocks) matched = matched || (c.n_l == b.n_l && c.carrier.equals(b.carrier));
        same = same && matched;
      }
      if (!same) fail(name + ": carriers depend on seed " + std::to_string(seed));
    }
  }
  o.detail << (o.pass ? "" : "; ") << decomposition_fixtures().size() << " fixtures, " << violations
           << " violations";
}

void period_sum_invariance(Outcome& o) {
  std::vector<fixtures::Named> chans = decomposition_fixtures();
  for (auto& f : fixtures::structured()) chans.push_back(std::move(f));
  for (const auto& [name, ch] : chans) {
    const Index base = period_sum(ch);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      AnalysisOptions opts;
      opts.seed = seed;
      o.check(period_sum(ch, opts) == base, name + " seed " + std::to_string(seed));
    }
  }
  o.detail << (o.pass ? "" : "; ") << chans.size() << " fixtures x 10 seeds";
}

void find_max_ns_suite(Outcome& o) {
  struct Case {
    Index a;
    QuantumChannel eb;
  };
  const std::vector<Case> cases{
      {2, channels::identity(1)},
      {2, fixtures::primitive(2, 21)},
      {2, channels::amplitude_damping(0.5)},
      {3, fixtures::primitive(2, 22)},
      {3, channels::amplitude_damping(0.2)},
  };
  for (const Case& c : cases) {
    // b' from the limiting state of E_B, independent of the decomposition.
    const LimitReport lb = limit_report(c.eb);
    const Index b_prime = support(*lb.limiting_state).dim();
    const QuantumChannel tf = fixtures::tensor_fixture(c.a, c.eb);
    for (const QuantumChannel& ch : {direct_sum(tf, channels::amplitude_damping(0.3)),
                                     direct_sum(channels::completely_dephasing(2), tf)}) {
      const NoiselessResult r = find_max_ns(ch);
      const std::string tag = "a=" + std::to_string(c.a) + " dim E_B=" + std::to_string(c.eb.dim());
      o.check(r.found && r.dim_a == c.a && r.dim_b == b_prime, tag + ": dimensions");
      o.check(r.found && verify_noiseless(ch, r), tag + ": verify_noiseless");
    }
  }
  o.check(!find_max_ns(channels::amplitude_damping(0.5)).found, "amplitude damping: not found");
  o.check(!find_max_ns(channels::completely_dephasing(2)).found, "dephasing: not found");
}

void numerical_hygiene(Outcome& o) {
  const Tolerances tol;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  auto random_vectors = [&](Index n, Index k) {
    Matrix v(n, k);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < k; ++j) v(i, j) = Complex(g(rng), g(rng));
    return v;
  };
  int violations = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Index n = 1 + static_cast<Index>(s % 5);
    const Index k = 1 + static_cast<Index>((s / 5) % 4);
    const QuantumChannel ch = classical::random_channel(n, k, 9000 + s);
    const DensityOperator rho = classical::random_state(n, 19000 + s, 1 + static_cast<Index>(s % n));
    const Matrix out = apply_map(ch, rho.matrix());
    bool ok = std::abs(out.trace().real() - 1.0) <= 10 * tol.trace;
    Eigen::SelfAdjointEigenSolver<Matrix> es((out + out.adjoint()) / 2.0);
    ok = ok && es.eigenvalues().minCoeff() >= -10 * tol.psd;
    const Matrix a0 = random_vectors(n, n);
    const Matrix a = (a0 + a0.adjoint()) / 2.0;
    ok = ok && linalg::trace_norm(apply_map(ch, a)) <= linalg::trace_norm(a) + tol.norm;
    // E(supp rho) = supp E(rho)
    ok = ok && image(ch, support(rho)).equals(Subspace::support_of(out));
    // X subset Y implies E(X) subset E(Y); E(X v Z) = E(X) v E(Z)
    const Subspace x = Subspace::span(random_vectors(n, 1));
    const Subspace y = x.join(Subspace::span(random_vectors(n, 1)));
    const Subspace z = Subspace::span(random_vectors(n, 1));
    ok = ok && image(ch, x).contained_in(image(ch, y));
    ok = ok && image(ch, x.join(z)).equals(image(ch, x).join(image(ch, z)));
    if (!ok) {
      ++violations;
      o.check(false, "pair " + std::to_string(s));
    }
  }
  o.detail << (o.pass ? "" : "; ") << "200 pairs, " << violations << " violations";
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> body;
  double budget_s;  // 0 means no runtime bound
};

}  // namespace
}  // namespace qmc

int main() {
  using namespace qmc;
  const std::vector<Criterion> criteria{
      {1, "NOT encoding: irreducible, period 2, cyclic split, E_inf = I/2", criterion_not, 1.0},
      {2, "amplitude damping: reach, BSCC, transient, limiting state", criterion_amplitude_damping, 0.0},
      {3, "three-Kraus example: irreducible, aperiodic, stationary state, saturation 3", criterion_three_kraus, 0.0},
      {4, "limit theorem equivalences on fixtures and 100 random channels", equivalence_suite, 60.0},
      {5, "classical differential suite on 50 stochastic matrices", classical_differential, 0.0},
      {6, "two-level decomposition invariants", two_level_invariants, 0.0},
      {7, "period-sum invariance under randomized decompositions", period_sum_invariance, 0.0},
      {8, "maximum noiseless subsystem search", find_max_ns_suite, 10.0},
      {9, "numerical hygiene on 200 random channel/state pairs", numerical_hygiene, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.check(false, "runtime over budget");
    }
    const std::string detail = o.detail.str();
    std::printf("criterion %d %s  %s  (%.2f s%s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                c.budget_s > 0 ? (", budget " + std::to_string(static_cast<int>(c.budget_s)) + " s").c_str() : "",
                detail.empty() ? "" : ": ", detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
