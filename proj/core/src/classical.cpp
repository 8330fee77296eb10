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

#include "qmc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "qmc/error.hpp"

namespace qmc::classical {

StochasticMatrix::StochasticMatrix(RealMatrix p, double row_tol) : p_(std::move(p)) {
  if (p_.rows() == 0 || p_.rows() != p_.cols()) {
    throw Error(ErrorKind::NotStochastic, "stochastic matrix must be square and nonempty");
  }
  for (Index i = 0; i < p_.rows(); ++i) {
    double sum = 0.0;
    for (Index j = 0; j < p_.cols(); ++j) {
      const double v = p_(i, j);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw Error(ErrorKind::NotStochastic, "entry (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ") is not a probability");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > row_tol) {
      throw Error(ErrorKind::NotStochastic, "row " + std::to_string(i) + " sums to " +
                                                std::to_string(sum));
    }
  }
}

QuantumChannel embed_stochastic(const StochasticMatrix& p, const Tolerances& tol) {
  const Index n = p.n();
  std::vector<Matrix> kraus;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (p(i, j) <= 0.0) continue;
      Matrix k = Matrix::Zero(n, n);
      k(j, i) = std::sqrt(p(i, j));
      kraus.push_back(std::move(k));
    }
  }
  return validate_channel(std::move(kraus), n, tol);
}

namespace {

std::vector<std::vector<Index>> successors(const RealMatrix& p) {
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(p.rows()));
  for (Index i = 0; i < p.rows(); ++i)
    for (Index j = 0; j < p.cols(); ++j)
      if (p(i, j) > 0.0) out[static_cast<std::size_t>(i)].push_back(j);
  return out;
}

// Iterative Tarjan.
std::vector<std::vector<Index>> tarjan(const std::vector<std::vector<Index>>& adj) {
  const std::size_t n = adj.size();
  std::vector<long> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> out;
  long counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<Index>(root));
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t v = f.v;
      if (f.next < adj[v].size()) {
        const auto w = static_cast<std::size_t>(adj[v][f.next++]);
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(static_cast<Index>(w));
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (static_cast<std::size_t>(w) != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Index class_period(const std::vector<std::vector<Index>>& adj, Index start, std::size_t n) {
  const std::size_t horizon = std::max(n * n, 4 * n);
  std::vector<char> current(n, 0), next(n, 0);
  current[static_cast<std::size_t>(start)] = 1;
  Index g = 0;
  for (std::size_t len = 1; len <= horizon && g != 1; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t v = 0; v < n; ++v)
      if (current[v])
        for (Index w : adj[v]) next[static_cast<std::size_t>(w)] = 1;
    if (next[static_cast<std::size_t>(start)]) g = std::gcd(g, static_cast<Index>(len));
    current.swap(next);
  }
  return g;
}

}  // namespace

ClassicalStructure classical_structure(const StochasticMatrix& p) {
  const auto n = static_cast<std::size_t>(p.n());
  const auto adj = successors(p.matrix());
  ClassicalStructure out;
  out.sccs = tarjan(adj);
  std::vector<long> comp_of(n, -1);
  for (std::size_t c = 0; c < out.sccs.size(); ++c)
    for (Index v : out.sccs[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<long>(c);
  std::vector<bool> recurrent(n, false);
  for (std::size_t c = 0; c < out.sccs.size(); ++c) {
    bool closed = true;
    for (Index v : out.sccs[c])
      for (Index w : adj[static_cast<std::size_t>(v)])
        if (comp_of[static_cast<std::size_t>(w)] != static_cast<long>(c)) closed = false;
    if (!closed) continue;
    out.bsccs.push_back(out.sccs[c]);
    out.periods.push_back(class_period(adj, out.sccs[c].front(), n));
    for (Index v : out.sccs[c]) recurrent[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!recurrent[v]) out.transient_states.push_back(static_cast<Index>(v));
  return out;
}

RealMatrix cesaro_limit(const StochasticMatrix& p) {
  const Index n = p.n();
  const RealMatrix& m = p.matrix();
  const ClassicalStructure s = classical_structure(p);
  RealMatrix limit = RealMatrix::Zero(n, n);

  std::vector<RealVector> stationary;
  for (const auto& cls : s.bsccs) {
    const auto k = static_cast<Index>(cls.size());
    RealMatrix a(k + 1, k);
    for (Index r = 0; r < k; ++r)
      for (Index c = 0; c < k; ++c)
        a(r, c) = m(cls[static_cast<std::size_t>(c)], cls[static_cast<std::size_t>(r)]) -
                  (r == c ? 1.0 : 0.0);
    a.row(k).setOnes();
    RealVector rhs = RealVector::Zero(k + 1);
    rhs(k) = 1.0;
    const RealVector pi = a.colPivHouseholderQr().solve(rhs);
    stationary.push_back(pi);
    for (Index r = 0; r < k; ++r)
      for (Index c = 0; c < k; ++c)
        limit(cls[static_cast<std::size_t>(r)], cls[static_cast<std::size_t>(c)]) = pi(c);
  }

  const auto& t = s.transient_states;
  if (t.empty()) return limit;
  const auto nt = static_cast<Index>(t.size());
  RealMatrix q(nt, nt);
  for (Index r = 0; r < nt; ++r)
    for (Index c = 0; c < nt; ++c)
      q(r, c) = (r == c ? 1.0 : 0.0) - m(t[static_cast<std::size_t>(r)], t[static_cast<std::size_t>(c)]);
  const auto lu = q.fullPivLu();
  for (std::size_t b = 0; b < s.bsccs.size(); ++b) {
    const auto& cls = s.bsccs[b];
    RealVector into(nt);
    for (Index r = 0; r < nt; ++r) {
      double sum = 0.0;
      for (Index v : cls) sum += m(t[static_cast<std::size_t>(r)], v);
      into(r) = sum;
    }
    const RealVector h = lu.solve(into);
    for (Index r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < cls.size(); ++c)
        limit(t[static_cast<std::size_t>(r)], cls[c]) += h(r) * stationary[b](static_cast<Index>(c));
  }
  return limit;
}

QuantumChannel random_channel(Index n, Index k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix g(k * n, n);
  for (Index c = 0; c < n; ++c)
    for (Index r = 0; r < k * n; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = qr.householderQ() * Matrix::Identity(k * n, n);
  std::vector<Matrix> kraus;
  for (Index i = 0; i < k; ++i) kraus.push_back(q.block(i * n, 0, n, n));
  return validate_channel(std::move(kraus), n);
}

DensityOperator random_state(Index n, std::uint64_t seed, Index rank) {
  if (rank <= 0 || rank > n) rank = n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix g(n, rank);
  for (Index c = 0; c < rank; ++c)
    for (Index r = 0; r < n; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  return DensityOperator::normalized(g * g.adjoint());
}

namespace {

RealMatrix normalize_rows(RealMatrix p) {
  for (Index i = 0; i < p.rows(); ++i) p.row(i) /= p.row(i).sum();
  return p;
}

bool irreducible_with_period(const RealMatrix& p, Index period) {
  const ClassicalStructure s = classical_structure(StochasticMatrix(p, 1e-9));
  return s.sccs.size() == 1 && s.periods.front() == period;
}

}  // namespace

StochasticMatrix random_stochastic(Index n, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  RealMatrix p = RealMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      if (unit(rng) < density) p(i, j) = 0.05 + unit(rng);
    if (p.row(i).sum() == 0.0) p(i, pick(rng)) = 1.0;
  }
  return StochasticMatrix(normalize_rows(p), 1e-12);
}

StochasticMatrix random_irreducible_stochastic(Index n, std::uint64_t seed, Index period) {
  if (n <= 0 || period <= 0 || period > n) {
    throw Error(ErrorKind::BadInput, "need 1 <= period <= n");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Index> layer(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) layer[static_cast<std::size_t>(i)] = i % period;
  std::shuffle(layer.begin() + period, layer.end(), rng);
  auto allowed = [&](Index i, Index j) {
    return layer[static_cast<std::size_t>(j)] == (layer[static_cast<std::size_t>(i)] + 1) % period;
  };
  RealMatrix p = RealMatrix::Zero(n, n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    p.setZero();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (allowed(i, j) && unit(rng) < 0.5) p(i, j) = 0.05 + unit(rng);
    bool rows_ok = true;
    for (Index i = 0; i < n; ++i) rows_ok = rows_ok && p.row(i).sum() > 0.0;
    if (rows_ok && irreducible_with_period(normalize_rows(p), period)) {
      return StochasticMatrix(normalize_rows(p), 1e-12);
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) p(i, j) = allowed(i, j) ? 0.05 + unit(rng) : 0.0;
  return StochasticMatrix(normalize_rows(p), 1e-12);
}

StochasticMatrix random_structured_stochastic(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform_int = [&](Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
  };
  const Index classes = uniform_int(1, std::max<Index>(1, n / 2));
  const Index transient = uniform_int(0, std::min<Index>(n - classes, n / 3));
  std::vector<Index> sizes(static_cast<std::size_t>(classes), 1);
  for (Index extra = n - transient - classes; extra > 0; --extra)
    ++sizes[static_cast<std::size_t>(uniform_int(0, classes - 1))];

  RealMatrix p = RealMatrix::Zero(n, n);
  Index offset = 0;
  for (Index size : sizes) {
    const Index period = unit(rng) < 0.4 ? uniform_int(1, std::min<Index>(size, 3)) : 1;
    const StochasticMatrix block = random_irreducible_stochastic(size, rng(), period);
    p.block(offset, offset, size, size) = block.matrix();
    offset += size;
  }
  const Index recurrent = offset;
  for (Index t = recurrent; t < n; ++t) {
    // One guaranteed edge toward a class or an earlier transient state.
    p(t, uniform_int(0, t - 1)) = 0.05 + unit(rng);
    for (Index j = 0; j < n; ++j)
      if (unit(rng) < 0.3) p(t, j) += unit(rng);
  }
  p = normalize_rows(p);

  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  RealMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = p(i, j);
  return StochasticMatrix(out, 1e-12);
}

}  // namespace qmc::classical
