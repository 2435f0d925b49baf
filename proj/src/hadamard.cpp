// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "butson/hadamard.hpp"

#include "butson/parallel.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>

namespace butson {

AbelianGroupSpec::AbelianGroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("abelian group needs at least one cyclic factor");
  for (int f : factors_) {
    if (f < 2) throw std::invalid_argument("cyclic factor orders must be >= 2");
  }
}

int AbelianGroupSpec::order() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1, std::multiplies<>());
}

int AbelianGroupSpec::exponent() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1, [](int a, int b) { return std::lcm(a, b); });
}

std::vector<int> AbelianGroupSpec::digits(int index) const {
  std::vector<int> d(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    d[i] = index % factors_[i];
    index /= factors_[i];
  }
  return d;
}

LogMatrix character_table(const AbelianGroupSpec& g) {
  const int n = g.order();
  const int k = g.exponent();
  const auto& f = g.factors();
  LogEntries e(n, n);
  for (int chi = 0; chi < n; ++chi) {
    const auto a = g.digits(chi);
    for (int el = 0; el < n; ++el) {
      const auto b = g.digits(el);
      long long s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += static_cast<long long>(a[i]) * b[i] * (k / f[i]);
      e(chi, el) = mod_k(s, k);
    }
  }
  return LogMatrix(k, std::move(e));
}

LogMatrix fourier(int n) {
  if (n == 1) return LogMatrix(1, LogEntries::Zero(1, 1));
  return character_table(AbelianGroupSpec({n}));
}

LogMatrix sylvester(int m) {
  if (m < 1) throw std::invalid_argument("sylvester: m must be >= 1");
  return character_table(AbelianGroupSpec(std::vector<int>(static_cast<std::size_t>(m), 2)));
}

LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b) {
  const int k = std::lcm(a.phase(), b.phase());
  const LogMatrix la = lift(a, k);
  const LogMatrix lb = lift(b, k);
  const int m = lb.order();
  LogEntries e(a.order() * m, a.order() * m);
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      e.block(i * m, j * m, m, m) = (lb.entries().array() + la(i, j)).matrix();
    }
  }
  return LogMatrix::from_exponents(k, e);
}

bool verify_hadamard(const LogMatrix& m, unsigned workers) {
  const int n = m.order();
  const int k = m.phase();
  auto red = reducer_for(k);
  std::atomic<bool> ok{true};
  detail::parallel_for(static_cast<std::uint64_t>(n), workers, [&](std::uint64_t task) {
    const int i = static_cast<int>(task);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
    for (int j = i + 1; j < n && ok.load(std::memory_order_relaxed); ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int l = 0; l < n; ++l) ++counts[static_cast<std::size_t>(mod_k(m(i, l) - m(j, l), k))];
      if (!red->vanishes(counts)) ok.store(false, std::memory_order_relaxed);
    }
  });
  return ok.load();
}

LogMatrix dephase(const LogMatrix& m) {
  const int n = m.order();
  if (n == 0) return m;
  LogEntries e = m.entries();
  e.rowwise() -= e.row(0).eval();
  e.colwise() -= e.col(0).eval();
  return LogMatrix::from_exponents(m.phase(), e);
}

LogMatrix circulant_from_row(const LogVector& x) {
  const int n = x.length();
  LogEntries e(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e(i, j) = x[mod_k(i - j, n)];
  }
  return LogMatrix(x.phase(), std::move(e));
}

std::optional<CycInt> is_unbiased(const LogMatrix& h, const LogMatrix& kmat) {
  if (h.phase() != kmat.phase()) throw PhaseMismatch("is_unbiased: phase mismatch");
  if (h.order() != kmat.order()) throw std::invalid_argument("is_unbiased: order mismatch");
  const int n = h.order();
  const int k = h.phase();
  const CycMatrix p = product(h, adjoint(kmat));
  const CycInt z = p.at(0, 0);
  if (norm_sq(z).as_integer() != Coeff{n}) return std::nullopt;
  LogEntries quotient(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CycInt entry = p.at(i, j);
      int found = -1;
      for (int t = 0; t < k && found < 0; ++t) {
        if (rotate(z, t) == entry) found = t;
      }
      if (found < 0) return std::nullopt;
      quotient(i, j) = found;
    }
  }
  if (!verify_hadamard(LogMatrix(k, std::move(quotient)))) return std::nullopt;
  return z;
}

std::optional<int> unitary_order(const LogMatrix& m, int max_t) {
  if (max_t < 1) throw std::invalid_argument("unitary_order: max_t must be positive");
  const int n = m.order();
  std::optional<Coeff> root;
  for (Coeff s = 0; s * s <= n; ++s) {
    if (s * s == n) root = s;
  }
  CycMatrix power = CycMatrix::from_log(m);
  Coeff even_scale = 1;  // n^{t/2} for the current even t
  Coeff odd_scale = root.value_or(0);
  for (int t = 1; t <= max_t; ++t) {
    if (t % 2 == 0) {
      even_scale = checked_mul(even_scale, n);
      if (is_scalar_identity(power, even_scale)) return t;
    } else if (root) {
      if (t > 1) odd_scale = checked_mul(odd_scale, checked_mul(*root, *root));
      if (is_scalar_identity(power, odd_scale)) return t;
    }
    if (t < max_t) power = canonical_reduce(product(power, m));
  }
  return std::nullopt;
}

}  // namespace butson
