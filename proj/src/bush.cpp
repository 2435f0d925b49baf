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

#include "butson/bush.hpp"

#include "butson/cyc_matrix.hpp"
#include "butson/hadamard.hpp"
#include "butson/numtheory.hpp"

#include <stdexcept>

namespace butson {

bool has_bush_block_sums(const LogMatrix& m, int block_size) {
  const int b = block_size;
  if (b < 1 || static_cast<long long>(b) * b != m.order()) return false;
  const int k = m.phase();
  auto red = reducer_for(k);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k));
  std::vector<std::int64_t> reduced(static_cast<std::size_t>(red->totient()));
  auto sum_is = [&](std::int64_t expected) {
    red->reduce(counts, reduced);
    if (reduced[0] != expected) return false;
    return std::all_of(reduced.begin() + 1, reduced.end(), [](std::int64_t v) { return v == 0; });
  };
  for (int bi = 0; bi < b; ++bi) {
    for (int bj = 0; bj < b; ++bj) {
      const std::int64_t expected = bi == bj ? b : 0;
      for (int r = 0; r < b; ++r) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int c = 0; c < b; ++c) ++counts[static_cast<std::size_t>(m(bi * b + r, bj * b + c))];
        if (!sum_is(expected)) return false;
        std::fill(counts.begin(), counts.end(), 0);
        for (int c = 0; c < b; ++c) ++counts[static_cast<std::size_t>(m(bi * b + c, bj * b + r))];
        if (!sum_is(expected)) return false;
      }
    }
  }
  return true;
}

BushMatrix::BushMatrix(LogMatrix base, int block_size) : base_(std::move(base)), block_size_(block_size) {
  if (!has_bush_block_sums(base_, block_size_)) throw std::invalid_argument("matrix is not of Bush type");
  if (!verify_hadamard(base_)) throw std::invalid_argument("Bush-type candidate is not Hadamard");
}

namespace {

void require_odd_prime(int p) {
  if (p < 3 || !numtheory::is_prime(p)) throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

LogMatrix projector(int p, int a) {
  require_odd_prime(p);
  if (a < 0 || a >= p) throw std::invalid_argument("projector: residue out of range");
  LogEntries e(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) e(i, j) = mod_k(static_cast<long long>(a) * (j - i), p);
  }
  return LogMatrix(p, std::move(e));
}

bool verify_projector_algebra(int p) {
  require_odd_prime(p);
  if (p > 13) throw std::invalid_argument("verify_projector_algebra: p must be <= 13");
  std::vector<LogMatrix> r;
  for (int a = 0; a < p; ++a) r.push_back(projector(p, a));
  CycMatrix sum_of_squares(p, p, p);
  for (int a = 0; a < p; ++a) {
    const CycMatrix square = product(r[a], r[a]);
    if (!(square == Coeff{p} * CycMatrix::from_log(r[a]))) return false;
    if (!(adjoint(r[a]) == r[a])) return false;
    if (!(transpose(r[a]) == r[(p - a) % p])) return false;
    for (int b = 0; b < p; ++b) {
      if (b != a && !is_zero(product(r[a], r[b]))) return false;
    }
    sum_of_squares += square;
  }
  return is_scalar_identity(sum_of_squares, Coeff{p} * p);
}

BushMatrix bush_circulant(int p, int a) {
  require_odd_prime(p);
  if (a % p == 0) throw std::invalid_argument("bush_circulant: a must be non-zero mod p");
  a = mod_k(a, p);
  LogEntries e(p * p, p * p);
  for (int bi = 0; bi < p; ++bi) {
    for (int bj = 0; bj < p; ++bj) {
      e.block(bi * p, bj * p, p, p) = projector(p, mod_k(static_cast<long long>(bj - bi) * a, p)).entries();
    }
  }
  LogMatrix m(p, std::move(e));
  if (!(m == transpose(m))) throw std::logic_error("bush_circulant: result is not symmetric");
  return BushMatrix(std::move(m), p);
}

bool conjugate_self_bent_check(const LogMatrix& m) {
  const int n = m.order();
  if (!numtheory::is_square(n)) return false;
  const Coeff root = numtheory::isqrt(n);
  return product(m, m) == root * CycMatrix::from_log(conj(m));
}

BushModification bush_modify(const BushMatrix& h, const std::vector<int>& u) {
  const int k = h.base().phase();
  const int b = h.block_size();
  if (k % 2 == 0) throw std::invalid_argument("bush_modify: phase must be odd");
  if (static_cast<int>(u.size()) != b) {
    throw std::invalid_argument("bush_modify: expected " + std::to_string(b) + " residues, got " +
                                std::to_string(u.size()));
  }
  LogEntries e = h.base().entries();
  LogEntryVector sd(b * b), csd(b * b);
  const int alpha_sd = (k + 1) / 2;
  const int alpha_csd = (k - 1) / 2;
  for (int i = 0; i < b; ++i) {
    const int ui = mod_k(u[static_cast<std::size_t>(i)], k);
    e.block(i * b, i * b, b, b).array() += ui;
    sd.segment(i * b, b).setConstant(mod_k(static_cast<long long>(ui) * alpha_sd, k));
    csd.segment(i * b, b).setConstant(mod_k(static_cast<long long>(ui) * alpha_csd, k));
  }
  BushModification out{LogMatrix::from_exponents(k, e), LogVector(k, sd), LogVector(k, csd), false, {}, {}};
  out.hadamard = verify_hadamard(out.matrix);
  out.self_dual_certificate = check_bent(out.matrix, out.self_dual);
  out.conjugate_certificate = check_bent(out.matrix, out.conjugate_self_dual);
  return out;
}

std::vector<LogVector> bush_quaternary_bents(const BushMatrix& h) {
  const LogMatrix& m = h.base();
  const int b = h.block_size();
  if (m.phase() != 4) throw std::invalid_argument("bush_quaternary_bents: phase must be 4");
  if (b % 2 != 0) throw std::invalid_argument("bush_quaternary_bents: order must be 4m^2");
  const LogMatrix negated = shift(m, 2);
  std::vector<LogVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    LogEntryVector e(b * b);
    for (int i = 0; i < b; ++i) e.segment(i * b, b).setConstant((mask >> (b - 1 - i)) & 1 ? 3 : 1);
    LogVector x(4, e);
    if (!check_bent(m, x).self_dual) throw std::logic_error("block-constant vector is not self-dual bent");
    if (!check_bent(negated, x).conjugate_self_dual) {
      throw std::logic_error("block-constant vector is not conjugate self-dual for -H");
    }
    out.push_back(std::move(x));
  }
  return out;
}

BushMatrix bush_order4_quaternary() {
  LogEntries e(4, 4);
  e << 0, 0, 0, 2,
       0, 0, 2, 0,
       0, 2, 0, 0,
       2, 0, 0, 0;
  return BushMatrix(LogMatrix(4, e), 2);
}

}  // namespace butson
