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

#include "butson/codes.hpp"

#include "butson/bent.hpp"
#include "butson/hadamard.hpp"
#include "butson/numtheory.hpp"

#include <map>
#include <set>

namespace butson {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::vector<int> row_of(const CodeWords& w, Eigen::Index i) {
  return std::vector<int>(w.row(i).data(), w.row(i).data() + w.cols());
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

ZkCode::ZkCode(int length, int modulus, const CodeWords& words) : length_(length), modulus_(modulus) {
  if (length < 1 || modulus < 1) throw std::invalid_argument("ZkCode: length and modulus must be positive");
  if (words.rows() == 0) throw std::invalid_argument("ZkCode: a code needs at least one word");
  if (words.cols() != length) throw std::invalid_argument("ZkCode: word length mismatch");
  if (words.minCoeff() < 0 || words.maxCoeff() >= modulus) {
    throw std::invalid_argument("ZkCode: symbols must lie in [0, " + std::to_string(modulus) + ")");
  }
  std::set<std::vector<int>> seen;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < words.rows(); ++i) {
    if (seen.insert(row_of(words, i)).second) keep.push_back(i);
  }
  duplicates_removed_ = static_cast<int>(words.rows()) - static_cast<int>(keep.size());
  words_.resize(static_cast<Eigen::Index>(keep.size()), length);
  for (std::size_t r = 0; r < keep.size(); ++r) words_.row(static_cast<Eigen::Index>(r)) = words.row(keep[r]);
}

ButsonCodes code_from_matrix(const LogMatrix& h) {
  const int n = h.order();
  const int k = h.phase();
  CodeWords all(static_cast<Eigen::Index>(n) * k, n);
  for (int alpha = 0; alpha < k; ++alpha) {
    all.middleRows(static_cast<Eigen::Index>(alpha) * n, n) =
        h.entries().unaryExpr([alpha, k](int v) { return (v + alpha) % k; });
  }
  return {ZkCode(n, k, h.entries()), ZkCode(n, k, all)};
}

int min_distance(const ZkCode& c) {
  if (c.size() < 2) throw std::invalid_argument("min_distance: code needs at least two words");
  int best = c.length();
  const auto& w = c.words();
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) best = std::min(best, hamming_distance(w.row(i), w.row(j)));
  }
  return best;
}

std::string SurdBound::to_string() const {
  std::string s = butson::to_string(rational_part);
  if (surd_coefficient != Rational(0)) {
    const Rational mag = surd_coefficient < Rational(0) ? -surd_coefficient : surd_coefficient;
    s += surd_coefficient < Rational(0) ? " - " : " + ";
    if (mag != Rational(1)) s += butson::to_string(mag) + "*";
    s += "sqrt(" + std::to_string(radicand) + ")";
  }
  return s;
}

SurdBound leducq_upper_bound(std::int64_t n, std::int64_t q) {
  if (q < 3 || !numtheory::is_prime(q)) throw std::invalid_argument("leducq_upper_bound: q must be an odd prime");
  if (n < 1) throw std::invalid_argument("leducq_upper_bound: n must be positive");
  SurdBound b;
  const std::int64_t scaled = (q - 1) * n;  // q * value + sqrt(n)
  const std::int64_t s = numtheory::isqrt(n);
  if (s * s == n) {
    b.rational_part = Rational(scaled - s, q);
    b.floor = floor_div(scaled - s, q);
    b.ceil = ceil_div(scaled - s, q);
  } else {
    b.rational_part = Rational(scaled, q);
    b.surd_coefficient = Rational(-1, q);
    b.radicand = n;
    b.floor = floor_div(scaled - s - 1, q);
    b.ceil = ceil_div(scaled - s, q);
  }
  return b;
}

Rational real_inner_product_phase3(const LogVector& v, const LogVector& w) {
  if (v.phase() != 3 || w.phase() != 3) throw std::invalid_argument("phase-3 vectors required");
  if (v.length() != w.length()) throw std::invalid_argument("length mismatch");
  std::int64_t s[3] = {0, 0, 0};
  for (int i = 0; i < v.length(); ++i) ++s[mod_k(v[i] - w[i], 3)];
  // Re(zeta_3) = Re(zeta_3^2) = -1/2
  return Rational(s[0]) - Rational(s[1] + s[2], 2);
}

Rational lemma_distance_phase3(const LogVector& v, const LogVector& w) {
  return Rational(2, 3) * (Rational(v.length()) - real_inner_product_phase3(v, w));
}

LowerBoundReport bent_lower_bound(const LogMatrix& h, const LogVector& x) {
  if (h.phase() != 3 || x.phase() != 3) throw std::invalid_argument("bent_lower_bound: phase 3 required");
  if (!check_bent(h, x).bent) throw std::invalid_argument("bent_lower_bound: vector is not H-bent");
  const std::int64_t n = h.order();
  LowerBoundReport report;
  report.bound = ceil_div(2 * n - numtheory::isqrt(4 * n), 3);
  const ZkCode code = code_from_matrix(h).translates;
  report.min_distance = static_cast<int>(n);
  for (int i = 0; i < code.size(); ++i) {
    const LogVector w(3, LogEntryVector(code.words().row(i).transpose()));
    const Rational d = lemma_distance_phase3(x, w);
    report.distances.push_back(d);
    const int hd = hamming_distance(x.entries(), w.entries());
    if (d != Rational(hd)) report.distances_match_hamming = false;
    report.min_distance = std::min(report.min_distance, hd);
  }
  return report;
}

bool is_self_complementary(const ZkCode& c) {
  std::set<std::vector<int>> words;
  for (int i = 0; i < c.size(); ++i) words.insert(row_of(c.words(), i));
  const int k = c.modulus();
  for (const auto& w : words) {
    for (int alpha = 1; alpha < k; ++alpha) {
      std::vector<int> t = w;
      for (int& v : t) v = (v + alpha) % k;
      if (!words.contains(t)) return false;
    }
  }
  return true;
}

bool has_strength_2(const ZkCode& c) {
  const int k = c.modulus();
  const auto kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  if (c.size() % static_cast<int>(kk) != 0) return false;
  const int expected = c.size() / static_cast<int>(kk);
  std::vector<int> counts(kk);
  const auto& w = c.words();
  for (int a = 0; a < c.length(); ++a) {
    for (int b = a + 1; b < c.length(); ++b) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int i = 0; i < c.size(); ++i) ++counts[static_cast<std::size_t>(w(i, a) * k + w(i, b))];
      if (std::any_of(counts.begin(), counts.end(), [expected](int v) { return v != expected; })) return false;
    }
  }
  return true;
}

ZkCode reed_muller_1(int q, int m, std::uint64_t budget) {
  if (!numtheory::is_prime(q)) throw std::invalid_argument("reed_muller_1: q must be prime");
  if (m < 1) throw std::invalid_argument("reed_muller_1: m must be >= 1");
  std::uint64_t length = 1;
  for (int i = 0; i < m; ++i) {
    length *= static_cast<std::uint64_t>(q);
    if (length * static_cast<std::uint64_t>(q) > budget) {
      throw BudgetExceeded("reed_muller_1: q^(m+1) words of length q^m exceed budget " + std::to_string(budget));
    }
  }
  const int n = static_cast<int>(length);
  const AbelianGroupSpec points(std::vector<int>(static_cast<std::size_t>(m), q));
  const int count = n * q;
  CodeWords words(count, n);
  // word index = (a_0, a_1, ..., a_m) lexicographic
  const AbelianGroupSpec coeffs(std::vector<int>(static_cast<std::size_t>(m) + 1, q));
  for (int w = 0; w < count; ++w) {
    const auto a = coeffs.digits(w);
    for (int x = 0; x < n; ++x) {
      const auto p = points.digits(x);
      long long v = a[0];
      for (int i = 0; i < m; ++i) v += static_cast<long long>(a[static_cast<std::size_t>(i) + 1]) * p[static_cast<std::size_t>(i)];
      words(w, x) = mod_k(v, q);
    }
  }
  ZkCode code(n, q, words);
  if (code.size() != count) throw std::logic_error("reed_muller_1: words are not distinct");
  // linear code: minimum distance is the least non-zero weight
  int d = n;
  for (int w = 0; w < code.size(); ++w) {
    const int wt = static_cast<int>((code.words().row(w).array() != 0).count());
    if (wt > 0) d = std::min(d, wt);
  }
  if (d != n / q * (q - 1)) throw std::logic_error("reed_muller_1: unexpected minimum distance " + std::to_string(d));
  return code;
}

std::int64_t schmidt_radius(std::int64_t q, int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("schmidt_radius: m must be even");
  std::int64_t qm1 = 1, qh = 1;
  for (int i = 0; i < m - 1; ++i) qm1 *= q;
  for (int i = 0; i < m / 2 - 1; ++i) qh *= q;
  return qm1 * (q - 1) - qh;
}

}  // namespace butson
