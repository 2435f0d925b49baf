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

#ifndef BUTSON_CODES_HPP
#define BUTSON_CODES_HPP

#include "butson/log_matrix.hpp"

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace butson {

using Rational = boost::rational<std::int64_t>;
using CodeWords = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::string to_string(const Rational& r);

/// A set of words of Z_k^n, one per row. Duplicate rows are dropped on
/// construction (first occurrence kept) and counted.
class ZkCode {
 public:
  ZkCode(int length, int modulus, const CodeWords& words);

  int length() const { return length_; }
  int modulus() const { return modulus_; }
  int size() const { return static_cast<int>(words_.rows()); }
  const CodeWords& words() const { return words_; }
  int duplicates_removed() const { return duplicates_removed_; }

 private:
  int length_;
  int modulus_;
  CodeWords words_;
  int duplicates_removed_ = 0;
};

template <typename A, typename B>
int hamming_distance(const Eigen::MatrixBase<A>& v, const Eigen::MatrixBase<B>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  return static_cast<int>((v.array() != w.array()).count());
}

struct ButsonCodes {
  ZkCode rows;        // R_H
  ZkCode translates;  // C_H = union of R_H + alpha 1
};

ButsonCodes code_from_matrix(const LogMatrix& h);

/// Pairwise minimum distance; needs at least two words.
int min_distance(const ZkCode& c);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoveringOptions {
  /// Maximum ambient vectors for the exhaustive scan.
  std::uint64_t budget = std::uint64_t{1} << 30;
  /// When set, sample this many random ambient vectors instead; the result
  /// is then only a lower bound.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct CoveringResult {
  int radius = 0;   // exact radius, or a lower bound when !exact
  bool exact = false;
  std::uint64_t examined = 0;
  std::vector<int> witness;  // an ambient vector at distance `radius`
};

/// max over x in Z_k^n of min over codewords of d(x, c). Throws
/// BudgetExceeded (exhaustive mode) when k^n > budget.
CoveringResult covering_radius(const ZkCode& c, const CoveringOptions& options = {});

/// (q-1)/q n - (1/q) sqrt(n), kept exact as rational + coefficient * sqrt.
struct SurdBound {
  Rational rational_part;
  Rational surd_coefficient;
  std::int64_t radicand = 0;
  std::int64_t floor = 0;
  std::int64_t ceil = 0;

  std::string to_string() const;
};

SurdBound leducq_upper_bound(std::int64_t n, std::int64_t q);

/// Real part of the phase-3 inner product <v, w> and the distance
/// 2/3 (n - Re<v,w>) it predicts.
Rational real_inner_product_phase3(const LogVector& v, const LogVector& w);
Rational lemma_distance_phase3(const LogVector& v, const LogVector& w);

struct LowerBoundReport {
  std::int64_t bound = 0;  // ceil(2/3 (n - sqrt n))
  std::vector<Rational> distances;  // L(x) to each word of C_H
  int min_distance = 0;
  bool distances_match_hamming = true;
};

/// Requires phase 3 and an H-bent x; throws std::invalid_argument otherwise.
LowerBoundReport bent_lower_bound(const LogMatrix& h, const LogVector& x);

bool is_self_complementary(const ZkCode& c);
/// Every ordered symbol pair appears equally often in every coordinate pair.
bool has_strength_2(const ZkCode& c);

/// R_q(1, m): all a_0 + sum a_i x_i over lexicographic Z_q^m. Throws
/// std::logic_error if the parameters (q^m, q^{m+1}, (q-1) q^{m-1}) fail.
ZkCode reed_muller_1(int q, int m, std::uint64_t budget = std::uint64_t{1} << 22);

/// q^{m-1}(q-1) - q^{m/2-1} for even m.
std::int64_t schmidt_radius(std::int64_t q, int m);

}  // namespace butson

#endif  // BUTSON_CODES_HPP
