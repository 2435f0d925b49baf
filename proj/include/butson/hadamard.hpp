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

#ifndef BUTSON_HADAMARD_HPP
#define BUTSON_HADAMARD_HPP

#include "butson/cyc_matrix.hpp"
#include "butson/cyclotomic.hpp"
#include "butson/log_matrix.hpp"

#include <optional>
#include <vector>

namespace butson {

/// Finite abelian group C_{n1} x ... x C_{nr}. Elements and characters are
/// indexed lexicographically, first factor most significant.
class AbelianGroupSpec {
 public:
  explicit AbelianGroupSpec(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const;
  int exponent() const;
  /// Digits of element `index` in the lexicographic ordering.
  std::vector<int> digits(int index) const;

 private:
  std::vector<int> factors_;
};

/// Character table F(G): rows are characters, columns are elements, phase is
/// the exponent of G.
LogMatrix character_table(const AbelianGroupSpec& g);
/// F(C_n).
LogMatrix fourier(int n);
/// F(C_2^m), the Sylvester matrix of order 2^m.
LogMatrix sylvester(int m);

/// Kronecker product in log form. Mixed phases are lifted to their lcm.
LogMatrix kronecker(const LogMatrix& a, const LogMatrix& b);

/// Exact test that all rows are pairwise orthogonal. `workers` = 0 picks
/// the hardware concurrency.
bool verify_hadamard(const LogMatrix& m, unsigned workers = 1);

/// Zero first row and column: subtract row 0 from every row, then column 0
/// from every column.
LogMatrix dephase(const LogMatrix& m);

/// Entry (i, j) = x[(i - j) mod n].
LogMatrix circulant_from_row(const LogVector& x);

/// If H K^* = z L with z z^* = n and L a Butson matrix of the same phase,
/// returns z (the (0,0) entry of H K^*).
std::optional<CycInt> is_unbiased(const LogMatrix& h, const LogMatrix& k);

/// Least t <= max_t with M^t = n^{t/2} I. Odd t is only tested when n is a
/// perfect square. Throws OverflowError if coefficients leave 128 bits.
std::optional<int> unitary_order(const LogMatrix& m, int max_t);

}  // namespace butson

#endif  // BUTSON_HADAMARD_HPP
