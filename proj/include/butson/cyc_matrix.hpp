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

#ifndef BUTSON_CYC_MATRIX_HPP
#define BUTSON_CYC_MATRIX_HPP

#include "butson/cyclotomic.hpp"
#include "butson/log_matrix.hpp"

#include <span>
#include <vector>

namespace butson {

/// Dense matrix over Z[zeta_k]; each entry is a length-k group-ring
/// coefficient vector. Used for exact products of Butson matrices.
class CycMatrix {
 public:
  CycMatrix(int rows, int cols, int phase);

  static CycMatrix from_log(const LogMatrix& m);
  static CycMatrix identity(int n, int phase, Coeff scale = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int phase() const { return phase_; }

  std::span<const Coeff> entry(int i, int j) const;
  std::span<Coeff> entry(int i, int j);
  CycInt at(int i, int j) const;

  CycMatrix& operator+=(const CycMatrix& other);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator*(Coeff s, const CycMatrix& a);

  /// Semantic entrywise equality.
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

 private:
  int rows_;
  int cols_;
  int phase_;
  std::vector<Coeff> data_;
};

/// Exact product of two Butson matrices: entry (i,j) counts exponents
/// a_il + b_lj mod k. Phases must agree.
CycMatrix product(const LogMatrix& a, const LogMatrix& b);
CycMatrix product(const CycMatrix& a, const LogMatrix& b);

/// Every entry canonically reduced mod Phi_k.
CycMatrix canonical_reduce(const CycMatrix& m);
CycMatrix conj(const CycMatrix& m);

/// True iff m equals scale * I exactly.
bool is_scalar_identity(const CycMatrix& m, Coeff scale);
bool is_zero(const CycMatrix& m);

}  // namespace butson

#endif  // BUTSON_CYC_MATRIX_HPP
