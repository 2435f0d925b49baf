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

#ifndef BUTSON_BUSH_HPP
#define BUTSON_BUSH_HPP

#include "butson/bent.hpp"
#include "butson/log_matrix.hpp"

#include <vector>

namespace butson {

/// Butson matrix of order n^2 whose n x n blocks H_ij satisfy
/// J H_ij = H_ij J = delta_ij n J.
class BushMatrix {
 public:
  /// Verifies the block sums and the Hadamard property; throws
  /// std::invalid_argument if either fails.
  BushMatrix(LogMatrix base, int block_size);

  const LogMatrix& base() const { return base_; }
  int block_size() const { return block_size_; }

 private:
  LogMatrix base_;
  int block_size_;
};

/// Exact check of the Bush block-sum condition.
bool has_bush_block_sums(const LogMatrix& m, int block_size);

/// R_a = r_a^* r_a for the a-th row r_a of F(C_p): entry (i,j) = a (j - i).
LogMatrix projector(int p, int a);

/// Checks R_a^2 = p R_a, R_a^* = R_a, R_a^T = R_{p-a}, R_a R_b = 0 (a != b)
/// and sum_a R_a^2 = p^2 I, all exactly. p must be an odd prime <= 13.
bool verify_projector_algebra(int p);

/// Symmetric Bush-type BH(p^2, p) with block (i,j) = R_{(j-i)a mod p}.
BushMatrix bush_circulant(int p, int a);

/// M M = sqrt(order) conj(M) exactly. False when the order is not a square.
bool conjugate_self_bent_check(const LogMatrix& m);

struct BushModification {
  LogMatrix matrix;              // diagonal blocks scaled by zeta^{u_i}
  LogVector self_dual;           // block i constant zeta^{u_i (k+1)/2}
  LogVector conjugate_self_dual; // block i constant zeta^{u_i (k-1)/2}
  bool hadamard = false;
  BentCertificate self_dual_certificate;
  BentCertificate conjugate_certificate;

  bool self_dual_claim_holds() const { return self_dual_certificate.self_dual; }
  bool conjugate_claim_holds() const { return conjugate_certificate.conjugate_self_dual; }
};

/// Scales diagonal block i by zeta_k^{u_i} and certifies the two predicted
/// block-constant vectors. Requires odd k and one residue per block row.
BushModification bush_modify(const BushMatrix& h, const std::vector<int>& u);

/// The 2^{2m} vectors (u_1 1, ..., u_{2m} 1) with u_i in {zeta_4, -zeta_4}
/// for a Bush-type BH(4m^2, 4). Each is checked self-dual for H and
/// conjugate self-dual for -H; a vector failing either check throws
/// std::logic_error.
std::vector<LogVector> bush_quaternary_bents(const BushMatrix& h);

/// Bush-type real Hadamard matrix of order 4 in phase 4: diagonal blocks J,
/// off-diagonal blocks [[1,-1],[-1,1]].
BushMatrix bush_order4_quaternary();

}  // namespace butson

#endif  // BUTSON_BUSH_HPP
