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

#ifndef BUTSON_CYCLOTOMIC_HPP
#define BUTSON_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace butson {

// Coefficient type for exact cyclotomic arithmetic. Every add/sub/mul on it
// goes through the checked helpers below and throws instead of wrapping.
using Coeff = __int128;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class PhaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

std::string to_string(Coeff value);

/// The k-th cyclotomic polynomial, coefficients stored lowest degree first.
struct CyclotomicPolynomial {
  int order = 1;
  std::vector<std::int64_t> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Exact division of x^k - 1 by the product of Phi_d over proper divisors d.
/// Throws std::invalid_argument for k < 1.
CyclotomicPolynomial cyclotomic_polynomial(int k);

/// Element of Z[zeta_k] in the group-ring basis: coeffs[j] multiplies
/// zeta_k^j, j = 0..k-1. The representation is not unique; equality and all
/// decisions go through canonical_reduce.
class CycInt {
 public:
  explicit CycInt(int phase);
  CycInt(int phase, std::vector<Coeff> coeffs);

  static CycInt constant(int phase, Coeff value);
  /// sign * zeta_k^exponent (exponent taken mod k).
  static CycInt root(int phase, int exponent, int sign = 1);

  int phase() const { return static_cast<int>(coeffs_.size()); }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  Coeff operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

  /// Semantic zero test (divisible by Phi_k).
  bool is_zero() const;
  /// If the element is a rational integer, returns it.
  std::optional<Coeff> as_integer() const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(const CycInt& a);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(Coeff s, const CycInt& a);

  /// Semantic equality in Z[zeta_k].
  friend bool operator==(const CycInt& a, const CycInt& b);

  std::string to_string() const;

 private:
  std::vector<Coeff> coeffs_;
};

CycInt add(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt conj(const CycInt& z);
/// Multiplication by zeta_k^shift, an index rotation.
CycInt rotate(const CycInt& z, int shift);

/// Unique representative: remainder mod Phi_k, zero in positions >= phi(k).
CycInt canonical_reduce(const CycInt& z);
/// z * conj(z), canonically reduced.
CycInt norm_sq(const CycInt& z);

struct RootOfUnity {
  int sign = 1;
  int exponent = 0;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// (s, t) with z == s * zeta_k^t, t in [0, k). Prefers sign +1 when both
/// forms exist (k even).
std::optional<RootOfUnity> is_root_of_unity(const CycInt& z);

/// zeta_k^j -> zeta_{k_new}^{j k_new / k}. Throws std::invalid_argument when k
/// does not divide k_new.
CycInt embed(const CycInt& z, int k_new);

/// Precomputed reduction data for one phase: Phi_k and the canonical form of
/// every zeta_k^j. Shared read-only across threads.
class CyclotomicReducer {
 public:
  explicit CyclotomicReducer(int k);

  int phase() const { return phase_; }
  int totient() const { return totient_; }
  const CyclotomicPolynomial& polynomial() const { return poly_; }

  /// Writes the phi(k) canonical coordinates of sum_j c[j] zeta^j into out.
  void reduce(std::span<const Coeff> c, std::span<Coeff> out) const;
  /// Same for small non-negative counts (hot path of searches).
  void reduce(std::span<const std::int64_t> c, std::span<std::int64_t> out) const;

  bool vanishes(std::span<const std::int64_t> c) const;
  /// True iff sum_j c[j] zeta^j has squared modulus exactly n.
  bool has_norm(std::span<const std::int64_t> c, std::int64_t n) const;

  /// Canonical coordinates of zeta^j, row j, length totient().
  std::span<const std::int64_t> power(int j) const;

 private:
  int phase_;
  int totient_;
  CyclotomicPolynomial poly_;
  std::vector<std::int64_t> powers_;
};

/// Cached per-phase reducer (thread-safe).
std::shared_ptr<const CyclotomicReducer> reducer_for(int k);

}  // namespace butson

#endif  // BUTSON_CYCLOTOMIC_HPP
