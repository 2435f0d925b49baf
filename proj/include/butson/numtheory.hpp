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

#ifndef BUTSON_NUMTHEORY_HPP
#define BUTSON_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Integer-level predicates about splitting of rational primes in Z[zeta_k].
// Primality and factorisation use trial division; inputs are expected to be
// below 2^32.
namespace butson::numtheory {

bool is_prime(std::int64_t n);
/// Distinct prime divisors in increasing order; |n| >= 1.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Exponent of p in n.
int valuation(std::int64_t n, std::int64_t p);
/// Largest power of p dividing n (n != 0).
std::int64_t p_part(std::int64_t n, std::int64_t p);
/// Least f >= 1 with base^f == 1 mod m; requires gcd(base, m) = 1.
std::int64_t multiplicative_order(std::int64_t base, std::int64_t m);

/// Some power p^j is -1 mod k/k_p. Vacuously true when k/k_p <= 2.
bool is_self_conjugate_prime(std::int64_t p, std::int64_t k);
/// Every prime divisor of n is self-conjugate modulo k.
bool is_self_conjugate(std::int64_t n, std::int64_t k);

struct FactorizationProfile {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t f = 1;  // residue degree
  std::int64_t g = 1;  // number of primes above p
  std::int64_t ramification_exponent = 1;  // phi(k_p)

  bool ramified() const { return ramification_exponent > 1; }
};

FactorizationProfile splitting_profile(std::int64_t p, std::int64_t k);

/// For k = 3: n = 9m^2; for k = 4: n = 4m^2. True means the necessary
/// condition for an entry of Hx to be a k-th root of unity holds.
bool entry_root_obstruction(std::int64_t n, int k);

struct Verdict {
  std::string rule;
  bool applicable = false;
  bool violated = false;
  std::int64_t prime = 0;
  std::string witness;
};

struct ObstructionReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<Verdict> verdicts;

  bool any_violated() const;
};

/// Rule "self_conjugate_square": for each prime p | n with k_p = 1 and p
/// self-conjugate mod k, the exponent of p in n must be even for an H-bent
/// vector to exist. When k = 2 mod 4 the prime 2 gets an extra verdict
/// "two_part_square": there k/2 is odd and 2 is unramified after all.
ObstructionReport bent_obstructions(std::int64_t n, std::int64_t k);

/// n = 4p^2 with p prime, p = 3 mod 8: no real circulant Hadamard matrix.
bool circulant_real_obstruction(std::int64_t n);

/// 2k (k even) or 4k (k odd) when n is self-conjugate mod k; empty otherwise.
std::optional<std::int64_t> dual_entry_ambient_phase(std::int64_t n, std::int64_t k);

std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);

}  // namespace butson::numtheory

#endif  // BUTSON_NUMTHEORY_HPP
