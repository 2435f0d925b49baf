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

#include "butson/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace butson::numtheory {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime_divisors: n must be non-zero");
  n = n < 0 ? -n : n;
  std::vector<std::int64_t> primes;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be non-zero");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  for (int v = valuation(n, p); v > 0; --v) r *= p;
  return r;
}

std::int64_t multiplicative_order(std::int64_t base, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  std::int64_t b = ((base % m) + m) % m;
  std::int64_t x = b;
  for (std::int64_t f = 1; f <= m; ++f) {
    if (x == 1) return f;
    x = x * b % m;
  }
  throw std::invalid_argument("multiplicative_order: base is not a unit modulo m");
}

bool is_self_conjugate_prime(std::int64_t p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("is_self_conjugate_prime: k must be positive");
  if (!is_prime(p)) throw std::invalid_argument("is_self_conjugate_prime: p must be prime");
  const std::int64_t m = k / p_part(k, p);
  if (m <= 2) return true;
  std::int64_t x = 1;
  const std::int64_t f = multiplicative_order(p, m);
  for (std::int64_t j = 0; j < f; ++j) {
    if (x == m - 1) return true;
    x = x * (p % m) % m;
  }
  return false;
}

bool is_self_conjugate(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("is_self_conjugate: n must be positive");
  const auto primes = prime_divisors(n);
  return std::all_of(primes.begin(), primes.end(), [k](std::int64_t p) { return is_self_conjugate_prime(p, k); });
}

FactorizationProfile splitting_profile(std::int64_t p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("splitting_profile: k must be positive");
  if (!is_prime(p)) throw std::invalid_argument("splitting_profile: p must be prime");
  const std::int64_t kp = p_part(k, p);
  const std::int64_t m = k / kp;
  FactorizationProfile prof;
  prof.p = p;
  prof.k = k;
  prof.f = multiplicative_order(p, m);
  prof.g = euler_phi(m) / prof.f;
  prof.ramification_exponent = euler_phi(kp);
  return prof;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

bool entry_root_obstruction(std::int64_t n, int k) {
  if (k == 3) return n % 9 == 0 && is_square(n / 9);
  if (k == 4) return n % 4 == 0 && is_square(n / 4);
  throw std::invalid_argument("entry_root_obstruction: k must be 3 or 4");
}

bool ObstructionReport::any_violated() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.violated; });
}

ObstructionReport bent_obstructions(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 2) throw std::invalid_argument("bent_obstructions: n and k must be >= 2");
  ObstructionReport report{n, k, {}};
  for (std::int64_t p : prime_divisors(n)) {
    Verdict v;
    v.rule = "self_conjugate_square";
    v.prime = p;
    const std::int64_t kp = p_part(k, p);
    const int e = valuation(n, p);
    if (kp != 1) {
      v.witness = "k_p = " + std::to_string(kp) + " != 1";
    } else if (!is_self_conjugate_prime(p, k)) {
      v.witness = std::to_string(p) + " not self-conjugate mod " + std::to_string(k);
    } else {
      v.applicable = true;
      v.violated = e % 2 != 0;
      v.witness = "n_p = " + std::to_string(p) + "^" + std::to_string(e);
    }
    report.verdicts.push_back(v);
    if (p == 2 && k % 4 == 2) {
      // zeta_k and zeta_{k/2} generate the same field, so 2 is unramified here.
      Verdict two;
      two.rule = "two_part_square";
      two.prime = 2;
      if (is_self_conjugate_prime(2, k)) {
        two.applicable = true;
        two.violated = e % 2 != 0;
        two.witness = "n_2 = 2^" + std::to_string(e);
      } else {
        two.witness = "2 not self-conjugate mod " + std::to_string(k);
      }
      report.verdicts.push_back(two);
    }
  }
  return report;
}

bool circulant_real_obstruction(std::int64_t n) {
  if (n < 4 || n % 4 != 0) return false;
  const std::int64_t q = n / 4;
  if (!is_square(q)) return false;
  const std::int64_t p = isqrt(q);
  return is_prime(p) && p % 8 == 3;
}

std::optional<std::int64_t> dual_entry_ambient_phase(std::int64_t n, std::int64_t k) {
  if (!is_self_conjugate(n, k)) return std::nullopt;
  return k % 2 == 0 ? 2 * k : 4 * k;
}

}  // namespace butson::numtheory
