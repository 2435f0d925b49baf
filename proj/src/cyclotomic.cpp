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

#include "butson/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace butson {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow in addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow in subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow in multiplication");
  return r;
}

std::string to_string(Coeff value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Work with negative magnitudes so the minimum value does not overflow.
  Coeff v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by monic b; the remainder must vanish.
Poly divide_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = rem[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) throw std::logic_error("inexact cyclotomic division");
  }
  return quot;
}

std::mutex g_poly_mutex;
std::map<int, Poly> g_poly_cache;

Poly cyclotomic_coefficients(int k) {
  {
    std::lock_guard lock(g_poly_mutex);
    if (auto it = g_poly_cache.find(k); it != g_poly_cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(k)] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d == 0) p = divide_exact(p, cyclotomic_coefficients(d));
  }
  std::lock_guard lock(g_poly_mutex);
  g_poly_cache.emplace(k, p);
  return p;
}

void require_same_phase(const CycInt& a, const CycInt& b) {
  if (a.phase() != b.phase()) {
    throw PhaseMismatch("cyclotomic phase mismatch: " + std::to_string(a.phase()) + " vs " +
                        std::to_string(b.phase()));
  }
}

int mod(long long a, int k) {
  long long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

}  // namespace

CyclotomicPolynomial cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  return {k, cyclotomic_coefficients(k)};
}

CyclotomicReducer::CyclotomicReducer(int k) : phase_(k), poly_(cyclotomic_polynomial(k)) {
  totient_ = poly_.degree();
  const auto phi = static_cast<std::size_t>(totient_);
  powers_.assign(static_cast<std::size_t>(k) * phi, 0);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < k; ++j) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::ptrdiff_t>(j * phi));
    // multiply by x, then fold x^phi = -sum poly[i] x^i
    std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * poly_.coefficients[i];
  }
}

std::span<const std::int64_t> CyclotomicReducer::power(int j) const {
  const auto phi = static_cast<std::size_t>(totient_);
  return {powers_.data() + static_cast<std::size_t>(mod(j, phase_)) * phi, phi};
}

void CyclotomicReducer::reduce(std::span<const Coeff> c, std::span<Coeff> out) const {
  std::fill(out.begin(), out.end(), Coeff{0});
  for (int j = 0; j < phase_; ++j) {
    const Coeff cj = c[static_cast<std::size_t>(j)];
    if (cj == 0) continue;
    auto pw = power(j);
    for (int i = 0; i < totient_; ++i) {
      if (pw[static_cast<std::size_t>(i)] != 0) {
        out[static_cast<std::size_t>(i)] =
            checked_add(out[static_cast<std::size_t>(i)], checked_mul(cj, pw[static_cast<std::size_t>(i)]));
      }
    }
  }
}

void CyclotomicReducer::reduce(std::span<const std::int64_t> c, std::span<std::int64_t> out) const {
  std::fill(out.begin(), out.end(), 0);
  for (int j = 0; j < phase_; ++j) {
    const std::int64_t cj = c[static_cast<std::size_t>(j)];
    if (cj == 0) continue;
    auto pw = power(j);
    for (int i = 0; i < totient_; ++i) out[static_cast<std::size_t>(i)] += cj * pw[static_cast<std::size_t>(i)];
  }
}

bool CyclotomicReducer::vanishes(std::span<const std::int64_t> c) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(totient_));
  reduce(c, out);
  return std::all_of(out.begin(), out.end(), [](std::int64_t v) { return v == 0; });
}

bool CyclotomicReducer::has_norm(std::span<const std::int64_t> c, std::int64_t n) const {
  std::vector<std::int64_t> auto_corr(static_cast<std::size_t>(phase_), 0);
  for (int a = 0; a < phase_; ++a) {
    const std::int64_t ca = c[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (int b = 0; b < phase_; ++b) {
      auto_corr[static_cast<std::size_t>(mod(a - b, phase_))] += ca * c[static_cast<std::size_t>(b)];
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(totient_));
  reduce(auto_corr, out);
  if (out[0] != n) return false;
  return std::all_of(out.begin() + 1, out.end(), [](std::int64_t v) { return v == 0; });
}

std::shared_ptr<const CyclotomicReducer> reducer_for(int k) {
  static std::mutex m;
  static std::map<int, std::shared_ptr<const CyclotomicReducer>> cache;
  if (k < 1) throw std::invalid_argument("phase must be positive");
  std::lock_guard lock(m);
  auto& slot = cache[k];
  if (!slot) slot = std::make_shared<const CyclotomicReducer>(k);
  return slot;
}

// --- CycInt ---------------------------------------------------------------

CycInt::CycInt(int phase) {
  if (phase < 1) throw std::invalid_argument("CycInt: phase must be positive");
  coeffs_.assign(static_cast<std::size_t>(phase), 0);
}

CycInt::CycInt(int phase, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (phase < 1) throw std::invalid_argument("CycInt: phase must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(phase)) {
    throw std::invalid_argument("CycInt: expected " + std::to_string(phase) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
}

CycInt CycInt::constant(int phase, Coeff value) {
  CycInt z(phase);
  z.coeffs_[0] = value;
  return z;
}

CycInt CycInt::root(int phase, int exponent, int sign) {
  CycInt z(phase);
  z.coeffs_[static_cast<std::size_t>(mod(exponent, phase))] = sign;
  return z;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  require_same_phase(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  require_same_phase(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_sub(coeffs_[j], other.coeffs_[j]);
  return *this;
}

CycInt operator-(const CycInt& a) {
  CycInt r(a.phase());
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) r.coeffs_[j] = checked_sub(0, a.coeffs_[j]);
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same_phase(a, b);
  const int k = a.phase();
  CycInt r(k);
  for (int i = 0; i < k; ++i) {
    const Coeff ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < k; ++j) {
      const Coeff bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      auto& slot = r.coeffs_[static_cast<std::size_t>((i + j) % k)];
      slot = checked_add(slot, checked_mul(ai, bj));
    }
  }
  return r;
}

CycInt operator*(Coeff s, const CycInt& a) {
  CycInt r(a.phase());
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) r.coeffs_[j] = checked_mul(s, a.coeffs_[j]);
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.phase() != b.phase()) return false;
  return (a - b).is_zero();
}

bool CycInt::is_zero() const {
  const CycInt r = canonical_reduce(*this);
  return std::all_of(r.coeffs_.begin(), r.coeffs_.end(), [](Coeff c) { return c == 0; });
}

std::optional<Coeff> CycInt::as_integer() const {
  const CycInt r = canonical_reduce(*this);
  if (std::any_of(r.coeffs_.begin() + 1, r.coeffs_.end(), [](Coeff c) { return c != 0; })) return std::nullopt;
  return r.coeffs_[0];
}

std::string CycInt::to_string() const {
  const CycInt r = canonical_reduce(*this);
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < phase(); ++j) {
    Coeff c = r[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    Coeff mag = neg ? -c : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << butson::to_string(mag);
    } else {
      if (mag != 1) out << butson::to_string(mag) << '*';
      out << 'z';
      if (j > 1) out << '^' << j;
    }
  }
  if (first) out << '0';
  return out.str();
}

CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt conj(const CycInt& z) {
  const int k = z.phase();
  std::vector<Coeff> c(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>((k - j) % k)] = z[j];
  return CycInt(k, std::move(c));
}

CycInt rotate(const CycInt& z, int shift) {
  const int k = z.phase();
  std::vector<Coeff> c(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(mod(j + shift, k))] = z[j];
  return CycInt(k, std::move(c));
}

CycInt canonical_reduce(const CycInt& z) {
  const int k = z.phase();
  auto red = reducer_for(k);
  std::vector<Coeff> c(static_cast<std::size_t>(k), 0);
  red->reduce(z.coeffs(), std::span<Coeff>(c.data(), static_cast<std::size_t>(red->totient())));
  return CycInt(k, std::move(c));
}

CycInt norm_sq(const CycInt& z) { return canonical_reduce(z * conj(z)); }

std::optional<RootOfUnity> is_root_of_unity(const CycInt& z) {
  const int k = z.phase();
  auto red = reducer_for(k);
  const CycInt r = canonical_reduce(z);
  const auto phi = red->totient();
  for (int sign : {1, -1}) {
    for (int t = 0; t < k; ++t) {
      auto pw = red->power(t);
      bool match = true;
      for (int i = 0; i < phi && match; ++i) match = r[i] == sign * pw[static_cast<std::size_t>(i)];
      if (match) return RootOfUnity{sign, t};
    }
  }
  return std::nullopt;
}

CycInt embed(const CycInt& z, int k_new) {
  const int k = z.phase();
  if (k_new < 1 || k_new % k != 0) {
    throw std::invalid_argument("embed: phase " + std::to_string(k) + " does not divide " + std::to_string(k_new));
  }
  const int step = k_new / k;
  std::vector<Coeff> c(static_cast<std::size_t>(k_new), 0);
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j * step)] = z[j];
  return CycInt(k_new, std::move(c));
}

}  // namespace butson
