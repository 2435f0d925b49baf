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
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace butson {
namespace {

CycInt random_cyc(std::mt19937_64& rng, int k, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Coeff> c(static_cast<std::size_t>(k));
  for (auto& v : c) v = d(rng);
  return CycInt(k, c);
}

using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).coefficients, (Poly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4).coefficients, (Poly{1, 0, 1}));
  EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXkMinusOne) {
  for (int k = 1; k <= 30; ++k) {
    Poly prod{1};
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d).coefficients);
    Poly expect(static_cast<std::size_t>(k) + 1, 0);
    expect[0] = -1;
    expect[static_cast<std::size_t>(k)] = 1;
    EXPECT_EQ(prod, expect) << "k=" << k;
  }
}

TEST(CyclotomicPolynomial, MonicWithTotientDegree) {
  const int phi12 = 4;
  const auto p = cyclotomic_polynomial(12);
  EXPECT_EQ(p.degree(), phi12);
  EXPECT_EQ(p.coefficients.back(), 1);
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(canonical_reduce(CycInt(3, {1, 1, 1})).is_zero());
  EXPECT_EQ(canonical_reduce(CycInt(4, {0, 0, 1, 0})).coeffs()[0], -1);
  const CycInt z85 = CycInt::root(8, 5);
  const CycInt expect = CycInt::root(8, 1, -1);
  EXPECT_EQ(z85, expect);
  EXPECT_NEAR(std::abs(oracle::eval(z85) - oracle::eval(expect)), 0.0, 1e-12);
  const CycInt r = canonical_reduce(z85);
  const CycInt e = canonical_reduce(expect);
  for (int j = 0; j < 8; ++j) EXPECT_TRUE(r[j] == e[j]) << "j=" << j;
  EXPECT_TRUE(r[1] == -1);
}

TEST(Reduce, ZeroBeyondTotient) {
  std::mt19937_64 rng(7);
  for (int k : {5, 6, 9, 12}) {
    const CycInt r = canonical_reduce(random_cyc(rng, k));
    const int phi = cyclotomic_polynomial(k).degree();
    for (int j = phi; j < k; ++j) EXPECT_EQ(r[j], 0);
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(mul(CycInt::root(8, 3), CycInt::root(8, 7)), CycInt::root(8, 2));
  EXPECT_THROW(add(CycInt(3), CycInt(4)), PhaseMismatch);
  EXPECT_THROW(mul(CycInt(3), CycInt(4)), PhaseMismatch);
}

TEST(Norm, Examples) {
  for (int t = 0; t < 7; ++t) EXPECT_EQ(norm_sq(CycInt::root(7, t)).as_integer(), Coeff{1});
  EXPECT_EQ(norm_sq(CycInt(3, {1, 1, 0})).as_integer(), Coeff{1});
  EXPECT_EQ(norm_sq(CycInt(3, {2, 2, 0})).as_integer(), Coeff{4});
  EXPECT_NEAR(std::norm(oracle::eval(CycInt(3, {2, 2, 0}))), 4.0, 1e-12);
}

TEST(RootOfUnity, Examples) {
  // for even k the sign is not unique (-zeta_6^5 = zeta_6^2); +1 is preferred
  const auto r6 = is_root_of_unity(CycInt::root(6, 5, -1));
  ASSERT_TRUE(r6.has_value());
  EXPECT_EQ(CycInt::root(6, r6->exponent, r6->sign), CycInt::root(6, 5, -1));
  EXPECT_EQ(*r6, (RootOfUnity{1, 2}));
  EXPECT_EQ(is_root_of_unity(CycInt(3, {1, 1, 0})), (RootOfUnity{-1, 2}));
  EXPECT_NEAR(std::abs(oracle::eval(CycInt(3, {1, 1, 0})) + oracle::zeta(3, 2)), 0.0, 1e-12);
  EXPECT_FALSE(is_root_of_unity(CycInt::constant(5, 2)).has_value());
}

TEST(Embed, Examples) {
  EXPECT_EQ(embed(CycInt::root(3, 1), 6), CycInt::root(6, 2));
  EXPECT_THROW(embed(CycInt::root(3, 1), 8), std::invalid_argument);
  const auto r = is_root_of_unity(embed(CycInt(3, {1, 1, 0}), 12));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(CycInt::root(12, r->exponent, r->sign), CycInt::root(12, 8, -1));
}

TEST(Overflow, CheckedArithmeticThrows) {
  const Coeff big = Coeff{1} << 120;
  EXPECT_THROW(checked_mul(big, big), OverflowError);
  const Coeff max = ~(Coeff{1} << 127);
  EXPECT_THROW(checked_add(max, 1), OverflowError);
  EXPECT_THROW(checked_sub(-max, 2), OverflowError);
  EXPECT_EQ(checked_add(max, -1), max - 1);
}

TEST(FullVanishingSum, PrimePhases) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    EXPECT_TRUE(canonical_reduce(CycInt(p, std::vector<Coeff>(static_cast<std::size_t>(p), 1))).is_zero());
  }
}

class RingLaws : public ::testing::TestWithParam<int> {};

TEST_P(RingLaws, ThousandRandomCases) {
  const int k = GetParam();
  std::mt19937_64 rng(1000 + static_cast<unsigned>(k));
  for (int trial = 0; trial < 1000; ++trial) {
    const CycInt a = random_cyc(rng, k), b = random_cyc(rng, k), c = random_cyc(rng, k);
    ASSERT_EQ(canonical_reduce(add(a, b)), add(canonical_reduce(a), canonical_reduce(b)));
    ASSERT_EQ(canonical_reduce(mul(a, b)), canonical_reduce(mul(canonical_reduce(a), canonical_reduce(b))));
    ASSERT_EQ(mul(a, b), mul(b, a));
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    ASSERT_EQ(conj(conj(a)), a);
    ASSERT_EQ(add(a, CycInt(k)), a);
    ASSERT_EQ(embed(norm_sq(a), 2 * k), norm_sq(embed(a, 2 * k)));

    const CycInt n = norm_sq(a);
    ASSERT_NEAR(std::abs(oracle::eval(n) - std::norm(oracle::eval(a))), 0.0, 1e-9);
    ASSERT_NEAR(std::abs(oracle::eval(mul(a, b)) - oracle::eval(a) * oracle::eval(b)), 0.0, 1e-9);
    ASSERT_NEAR(std::abs(oracle::eval(canonical_reduce(a)) - oracle::eval(a)), 0.0, 1e-9);
    if (const auto v = n.as_integer()) {
      ASSERT_GE(*v, 0);
    }
    // semantic equality agrees with numerical equality
    const bool same = (a == b);
    ASSERT_EQ(same, std::abs(oracle::eval(a) - oracle::eval(b)) < 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Phases, RingLaws, ::testing::Values(2, 3, 4, 5, 6, 8, 9, 12, 13));

TEST(NormSq, IntegerForRootsAndSums) {
  // (1 + zeta_8)(1 + zeta_8^7) = 2 + sqrt 2 is not rational
  EXPECT_FALSE(norm_sq(CycInt(8, {1, 1, 0, 0, 0, 0, 0, 0})).as_integer().has_value());
  // 1 + i has norm 2
  EXPECT_EQ(norm_sq(CycInt(4, {1, 1, 0, 0})).as_integer(), Coeff{2});
}

}  // namespace
}  // namespace butson
