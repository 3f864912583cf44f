#include "frieze/numeric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace frieze;

TEST(Numeric, RationalCanonicalForm) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_fraction_string(make_rational(4, 2)), "2/1");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Numeric, Pow2Floor) {
  EXPECT_EQ(pow2_floor(Rational(464)), pow2(464));
  EXPECT_EQ(pow2_floor(make_rational(1, 2)), 1);    // floor(sqrt 2)
  EXPECT_EQ(pow2_floor(make_rational(5, 3)), 3);    // 2^(5/3) = 3.17
  EXPECT_EQ(pow2_floor(make_rational(10, 3)), 10);  // 2^(10/3) = 10.08
  EXPECT_EQ(pow2_floor(Rational(0)), 1);
}

TEST(Numeric, LeqPow2AgreesWithFloor) {
  for (int num = 0; num <= 40; ++num) {
    for (int den = 1; den <= 6; ++den) {
      const Rational x = make_rational(num, den);
      const BigInt f = pow2_floor(x);
      EXPECT_TRUE(leq_pow2(f, x)) << num << "/" << den;
      EXPECT_FALSE(leq_pow2(f + 1, x)) << num << "/" << den;
    }
  }
}

TEST(Numeric, Roots) {
  EXPECT_EQ(exact_root(BigInt(1679616), 8), BigInt(6));
  EXPECT_FALSE(exact_root(BigInt(1679617), 8));
  EXPECT_EQ(floor_root(BigInt(1679617), 8), 6);
  EXPECT_EQ(floor_root(BigInt(0), 3), 0);
}

TEST(Numeric, Log2OfHugeValues) {
  EXPECT_DOUBLE_EQ(log2(pow2(158720)), 158720.0);
  EXPECT_NEAR(log2(BigInt(1188)), std::log2(1188.0), 1e-12);
  EXPECT_NEAR(log2(make_rational(151875, 16384)), std::log2(151875.0 / 16384.0), 1e-12);
}

TEST(Numeric, FactorizeSmall) {
  const auto f = factorize(BigInt(1188));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].first, 2);
  EXPECT_EQ(f[0].second, 2u);
  EXPECT_EQ(f[1].first, 3);
  EXPECT_EQ(f[1].second, 3u);
  EXPECT_EQ(f[2].first, 11);
  EXPECT_EQ(f[2].second, 1u);
  EXPECT_TRUE(factorize(BigInt(1)).empty());
}

TEST(Numeric, FactorizeLargeSemiprime) {
  const BigInt p("1000000007"), q("998244353");
  const auto f = factorize(p * q * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, q);
  EXPECT_EQ(f[0].second, 2u);
  EXPECT_EQ(f[1].first, p);
}

TEST(Numeric, FactorizeRoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BigInt v = 1;
    const int factors = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < factors; ++i) v *= BigInt(static_cast<unsigned long>(rng() % 100000 + 1));
    BigInt back = 1;
    BigInt last = 1;
    for (const auto& [prime, mult] : factorize(v)) {
      EXPECT_GT(prime, last);
      EXPECT_TRUE(mpz_probab_prime_p(prime.get_mpz_t(), 30));
      back *= pow_ui(prime, mult);
      last = prime;
    }
    EXPECT_EQ(back, v);
  }
}

TEST(Numeric, DivisorsMatchTrialDivision) {
  for (unsigned long v = 1; v <= 500; ++v) {
    std::vector<BigInt> expected;
    for (unsigned long d = 1; d <= v; ++d) {
      if (v % d == 0) expected.emplace_back(d);
    }
    EXPECT_EQ(divisors(BigInt(v)), expected) << v;
    std::vector<BigInt> small;
    for (const auto& d : expected) {
      if (d <= 12) small.push_back(d);
    }
    EXPECT_EQ(divisors_up_to(BigInt(v), BigInt(12)), small) << v;
  }
}
