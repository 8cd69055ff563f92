#include "lefper/numtheory.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace lefper {
namespace {

using testing::naive_divisors;
using testing::naive_mobius;
using testing::naive_q;

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(7), -1);
  EXPECT_EQ(mobius(6), 1);
}

TEST(Mobius, RejectsZero) {
  try {
    mobius(0);
    FAIL() << "expected DomainViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainViolation);
  }
}

TEST(Mobius, MatchesFactorizationCount) {
  for (std::uint64_t m = 1; m <= 2000; ++m) ASSERT_EQ(mobius(m), naive_mobius(m)) << m;
}

TEST(Mobius, MultiplicativeOnCoprimePairs) {
  for (std::uint64_t m = 1; m <= 100; ++m)
    for (std::uint64_t n = 1; n <= 100; ++n)
      if (std::gcd(m, n) == 1) { ASSERT_EQ(mobius(m * n), mobius(m) * mobius(n)) << m << "," << n; }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(7), (std::vector<std::uint64_t>{1, 7}));
  EXPECT_EQ(divisors(36), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_THROW(divisors(0), Error);
}

TEST(Divisors, MatchesExhaustiveScan) {
  for (std::uint64_t m = 1; m <= 1000; ++m) ASSERT_EQ(divisors(m), naive_divisors(m)) << m;
}

TEST(MobiusDivisorSum, Examples) {
  EXPECT_EQ(mobius_divisor_sum(1), 1);
  EXPECT_EQ(mobius_divisor_sum(6), 0);
  // Brute force over the twelve divisors of 60.
  int brute = 0;
  for (auto r : naive_divisors(60)) brute += naive_mobius(r);
  ASSERT_EQ(brute, 0);
  EXPECT_EQ(mobius_divisor_sum(60), brute);
  EXPECT_THROW(mobius_divisor_sum(0), Error);
}

TEST(MobiusDivisorSum, IsIndicatorOfOne) {
  for (std::uint64_t m = 1; m <= 10000; ++m) ASSERT_EQ(mobius_divisor_sum(m), m == 1 ? 1 : 0) << m;
}

TEST(QPoly, Examples) {
  EXPECT_EQ(q_poly(1, 6), 0);
  // Frozen from the naive divisor sum: 2^2 - 2 and 2^4 - 2^2.
  ASSERT_EQ(naive_q(2, 2), 2);
  ASSERT_EQ(naive_q(2, 4), 12);
  EXPECT_EQ(q_poly(2, 2), 2);
  EXPECT_EQ(q_poly(2, 4), 12);
  EXPECT_EQ(q_poly(5, 1), 5);
}

TEST(QPoly, AtOneIsIndicator) {
  for (std::uint64_t m = 1; m <= 200; ++m) ASSERT_EQ(q_poly(1, m), m == 1 ? 1 : 0) << m;
}

TEST(QPoly, MatchesNaiveSum) {
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::uint64_t m = 1; m <= 40; ++m) ASSERT_EQ(q_poly(a, m), naive_q(a, m)) << a << "," << m;
}

TEST(QPoly, InversionRecoversPowers) {
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::uint64_t m = 1; m <= 100; ++m) {
      BigInt total = 0;
      for (auto r : divisors(m)) total += q_poly(a, r);
      ASSERT_EQ(total, testing::naive_pow(a, m)) << a << "," << m;
    }
}

TEST(QPoly, ExceedsFixedWidth) {
  const BigInt q = q_poly(3, 200);
  EXPECT_GT(q, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(q, naive_q(3, 200));
}

TEST(QGrowth, Examples) {
  EXPECT_TRUE(verify_q_growth({2, Rational(1, 2), 3, 200}));
  EXPECT_TRUE(verify_q_growth({3, Rational(1, 2), 3, 200}));
  // Q_2(2) = 2 < 1 * 2^2.
  EXPECT_FALSE(verify_q_growth({2, Rational(1), 1, 10}));
}

TEST(QGrowth, RejectsInvalidConfig) {
  EXPECT_THROW(verify_q_growth({1, Rational(1, 2), 3, 10}), Error);
  EXPECT_THROW(verify_q_growth({2, Rational(3, 2), 3, 10}), Error);
  EXPECT_THROW(verify_q_growth({2, Rational(0), 3, 10}), Error);
  EXPECT_THROW(verify_q_growth({2, Rational(1, 2), 10, 10}), Error);
}

TEST(QGrowth, AgreesWithDirectComparison) {
  for (std::int64_t a : {-3, -2, 2, 3}) {
    bool expected = true;
    for (std::uint64_t m = 4; m <= 60; ++m) {
      const BigInt q = boost::multiprecision::abs(naive_q(a, m));
      if (4 * q < 3 * boost::multiprecision::abs(testing::naive_pow(a, m))) expected = false;
    }
    EXPECT_EQ(verify_q_growth({a, Rational(3, 4), 3, 60}), expected) << a;
  }
}

}  // namespace
}  // namespace lefper
