#include "lefper/lefschetz.hpp"
#include "lefper/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lefper {
namespace {

TEST(LefschetzNumber, Examples) {
  const auto d24 = make_descriptor({2, 4}, {2, 3});
  ASSERT_EQ(oracle::lefschetz_via_traces(d24, 2), 50);
  EXPECT_EQ(lefschetz_number(d24, 2), 50);

  for (std::uint64_t m = 1; m <= 20; ++m) {
    EXPECT_EQ(lefschetz_number(make_descriptor({1, 4}, {1, 7}), m), 0);
    EXPECT_EQ(lefschetz_number(make_descriptor({1, 2, 3}, {-1, -1, 5}), m), 0) << m;
  }
  EXPECT_THROW(lefschetz_number(d24, 0), Error);
}

TEST(PeriodicLefschetz, Examples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto d = testing::random_descriptor(rng, 4, 8, 3);
    EXPECT_EQ(periodic_lefschetz(d, 1), lefschetz_number(d, 1));
  }
  // L(f^2) - L(f) = 25 - 9.
  EXPECT_EQ(periodic_lefschetz(make_descriptor({2, 4}, {2, 2}), 2), 16);
  EXPECT_EQ(periodic_lefschetz(make_descriptor({2, 4}, {1, 1}), 5), 0);
}

TEST(PeriodicLefschetz, BothInversionFormsAgree) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto d = testing::random_descriptor(rng, 4, 8, 3);
    for (std::uint64_t m = 1; m <= 36; ++m) {
      BigInt alt = 0;
      for (auto r : testing::naive_divisors(m)) alt += testing::naive_mobius(m / r) * lefschetz_number(d, r);
      ASSERT_EQ(periodic_lefschetz(d, m), alt);
    }
  }
}

TEST(Profile, Examples) {
  auto p = profile(make_descriptor({2}, {1}), 4);
  EXPECT_EQ(p.lefschetz, testing::big_list({2, 2, 2, 2}));
  EXPECT_EQ(p.periodic, testing::big_list({2, 0, 0, 0}));

  p = profile(make_descriptor({1}, {-1}), 4);
  EXPECT_EQ(p.lefschetz, testing::big_list({2, 0, 2, 0}));
  EXPECT_EQ(p.periodic, testing::big_list({2, -2, 0, 0}));

  p = profile(make_descriptor({1, 2, 3}, {1, 4, -3}), 3);
  EXPECT_EQ(p.lefschetz, testing::big_list({0, 0, 0}));
  EXPECT_EQ(p.periodic, testing::big_list({0, 0, 0}));
}

TEST(Profile, HorizonCap) {
  const auto d = make_descriptor({2}, {3});
  try {
    profile(d, kDefaultHorizonCap + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HorizonTooLarge);
  }
  EXPECT_THROW(profile(d, 50, 10), Error);
  EXPECT_THROW(profile(d, 0), Error);
}

TEST(Profile, InversionRoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto d = testing::random_descriptor(rng, 4, 8, 3);
    const auto p = profile(d, 60);
    for (std::uint64_t m = 1; m <= 60; ++m) {
      BigInt total = 0;
      for (auto r : testing::naive_divisors(m)) total += periodic_lefschetz(d, r);
      ASSERT_EQ(total, lefschetz_number(d, m));
      ASSERT_EQ(p.ell(m), periodic_lefschetz(d, m));
    }
  }
}

TEST(LefschetzNumber, MatchesTraceOracle) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 150; ++i) {
    const auto d = testing::random_descriptor(rng, 4, 8, 3);
    for (std::uint64_t m = 1; m <= 20; ++m) ASSERT_EQ(lefschetz_number(d, m), oracle::lefschetz_via_traces(d, m));
  }
}

TEST(LefschetzNumber, ParityVanishingAndBoundedness) {
  for (const auto& dims : testing::all_dim_lists(4, 7)) {
    std::uint32_t patterns = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) patterns *= 3;
    for (std::uint32_t code = 0; code < patterns; ++code) {
      std::vector<std::int64_t> eigs;
      std::uint32_t c = code;
      for (std::size_t i = 0; i < dims.size(); ++i, c /= 3) eigs.push_back(static_cast<std::int64_t>(c % 3) - 1);
      const auto d = make_descriptor(dims, eigs);
      bool even_minus = false, odd_minus = false;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (eigs[i] == -1 && dims[i] % 2 == 0) even_minus = true;
        if (eigs[i] == -1 && dims[i] % 2 == 1) odd_minus = true;
      }
      const BigInt bound = BigInt(1) << dims.size();
      for (std::uint64_t m = 1; m <= 12; ++m) {
        const BigInt L = lefschetz_number(d, m);
        if (even_minus && m % 2 == 1) { ASSERT_EQ(L, 0); }
        if (odd_minus && m % 2 == 0) { ASSERT_EQ(L, 0); }
        ASSERT_LE(boost::multiprecision::abs(L), bound);
      }
    }
  }
}

}  // namespace
}  // namespace lefper
