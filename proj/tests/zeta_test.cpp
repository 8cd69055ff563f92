#include "lefper/oracle.hpp"
#include "lefper/series.hpp"
#include "lefper/zeta.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace lefper {
namespace {

Zeta make_zeta(std::initializer_list<std::pair<long long, std::int64_t>> factors) {
  Zeta z;
  for (const auto& [base, e] : factors) z.accumulate(base, e);
  return z;
}

/// (1-a1 t)(1-a3 t)(1-a1a2 t)(1-a2a3 t) / [(1-t)(1-a2 t)(1-a1a3 t)(1-a1a2a3 t)]
Zeta three_sphere_template(long long a1, long long a2, long long a3) {
  return make_zeta({{a1, 1}, {a3, 1}, {a1 * a2, 1}, {a2 * a3, 1},
                    {1, -1}, {a2, -1}, {a1 * a3, -1}, {a1 * a2 * a3, -1}});
}

TEST(FactoredRationalFunction, Canonical) {
  const auto z = make_zeta({{0, 3}, {2, 1}, {2, -1}, {5, 0}});
  EXPECT_TRUE(z.is_one());
  EXPECT_EQ(make_zeta({{3, 2}, {3, -1}}).exponent(3), 1);
}

TEST(ZetaClosed, Examples) {
  EXPECT_EQ(zeta_closed(make_descriptor({1}, {3})), make_zeta({{3, 1}, {1, -1}}));
  EXPECT_EQ(zeta_closed(make_descriptor({1}, {-2})), make_zeta({{-2, 1}, {1, -1}}));
  EXPECT_EQ(zeta_closed(make_descriptor({2}, {1})), make_zeta({{1, -2}}));
  EXPECT_TRUE(zeta_closed(make_descriptor({1, 2}, {-1, -1})).is_one());
  // A zero eigenvalue kills every factor but (1-t)^{-1}.
  EXPECT_EQ(zeta_closed(make_descriptor({1, 2, 3}, {0, 0, 0})), make_zeta({{1, -1}}));
}

TEST(ZetaHomological, Examples) {
  for (long long a1 = -3; a1 <= 3; ++a1)
    for (long long a2 = -3; a2 <= 3; ++a2)
      for (long long a3 = -3; a3 <= 3; ++a3)
        ASSERT_EQ(zeta_homological(make_descriptor({1, 2, 3}, {a1, a2, a3})), three_sphere_template(a1, a2, a3));
  EXPECT_EQ(zeta_homological(make_descriptor({2, 5}, {0, 0})), make_zeta({{1, -1}}));
  EXPECT_EQ(zeta_homological(make_descriptor({3}, {-2})), make_zeta({{-2, 1}, {1, -1}}));
}

TEST(Multiply, Examples) {
  const auto g = make_zeta({{2, 1}, {-1, 3}});
  EXPECT_EQ(multiply(Zeta{}, g), g);
  EXPECT_TRUE(multiply(make_zeta({{2, 1}}), make_zeta({{2, -1}})).is_one());
  EXPECT_EQ(multiply(make_zeta({{1, -1}}), make_zeta({{1, -1}})), make_zeta({{1, -2}}));
}

TEST(RescaleArgument, Examples) {
  EXPECT_EQ(rescale_argument(make_zeta({{1, -1}}), 2), make_zeta({{2, -1}}));
  EXPECT_TRUE(rescale_argument(Zeta{}, 7).is_one());
  EXPECT_EQ(rescale_argument(make_zeta({{-1, 3}}), -1), make_zeta({{1, 3}}));
  EXPECT_THROW(rescale_argument(make_zeta({{1, 1}}), 0), Error);
}

TEST(Render, Format) {
  EXPECT_EQ(render(Zeta{}), "1");
  EXPECT_EQ(render(make_zeta({{2, -1}, {-1, 2}, {1, -1}})), "(1+t)^2 (1-t)^-1 (1-2t)^-1");
  EXPECT_EQ(render(make_zeta({{-3, 1}, {1, 1}})), "(1+3t) (1-t)");
  EXPECT_EQ(render(zeta_closed(make_descriptor({1, 2, 3}, {2, 3, 5}))),
            "(1-2t) (1-5t) (1-6t) (1-15t) (1-t)^-1 (1-3t)^-1 (1-10t)^-1 (1-30t)^-1");
}

TEST(SeriesExpand, Examples) {
  EXPECT_EQ(series_expand(make_zeta({{1, -1}}), 3).coeffs, testing::rat_list({1, 1, 1, 1}));
  EXPECT_EQ(series_expand(make_zeta({{2, 1}}), 3).coeffs, testing::rat_list({1, -2, 0, 0}));
  // Cauchy square of the geometric series.
  std::vector<Rational> geo(4, Rational(1)), square(4, Rational(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) square[i + j] += geo[i] * geo[j];
  ASSERT_EQ(square, testing::rat_list({1, 2, 3, 4}));
  EXPECT_EQ(series_expand(make_zeta({{1, -2}}), 3).coeffs, square);
  EXPECT_EQ(series_expand(Zeta{}, 2).coeffs, testing::rat_list({1, 0, 0}));
  EXPECT_THROW(series_expand(Zeta{}, 0), Error);
}

TEST(SeriesFromLefschetz, Examples) {
  EXPECT_EQ(series_from_lefschetz(make_descriptor({2}, {1}), 3).coeffs, testing::rat_list({1, 2, 3, 4}));
  EXPECT_EQ(series_from_lefschetz(make_descriptor({1}, {1}), 4).coeffs, testing::rat_list({1, 0, 0, 0, 0}));
  // (1-2t)/(1-t) = 1 - t - t^2 - ...
  EXPECT_EQ(series_from_lefschetz(make_descriptor({1}, {2}), 2).coeffs, testing::rat_list({1, -1, -1}));
}

TEST(SeriesExp, NonIntegralIntermediate) {
  // exp(t) = 1 + t + t^2/2 + t^3/6
  const auto e = series_exp(RationalSeries{testing::rat_list({0, 1, 0, 0})});
  EXPECT_EQ(e.coeffs[2], Rational(1, 2));
  EXPECT_EQ(e.coeffs[3], Rational(1, 6));
}

TEST(QuasiUnipotent, Examples) {
  auto q = quasi_unipotent_exponents(make_descriptor({1}, {-1}));
  EXPECT_EQ(q.alpha, -1);
  EXPECT_EQ(q.beta, 1);
  q = quasi_unipotent_exponents(make_descriptor({2}, {1}));
  EXPECT_EQ(q.alpha, -2);
  EXPECT_EQ(q.beta, 0);
  q = quasi_unipotent_exponents(make_descriptor({1, 2}, {-1, -1}));
  EXPECT_EQ(q.alpha, 0);
  EXPECT_EQ(q.beta, 0);
  EXPECT_EQ(q.e_counts, (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(q.o_counts, (std::vector<std::int64_t>{1, 1, 0}));
  try {
    quasi_unipotent_exponents(make_descriptor({1}, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotQuasiUnipotent);
  }
}

TEST(QuasiUnipotent, ESumBetaDisagreesOnCircleReflection) {
  // zeta = (1+t)/(1-t): beta is 1, the e(k) sum gives 0.
  const auto q = quasi_unipotent_exponents(make_descriptor({1}, {-1}));
  EXPECT_EQ(q.beta_from_e_counts(), 0);
  EXPECT_NE(q.beta_from_e_counts(), q.beta);
}

TEST(QuasiUnipotent, MatchesClosedForm) {
  for (const auto& dims : testing::all_dim_lists(4, 8))
    for (const auto& eigs : testing::all_unit_patterns(dims.size())) {
      const auto d = make_descriptor(dims, eigs);
      const auto z = zeta_closed(d);
      for (const auto& [base, e] : z.factors()) ASSERT_TRUE(base == 1 || base == -1);
      ASSERT_EQ(quasi_unipotent_exponents(d).as_zeta(), z);
    }
}

class ZetaProperties : public ::testing::Test {
 protected:
  std::vector<MapDescriptor> family() {
    std::mt19937_64 rng(2024);
    std::vector<MapDescriptor> out;
    for (int i = 0; i < 500; ++i) out.push_back(testing::random_descriptor(rng, 4, 8, 3));
    return out;
  }
};

TEST_F(ZetaProperties, DualRoute) {
  for (const auto& d : family()) ASSERT_EQ(zeta_closed(d), zeta_homological(d));
}

TEST_F(ZetaProperties, SeriesConsistency) {
  for (const auto& d : family()) ASSERT_EQ(series_expand(zeta_closed(d), 12), series_from_lefschetz(d, 12));
}

TEST_F(ZetaProperties, EulerProduct) {
  for (const auto& d : family()) {
    const auto logs = log_zeta_two_ways(profile(d, 12));
    ASSERT_EQ(logs.direct, logs.euler);
  }
}

TEST_F(ZetaProperties, InductionOnLastFactor) {
  for (const auto& d : family()) {
    if (d.factors() < 2) continue;
    auto dims = d.space.dims();
    auto eigs = d.eigs;
    const int n_last = dims.back();
    const auto a_last = eigs.back();
    dims.pop_back();
    eigs.pop_back();
    const auto g = zeta_closed(make_descriptor(dims, eigs));
    // g(0 t) = 1, so a zero eigenvalue leaves g unchanged.
    const Zeta expected =
        a_last == 0 ? g : multiply(g, power(rescale_argument(g, a_last), n_last % 2 == 0 ? 1 : -1));
    ASSERT_EQ(zeta_closed(d), expected);
  }
}

}  // namespace
}  // namespace lefper
