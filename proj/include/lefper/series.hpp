#pragma once

// Truncated formal power series over Q, used to cross-check the factored
// zeta function against exp(sum_m L(f^m) t^m / m).

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"
#include "lefper/lefschetz.hpp"
#include "lefper/zeta.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lefper {

struct RationalSeries {
  std::vector<Rational> coeffs;  // c_0..c_M

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

namespace detail {

inline void require_order(std::uint64_t order) {
  if (order == 0) throw Error(ErrorCode::DomainViolation, "series order must be >= 1");
}

/// Truncated Cauchy product.
inline std::vector<Rational> mul_truncated(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// (1 - c t)^e for any integer e: coefficient j is binom(e, j) (-c)^j.
inline std::vector<Rational> linear_factor_power(const BigInt& c, std::int64_t e, std::size_t len) {
  std::vector<Rational> out(len, Rational(0));
  Rational coeff = 1;
  const Rational neg_c(-c);
  for (std::size_t j = 0; j < len; ++j) {
    out[j] = coeff;
    const auto jj = static_cast<std::int64_t>(j);
    coeff = coeff * Rational(e - jj) / Rational(jj + 1) * neg_c;
  }
  return out;
}

}  // namespace detail

/// Taylor coefficients of f about t = 0 through t^order.
inline RationalSeries series_expand(const FactoredRationalFunction& f, std::uint64_t order) {
  detail::require_order(order);
  const auto len = static_cast<std::size_t>(order + 1);
  std::vector<Rational> acc(len, Rational(0));
  acc[0] = 1;
  for (const auto& [base, e] : f.factors())
    acc = detail::mul_truncated(acc, detail::linear_factor_power(base, e, len));
  return RationalSeries{std::move(acc)};
}

/// exp(g) for g with zero constant term, via n f_n = sum_{k=1}^n k g_k f_{n-k}.
inline RationalSeries series_exp(const RationalSeries& g) {
  if (g.coeffs.empty() || g.coeffs[0] != 0)
    throw Error(ErrorCode::DomainViolation, "formal exp needs a series with zero constant term");
  const std::size_t len = g.coeffs.size();
  std::vector<Rational> f(len, Rational(0));
  f[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Rational total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += Rational(static_cast<std::int64_t>(k)) * g.coeffs[k] * f[n - k];
    f[n] = total / Rational(static_cast<std::int64_t>(n));
  }
  return RationalSeries{std::move(f)};
}

/// exp(sum_{m <= order} L(f^m) t^m / m), truncated at t^order.
inline RationalSeries series_from_lefschetz(const MapDescriptor& desc, std::uint64_t order) {
  detail::require_order(order);
  RationalSeries g{std::vector<Rational>(static_cast<std::size_t>(order + 1), Rational(0))};
  for (std::uint64_t m = 1; m <= order; ++m)
    g.coeffs[m] = Rational(lefschetz_number(desc, m)) / Rational(static_cast<std::int64_t>(m));
  return series_exp(g);
}

/// log zeta written two ways, through t^order:
///   direct: sum_m L(f^m) t^m / m
///   euler:  sum_m (l(f^m) / m) sum_k t^{mk} / k   (log of prod_m (1 - t^m)^{-l(f^m)/m})
struct LogZetaPair {
  RationalSeries direct;
  RationalSeries euler;
};

inline LogZetaPair log_zeta_two_ways(const LefschetzProfile& prof) {
  const std::uint64_t order = prof.horizon;
  LogZetaPair out{RationalSeries{std::vector<Rational>(order + 1, Rational(0))},
                  RationalSeries{std::vector<Rational>(order + 1, Rational(0))}};
  for (std::uint64_t m = 1; m <= order; ++m) {
    out.direct.coeffs[m] = Rational(prof.L(m)) / Rational(static_cast<std::int64_t>(m));
    const Rational weight = Rational(prof.ell(m)) / Rational(static_cast<std::int64_t>(m));
    for (std::uint64_t k = 1; m * k <= order; ++k)
      out.euler.coeffs[m * k] += weight / Rational(static_cast<std::int64_t>(k));
  }
  return out;
}

}  // namespace lefper
