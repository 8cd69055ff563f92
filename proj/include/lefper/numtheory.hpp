#pragma once

// Elementary multiplicative number theory used by the periodic Lefschetz
// machinery: the Moebius function, divisor lists and the polynomials
//   Q_m(x) = sum_{r | m} mu(r) x^{m/r}.

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace lefper {

namespace detail {

inline void require_positive(std::uint64_t m, const char* what) {
  if (m == 0) throw Error(ErrorCode::DomainViolation, std::string(what) + " requires m >= 1");
}

}  // namespace detail

/// mu(m): 1 for m = 1, 0 if a prime square divides m, (-1)^r for r distinct primes.
inline int mobius(std::uint64_t m) {
  detail::require_positive(m, "mobius");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  return m > 1 ? -sign : sign;
}

/// Divisors of m in ascending order, by trial division up to sqrt(m).
inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
  detail::require_positive(m, "divisors");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// sum_{r | m} mu(r); equals 1 for m = 1 and 0 otherwise.
inline int mobius_divisor_sum(std::uint64_t m) {
  int total = 0;
  for (std::uint64_t r : divisors(m)) total += mobius(r);
  return total;
}

/// Q_m(a) = sum_{r | m} mu(r) a^{m/r}, exact.
inline BigInt q_poly(std::int64_t a, std::uint64_t m) {
  BigInt total = 0;
  const BigInt base = a;
  for (std::uint64_t r : divisors(m)) {
    const int mu = mobius(r);
    if (mu == 0) continue;
    const BigInt term = ipow(base, m / r);
    if (mu > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Parameters of an empirical growth certificate |Q_m(a)| >= C |a|^m for N < m <= M.
struct GrowthCheckConfig {
  std::int64_t base = 2;
  Rational constant = Rational(1, 2);
  std::uint64_t threshold = 1;
  std::uint64_t horizon = 2;

  void validate() const {
    if (base == 0 || base == 1 || base == -1)
      throw Error(ErrorCode::DomainViolation, "growth check needs |a| >= 2");
    if (constant <= 0 || constant > 1)
      throw Error(ErrorCode::DomainViolation, "growth check needs 0 < C <= 1");
    if (threshold == 0 || threshold >= horizon)
      throw Error(ErrorCode::DomainViolation, "growth check needs 1 <= N < M");
  }
};

inline bool verify_q_growth(const GrowthCheckConfig& cfg) {
  cfg.validate();
  const BigInt abs_base = cfg.base < 0 ? BigInt(-cfg.base) : BigInt(cfg.base);
  const BigInt num = boost::multiprecision::numerator(cfg.constant);
  const BigInt den = boost::multiprecision::denominator(cfg.constant);
  for (std::uint64_t m = cfg.threshold + 1; m <= cfg.horizon; ++m) {
    const BigInt q = boost::multiprecision::abs(q_poly(cfg.base, m));
    // |Q| >= (num/den) |a|^m  <=>  den |Q| >= num |a|^m
    if (den * q < num * ipow(abs_base, m)) return false;
  }
  return true;
}

}  // namespace lefper
