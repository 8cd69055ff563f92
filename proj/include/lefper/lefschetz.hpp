#pragma once

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"
#include "lefper/homology.hpp"
#include "lefper/numtheory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lefper {

/// L(f^m) = prod_i (1 + (-1)^{n_i} a_i^m).
inline BigInt lefschetz_number(const MapDescriptor& desc, std::uint64_t m) {
  detail::require_positive(m, "lefschetz_number");
  BigInt product = 1;
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const BigInt power = ipow(BigInt(desc.eig(i)), m);
    product *= (desc.dim(i) % 2 == 0) ? BigInt(1 + power) : BigInt(1 - power);
    if (product == 0) break;
  }
  return product;
}

/// l(f^m) = sum_{r | m} mu(r) L(f^{m/r}).
inline BigInt periodic_lefschetz(const MapDescriptor& desc, std::uint64_t m) {
  detail::require_positive(m, "periodic_lefschetz");
  BigInt total = 0;
  for (std::uint64_t r : divisors(m)) {
    const int mu = mobius(r);
    if (mu == 0) continue;
    const BigInt value = lefschetz_number(desc, m / r);
    if (mu > 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

inline constexpr std::uint64_t kDefaultHorizonCap = 10000;

/// L(f^m) and l(f^m) for m = 1..horizon; index 0 holds m = 1.
struct LefschetzProfile {
  MapDescriptor desc;
  std::uint64_t horizon = 0;
  std::vector<BigInt> lefschetz;
  std::vector<BigInt> periodic;

  const BigInt& L(std::uint64_t m) const { return lefschetz.at(m - 1); }
  const BigInt& ell(std::uint64_t m) const { return periodic.at(m - 1); }

  /// Checks sum_{r | m} l(f^r) = L(f^m) across the window.
  bool satisfies_inversion() const {
    if (lefschetz.size() != horizon || periodic.size() != horizon) return false;
    for (std::uint64_t m = 1; m <= horizon; ++m) {
      BigInt total = 0;
      for (std::uint64_t r : divisors(m)) total += ell(r);
      if (total != L(m)) return false;
    }
    return true;
  }
};

inline LefschetzProfile profile(const MapDescriptor& desc, std::uint64_t horizon,
                                std::uint64_t cap = kDefaultHorizonCap) {
  detail::require_positive(horizon, "profile");
  if (horizon > cap)
    throw Error(ErrorCode::HorizonTooLarge,
                "horizon " + std::to_string(horizon) + " exceeds cap " + std::to_string(cap));
  LefschetzProfile p{desc, horizon, {}, {}};
  p.lefschetz.reserve(horizon);
  for (std::uint64_t m = 1; m <= horizon; ++m) p.lefschetz.push_back(lefschetz_number(desc, m));
  // Reuse the L window rather than re-evaluating it per divisor.
  p.periodic.reserve(horizon);
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    BigInt total = 0;
    for (std::uint64_t r : divisors(m)) {
      const int mu = mobius(r);
      if (mu > 0) total += p.L(m / r);
      if (mu < 0) total -= p.L(m / r);
    }
    p.periodic.push_back(std::move(total));
  }
  if (!p.satisfies_inversion())
    throw Error(ErrorCode::InvariantViolation, "Moebius inversion failed on profile window");
  return p;
}

}  // namespace lefper
