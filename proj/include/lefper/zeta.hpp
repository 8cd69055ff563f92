#pragma once

// The Lefschetz zeta function of a map on a sphere product is a finite
// product of linear factors (1 - c t)^e with integer c, since every
// homology eigenvalue is a product of basic eigenvalues.

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"
#include "lefper/homology.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lefper {

/// prod_c (1 - c t)^{e_c}, kept canonical: no zero bases, no zero exponents.
class FactoredRationalFunction {
 public:
  using FactorMap = std::map<BigInt, std::int64_t>;

  FactoredRationalFunction() = default;

  static FactoredRationalFunction factor(const BigInt& base, std::int64_t exponent) {
    FactoredRationalFunction f;
    f.accumulate(base, exponent);
    return f;
  }

  /// Multiplies in (1 - base t)^exponent.
  FactoredRationalFunction& accumulate(const BigInt& base, std::int64_t exponent) {
    if (base == 0 || exponent == 0) return *this;
    auto [it, inserted] = factors_.try_emplace(base, 0);
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
    return *this;
  }

  const FactorMap& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::int64_t exponent(const BigInt& base) const {
    auto it = factors_.find(base);
    return it == factors_.end() ? 0 : it->second;
  }

  friend bool operator==(const FactoredRationalFunction&, const FactoredRationalFunction&) = default;

 private:
  FactorMap factors_;
};

using Zeta = FactoredRationalFunction;

inline FactoredRationalFunction multiply(const FactoredRationalFunction& f,
                                         const FactoredRationalFunction& g) {
  FactoredRationalFunction out = f;
  for (const auto& [base, e] : g.factors()) out.accumulate(base, e);
  return out;
}

inline FactoredRationalFunction power(const FactoredRationalFunction& f, std::int64_t k) {
  FactoredRationalFunction out;
  for (const auto& [base, e] : f.factors()) out.accumulate(base, e * k);
  return out;
}

/// f(s t): each base c becomes c s.
inline FactoredRationalFunction rescale_argument(const FactoredRationalFunction& f, std::int64_t s) {
  if (s == 0) throw Error(ErrorCode::DomainViolation, "rescale_argument requires s != 0");
  FactoredRationalFunction out;
  for (const auto& [base, e] : f.factors()) out.accumulate(base * s, e);
  return out;
}

/// Closed subset-product form:
///   (1-t)^{-1} prod_{S nonempty} (1 - a_S t)^{(-1)^{n_S - 1}}.
inline Zeta zeta_closed(const MapDescriptor& desc) {
  Zeta z = Zeta::factor(1, -1);
  const std::size_t l = desc.factors();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
    BigInt product = 1;
    int degree = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      product *= desc.eig(i);
      degree += desc.dim(i);
    }
    z.accumulate(product, (degree - 1) % 2 == 0 ? 1 : -1);
  }
  return z;
}

/// prod_k det(I - t f_{*k})^{(-1)^{k+1}} assembled from the homology spectra.
inline Zeta zeta_homological(const MapDescriptor& desc) {
  Zeta z;
  const int top = total_dimension(desc.space);
  for (int k = 0; k <= top; ++k) {
    const std::int64_t sign = (k % 2 == 0) ? -1 : 1;
    for (const BigInt& lambda : homology_spectrum(desc, k)) z.accumulate(lambda, sign);
  }
  return z;
}

/// Text form such as "(1-2t) (1+t)^2 (1-t)^-1": numerator factors first,
/// then denominator factors, each group by ascending base; "1" when empty.
inline std::string render(const FactoredRationalFunction& f) {
  if (f.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const BigInt& base, std::int64_t e) {
    if (!first) os << ' ';
    first = false;
    os << "(1";
    if (base > 0) {
      os << '-';
      if (base != 1) os << base;
    } else {
      os << '+';
      if (base != -1) os << -base;
    }
    os << "t)";
    if (e != 1) os << '^' << e;
  };
  for (const auto& [base, e] : f.factors()) {
    if (e > 0) emit(base, e);
  }
  for (const auto& [base, e] : f.factors()) {
    if (e < 0) emit(base, e);
  }
  return os.str();
}

// Quasi-unipotent maps (all |a_i| = 1) have zeta = (1-t)^alpha (1+t)^beta.

struct QuasiUnipotentExponents {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::vector<std::int64_t> e_counts;  // e(k) for k = 1..N at index k-1
  std::vector<std::int64_t> o_counts;  // o(k)

  /// beta recomputed with e(k) in place of o(k); differs from beta in general.
  std::int64_t beta_from_e_counts() const { return alpha + 1; }

  Zeta as_zeta() const { return Zeta::factor(1, alpha).accumulate(-1, beta); }
};

inline bool is_quasi_unipotent(const MapDescriptor& desc) {
  for (std::int64_t a : desc.eigs) {
    if (a != 1 && a != -1) return false;
  }
  return true;
}

inline QuasiUnipotentExponents quasi_unipotent_exponents(const MapDescriptor& desc) {
  if (!is_quasi_unipotent(desc))
    throw Error(ErrorCode::NotQuasiUnipotent, "every basic eigenvalue must be +1 or -1");
  const int top = total_dimension(desc.space);
  QuasiUnipotentExponents q;
  q.e_counts.assign(static_cast<std::size_t>(top), 0);
  q.o_counts.assign(static_cast<std::size_t>(top), 0);
  const std::size_t l = desc.factors();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
    int degree = 0;
    int sign = 1;
    for (std::size_t i = 0; i < l; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      degree += desc.dim(i);
      sign *= static_cast<int>(desc.eig(i));
    }
    auto& counts = sign > 0 ? q.e_counts : q.o_counts;
    ++counts[static_cast<std::size_t>(degree - 1)];
  }
  q.alpha = -1;
  for (int k = 1; k <= top; ++k) {
    const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
    q.alpha += sign * q.e_counts[static_cast<std::size_t>(k - 1)];
    q.beta += sign * q.o_counts[static_cast<std::size_t>(k - 1)];
  }
  return q;
}

}  // namespace lefper
