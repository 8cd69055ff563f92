#pragma once

// Decision procedures on top of the exact invariants: minimal Lefschetz
// periods of quasi-unipotent maps, compatibility of the zeta function with
// finitely many hyperbolic periodic orbits, and period guarantees for
// transversal maps.

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"
#include "lefper/homology.hpp"
#include "lefper/lefschetz.hpp"
#include "lefper/zeta.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lefper {

/// Partition of factor indices (0-based) by dimension parity and eigenvalue.
struct SignPattern {
  std::vector<std::size_t> odd_minus;   // n_i odd,  a_i = -1
  std::vector<std::size_t> even_plus;   // n_i even, a_i = 1
  std::vector<std::size_t> even_minus;  // n_i even, a_i = -1
  std::vector<std::size_t> odd_plus;    // n_i odd,  a_i = 1
  std::vector<std::size_t> large;       // |a_i| > 1
  std::vector<std::size_t> zero;        // a_i = 0

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

inline SignPattern sign_pattern(const MapDescriptor& desc) {
  SignPattern p;
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const std::int64_t a = desc.eig(i);
    const bool odd = desc.dim(i) % 2 != 0;
    if (a == 0) {
      p.zero.push_back(i);
    } else if (a > 1 || a < -1) {
      p.large.push_back(i);
    } else if (odd) {
      (a == 1 ? p.odd_plus : p.odd_minus).push_back(i);
    } else {
      (a == 1 ? p.even_plus : p.even_minus).push_back(i);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Minimal set of Lefschetz periods

enum class MPerL { EmptySet, SetOne };
enum class MPerLBranch { A, B };

struct MPerLResult {
  MPerL verdict = MPerL::EmptySet;
  MPerLBranch branch = MPerLBranch::B;
};

/// For quasi-unipotent maps: {1} iff (-1)^{n_i} a_i = 1 for every i, else empty.
inline MPerLResult mperl(const MapDescriptor& desc) {
  if (!is_quasi_unipotent(desc))
    throw Error(ErrorCode::NotQuasiUnipotent, "MPer_L needs every basic eigenvalue in {+1, -1}");
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const std::int64_t signed_eig = (desc.dim(i) % 2 == 0) ? desc.eig(i) : -desc.eig(i);
    if (signed_eig == -1) return {MPerL::EmptySet, MPerLBranch::B};
  }
  return {MPerL::SetOne, MPerLBranch::A};
}

// ---------------------------------------------------------------------------
// Franks form: prod (1 - Delta t^p)^{(-1)^{u+1}}

/// A linear-factor zeta is of Franks form iff every base is +1 or -1.
inline bool franks_compatible(const FactoredRationalFunction& f) {
  for (const auto& [base, e] : f.factors()) {
    if (base != 1 && base != -1) return false;
  }
  return true;
}

struct FranksFactor {
  std::uint64_t period = 1;
  int orientation = 1;    // Delta
  int exponent_sign = 1;  // (-1)^{u+1}

  friend bool operator==(const FranksFactor&, const FranksFactor&) = default;
};

inline std::vector<FranksFactor> franks_decompose(const FactoredRationalFunction& f) {
  if (!franks_compatible(f))
    throw Error(ErrorCode::NotExpressible, render(f) + " has a base of modulus > 1");
  std::vector<FranksFactor> out;
  for (const auto& [base, e] : f.factors()) {
    const int orientation = base > 0 ? 1 : -1;
    const int sign = e > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) out.push_back({1, orientation, sign});
  }
  return out;
}

/// Inverse of franks_decompose (p = 1 only).
inline FactoredRationalFunction franks_product(const std::vector<FranksFactor>& factors) {
  FactoredRationalFunction f;
  for (const auto& fac : factors) {
    if (fac.period != 1)
      throw Error(ErrorCode::DomainViolation, "only period-1 factors are representable");
    f.accumulate(fac.orientation, fac.exponent_sign);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Hyperbolic periodic points

/// sup_m |L(f^m)| is infinite.
///
/// On odd m the factor 1 + (-1)^n a^m vanishes identically iff (n odd, a = 1)
/// or (n even, a = -1); on even m iff n is odd and |a| = 1. Every other factor
/// is bounded away from zero on that parity, and grows iff |a| > 1. So L is
/// unbounded iff some |a_j| > 1 and at least one parity class has no
/// identically vanishing factor.
inline bool lefschetz_unbounded(const MapDescriptor& desc) {
  bool has_large = false;
  bool odd_m_vanishes = false;
  bool even_m_vanishes = false;
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const std::int64_t a = desc.eig(i);
    const bool odd_dim = desc.dim(i) % 2 != 0;
    if (a > 1 || a < -1) has_large = true;
    if ((odd_dim && a == 1) || (!odd_dim && a == -1)) odd_m_vanishes = true;
    if (odd_dim && (a == 1 || a == -1)) even_m_vanishes = true;
  }
  return has_large && !(odd_m_vanishes && even_m_vanishes);
}

/// a_i != 1 for every odd n_i, and some |a_j| > 1.
inline bool infinite_orbit_eigenvalue_condition(const MapDescriptor& desc) {
  bool has_large = false;
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const std::int64_t a = desc.eig(i);
    if (desc.dim(i) % 2 != 0 && a == 1) return false;
    if (a > 1 || a < -1) has_large = true;
  }
  return has_large;
}

enum class Hyperbolicity { InfinitelyManyPeriodicPoints, Inconclusive };

struct HyperbolicVerdict {
  Hyperbolicity verdict = Hyperbolicity::Inconclusive;
  bool eigenvalue_condition_met = false;
  bool lefschetz_unbounded = false;
  bool franks_compatible = true;
  FactoredRationalFunction zeta;
};

/// For a C^1 map with all periodic points hyperbolic: finitely many such
/// points force a Franks-form zeta, so a surviving base |c| > 1 means
/// infinitely many periodic points.
inline HyperbolicVerdict hyperbolic_verdict(const MapDescriptor& desc) {
  HyperbolicVerdict v;
  v.zeta = zeta_closed(desc);
  v.franks_compatible = franks_compatible(v.zeta);
  v.eigenvalue_condition_met = infinite_orbit_eigenvalue_condition(desc);
  v.lefschetz_unbounded = lefschetz_unbounded(desc);
  v.verdict = v.franks_compatible ? Hyperbolicity::Inconclusive
                                  : Hyperbolicity::InfinitelyManyPeriodicPoints;
  return v;
}

// ---------------------------------------------------------------------------
// Transversal maps

enum class TransversalCase { A, B, C, D, E1, E2, E3, Degenerate };

inline std::string to_string(TransversalCase c) {
  switch (c) {
    case TransversalCase::A: return "A";
    case TransversalCase::B: return "B";
    case TransversalCase::C: return "C";
    case TransversalCase::D: return "D";
    case TransversalCase::E1: return "E1";
    case TransversalCase::E2: return "E2";
    case TransversalCase::E3: return "E3";
    case TransversalCase::Degenerate: return "Degenerate";
  }
  return "?";
}

enum class PeriodClaim {
  InPer,         // m in Per(f)
  MOrHalfInPer,  // m or m/2 in Per(f)
};

enum class ClaimScope {
  AllOddBeyondN,   // every odd m past an unquantified N
  AllEvenBeyondN,  // every even m past an unquantified N
  ExactSupport,    // m lies in the complete, finite support of l
  Window,          // l(f^m) != 0 observed inside the evaluated window
};

struct PeriodAssertion {
  PeriodClaim claim = PeriodClaim::InPer;
  ClaimScope scope = ClaimScope::Window;
  std::uint64_t m = 0;  // 0 for the asymptotic scopes

  friend bool operator==(const PeriodAssertion&, const PeriodAssertion&) = default;
};

inline std::string to_string(ClaimScope s) {
  switch (s) {
    case ClaimScope::AllOddBeyondN: return "all-odd-m-beyond-N";
    case ClaimScope::AllEvenBeyondN: return "all-even-m-beyond-N";
    case ClaimScope::ExactSupport: return "exact-finite-support";
    case ClaimScope::Window: return "window";
  }
  return "?";
}

inline std::string describe(const PeriodAssertion& a) {
  switch (a.scope) {
    case ClaimScope::AllOddBeyondN:
      return "every odd m > N is in Per(f)";
    case ClaimScope::AllEvenBeyondN:
      return "every even m > N has m or m/2 in Per(f)";
    case ClaimScope::ExactSupport:
    case ClaimScope::Window:
      break;
  }
  const std::string m = std::to_string(a.m);
  if (a.claim == PeriodClaim::InPer) return m + " is in Per(f)";
  return m + " or " + std::to_string(a.m / 2) + " is in Per(f)";
}

struct PeriodSetReport {
  TransversalCase case_tag = TransversalCase::Degenerate;
  std::uint64_t horizon = 0;
  std::vector<PeriodAssertion> guaranteed;
  std::vector<std::uint64_t> ell_support_window;  // m <= horizon with l(f^m) != 0
  std::vector<std::string> deviation_flags;
};

inline TransversalCase transversal_case(const SignPattern& p, std::size_t factors) {
  if (!p.zero.empty() || !p.odd_plus.empty()) return TransversalCase::Degenerate;
  if (!p.large.empty()) {
    if (p.large.size() == factors) return TransversalCase::A;
    const bool b = !p.even_minus.empty();
    const bool c = !p.odd_minus.empty();
    if (b && c) return TransversalCase::Degenerate;  // L vanishes for every m
    if (b) return TransversalCase::B;
    if (c) return TransversalCase::C;
    return TransversalCase::D;  // every other factor is even with a_i = 1
  }
  const bool om = !p.odd_minus.empty();
  const bool em = !p.even_minus.empty();
  if (!om && !em) return TransversalCase::E1;
  if (om && !em) return TransversalCase::E2;
  if (!om && em) return TransversalCase::E3;
  return TransversalCase::Degenerate;
}

/// Period guarantees for a transversal map. Every guarantee comes from a
/// nonvanishing l(f^m): odd m lies in Per(f), even m gives m or m/2.
/// With strict = true, a zero basic eigenvalue raises ZeroEigenvalue instead
/// of producing a Degenerate report.
inline PeriodSetReport transversal_classify(const MapDescriptor& desc, std::uint64_t horizon,
                                            bool strict = false) {
  const SignPattern pattern = sign_pattern(desc);
  if (strict && !pattern.zero.empty())
    throw Error(ErrorCode::ZeroEigenvalue, "transversal classification needs nonzero eigenvalues");

  const LefschetzProfile prof = profile(desc, horizon);
  PeriodSetReport report;
  report.horizon = horizon;
  report.case_tag = transversal_case(pattern, desc.factors());
  for (std::uint64_t m = 1; m <= horizon; ++m) {
    if (prof.ell(m) != 0) report.ell_support_window.push_back(m);
  }
  if (report.case_tag == TransversalCase::Degenerate) return report;

  const bool exact = report.case_tag == TransversalCase::E1 || report.case_tag == TransversalCase::E2 ||
                     report.case_tag == TransversalCase::E3;
  for (std::uint64_t m : report.ell_support_window) {
    report.guaranteed.push_back({m % 2 == 1 ? PeriodClaim::InPer : PeriodClaim::MOrHalfInPer,
                                 exact ? ClaimScope::ExactSupport : ClaimScope::Window, m});
  }

  const PeriodAssertion odd_tail{PeriodClaim::InPer, ClaimScope::AllOddBeyondN, 0};
  const PeriodAssertion even_tail{PeriodClaim::MOrHalfInPer, ClaimScope::AllEvenBeyondN, 0};
  switch (report.case_tag) {
    case TransversalCase::A:
    case TransversalCase::D:
      report.guaranteed.push_back(odd_tail);
      report.guaranteed.push_back(even_tail);
      break;
    case TransversalCase::B:
      report.guaranteed.push_back(even_tail);
      break;
    case TransversalCase::C: {
      report.guaranteed.push_back(odd_tail);
      // L(f^m) = 0 for even m kills l(f^m) only when 4 | m; at m = 2 * odd
      // the odd divisors r contribute L(f^r) terms.
      std::string list;
      for (std::uint64_t m : report.ell_support_window) {
        if (m % 2 == 0 && m > 2) list += (list.empty() ? "" : ",") + std::to_string(m);
      }
      if (!list.empty())
        report.deviation_flags.push_back("even-support: l(f^m) != 0 at even m = " + list +
                                         "; only multiples of 4 vanish");
      break;
    }
    case TransversalCase::E2:
    case TransversalCase::E3: {
      // The support stops at m = 2: the odd-divisor Moebius sum is -[m = 2]
      // and the even-divisor sum is [m = 2], not nonzero on all powers of 2.
      std::vector<std::uint64_t> vanishing;
      for (std::uint64_t m = 4; m <= horizon; m *= 2) {
        if (prof.ell(m) == 0) vanishing.push_back(m);
      }
      if (!vanishing.empty()) {
        std::string list;
        for (std::uint64_t m : vanishing) list += (list.empty() ? "" : ",") + std::to_string(m);
        report.deviation_flags.push_back(
            "power-of-two-support: l(f^m) = 0 at m = " + list +
            "; the periodic Lefschetz numbers are nonzero only for m in {" +
            std::string(report.case_tag == TransversalCase::E2 ? "1,2" : "2") +
            "}, not at every power of 2");
      }
      break;
    }
    default:
      break;
  }
  return report;
}

}  // namespace lefper
