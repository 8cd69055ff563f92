#pragma once

// Brute-force reference implementations. The graded homology basis is built
// here by tensoring one sphere at a time, independently of the subset
// enumeration in homology.hpp, and Lefschetz numbers come from traces of
// explicit matrix powers.

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"
#include "lefper/homology.hpp"
#include "lefper/lefschetz.hpp"
#include "lefper/numtheory.hpp"
#include "lefper/zeta.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lefper::oracle {

using Matrix = std::vector<std::vector<BigInt>>;

struct InducedMatrix {
  int degree = 0;
  Matrix entries;

  std::size_t size() const noexcept { return entries.size(); }
};

namespace detail {

struct Generator {
  int degree = 0;
  BigInt eigenvalue = 1;
  std::vector<std::size_t> factors;
};

/// H_*(S^{n_1}) (x) ... (x) H_*(S^{n_l}): each sphere contributes a degree-0
/// generator (eigenvalue 1) and a degree-n generator (eigenvalue a).
inline std::vector<Generator> kunneth_basis(const MapDescriptor& desc) {
  std::vector<Generator> basis{Generator{}};
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const std::size_t old = basis.size();
    for (std::size_t j = 0; j < old; ++j) {
      Generator g = basis[j];
      g.degree += desc.dim(i);
      g.eigenvalue *= desc.eig(i);
      g.factors.push_back(i);
      basis.push_back(std::move(g));
    }
  }
  return basis;
}

inline Matrix identity(std::size_t n) {
  Matrix id(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix matrix_power(Matrix base, std::uint64_t exp) {
  Matrix result = identity(base.size());
  while (exp != 0) {
    if (exp & 1U) result = multiply(result, base);
    exp >>= 1U;
    if (exp != 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace detail

/// Matrix of f_{*k} in the Kuenneth basis, rows in shortlex factor order.
inline InducedMatrix induced_matrix(const MapDescriptor& desc, int k) {
  if (k < 0 || k > total_dimension(desc.space))
    throw Error(ErrorCode::KOutOfRange, "degree " + std::to_string(k) + " out of range");
  std::vector<detail::Generator> gens;
  for (auto& g : detail::kunneth_basis(desc)) {
    if (g.degree == k) gens.push_back(std::move(g));
  }
  std::sort(gens.begin(), gens.end(), [](const detail::Generator& x, const detail::Generator& y) {
    if (x.factors.size() != y.factors.size()) return x.factors.size() < y.factors.size();
    return x.factors < y.factors;
  });
  InducedMatrix out{k, Matrix(gens.size(), std::vector<BigInt>(gens.size(), BigInt(0)))};
  for (std::size_t i = 0; i < gens.size(); ++i) out.entries[i][i] = gens[i].eigenvalue;
  return out;
}

inline bool is_diagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && a[i][j] != 0) return false;
  return true;
}

/// sum_k (-1)^k trace((f_{*k})^m).
inline BigInt lefschetz_via_traces(const MapDescriptor& desc, std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::DomainViolation, "lefschetz_via_traces requires m >= 1");
  BigInt total = 0;
  const int top = total_dimension(desc.space);
  for (int k = 0; k <= top; ++k) {
    const InducedMatrix a = induced_matrix(desc, k);
    if (a.size() == 0) continue;
    const Matrix p = detail::matrix_power(a.entries, m);
    BigInt trace = 0;
    for (std::size_t i = 0; i < p.size(); ++i) trace += p[i][i];
    if (k % 2 == 0) {
      total += trace;
    } else {
      total -= trace;
    }
  }
  return total;
}

/// prod_k det(I - t f_{*k})^{(-1)^{k+1}}; each determinant splits into the
/// linear factors of the diagonal.
inline FactoredRationalFunction zeta_via_charpoly(const MapDescriptor& desc) {
  FactoredRationalFunction z;
  const int top = total_dimension(desc.space);
  for (int k = 0; k <= top; ++k) {
    const InducedMatrix a = induced_matrix(desc, k);
    if (!is_diagonal(a.entries))
      throw Error(ErrorCode::InvariantViolation, "induced matrix is not diagonal");
    for (std::size_t i = 0; i < a.size(); ++i) z.accumulate(a.entries[i][i], k % 2 == 0 ? -1 : 1);
  }
  return z;
}

/// Periodic Lefschetz number by inversion versus the product prod_i (-1)^{n_i} Q_m(a_i).
struct ProductFormulaCheck {
  std::uint64_t m = 0;
  BigInt inversion;
  BigInt product;
  bool agree = false;
};

inline ProductFormulaCheck adjudicate_q_product(const MapDescriptor& desc, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::DomainViolation, "product formula check requires m >= 2");
  ProductFormulaCheck c;
  c.m = m;
  c.inversion = periodic_lefschetz(desc, m);
  c.product = 1;
  for (std::size_t i = 0; i < desc.factors(); ++i) {
    const BigInt q = q_poly(desc.eig(i), m);
    c.product *= (desc.dim(i) % 2 == 0) ? q : BigInt(-q);
  }
  c.agree = c.inversion == c.product;
  return c;
}

/// All m in 2..horizon where the product formula disagrees with inversion.
inline std::vector<ProductFormulaCheck> q_product_disagreements(const MapDescriptor& desc,
                                                                std::uint64_t horizon) {
  std::vector<ProductFormulaCheck> out;
  for (std::uint64_t m = 2; m <= horizon; ++m) {
    auto c = adjudicate_q_product(desc, m);
    if (!c.agree) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lefper::oracle
