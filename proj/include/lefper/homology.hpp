#pragma once

// Rational homology of X = S^{n_1} x ... x S^{n_l} with n_1 < ... < n_l.
//
// By Kuenneth, H_k(X) has one generator per subset S of the factors with
// sum_{i in S} n_i = k, and a map with basic eigenvalues a_1..a_l acts on
// that generator by prod_{i in S} a_i.

#include "lefper/bigint.hpp"
#include "lefper/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lefper {

inline constexpr std::size_t kMaxFactors = 30;

class SphereProduct {
 public:
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t factors() const noexcept { return dims_.size(); }
  int dim(std::size_t i) const { return dims_.at(i); }

  friend bool operator==(const SphereProduct&, const SphereProduct&) = default;

 private:
  explicit SphereProduct(std::vector<int> dims) : dims_(std::move(dims)) {}
  friend SphereProduct make_space(std::vector<int> dims);

  std::vector<int> dims_;
};

/// Validating constructor; the only way to obtain a SphereProduct.
inline SphereProduct make_space(std::vector<int> dims) {
  if (dims.empty()) throw Error(ErrorCode::EmptyDims, "a sphere product needs at least one factor");
  if (dims.size() > kMaxFactors)
    throw Error(ErrorCode::DomainViolation, "at most " + std::to_string(kMaxFactors) + " factors");
  for (int n : dims) {
    if (n < 1) throw Error(ErrorCode::NonPositiveDim, "dimension " + std::to_string(n) + " is not positive");
  }
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] <= dims[i - 1])
      throw Error(ErrorCode::NonIncreasingDims, "dimensions must be strictly increasing");
  }
  return SphereProduct(std::move(dims));
}

inline int total_dimension(const SphereProduct& space) {
  return std::accumulate(space.dims().begin(), space.dims().end(), 0);
}

/// A self-map described by one integer basic eigenvalue per sphere factor.
struct MapDescriptor {
  SphereProduct space;
  std::vector<std::int64_t> eigs;

  std::size_t factors() const noexcept { return eigs.size(); }
  int dim(std::size_t i) const { return space.dim(i); }
  std::int64_t eig(std::size_t i) const { return eigs.at(i); }

  friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;
};

inline MapDescriptor make_descriptor(SphereProduct space, std::vector<std::int64_t> eigs) {
  if (eigs.size() != space.factors())
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(space.factors()) +
                                               " eigenvalues, got " + std::to_string(eigs.size()));
  return MapDescriptor{std::move(space), std::move(eigs)};
}

inline MapDescriptor make_descriptor(std::vector<int> dims, std::vector<std::int64_t> eigs) {
  return make_descriptor(make_space(std::move(dims)), std::move(eigs));
}

/// Index list of a subset of factors (0-based, ascending).
using FactorSubset = std::vector<std::size_t>;

/// Subsets whose dimensions sum to k, in shortlex order: by size, then
/// lexicographically. The basic generator of H_{n_i} therefore comes first.
inline std::vector<FactorSubset> subsets_of_degree(const SphereProduct& space, int k) {
  const std::size_t l = space.factors();
  std::vector<FactorSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    int degree = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (std::uint64_t{1} << i)) degree += space.dim(i);
    }
    if (degree != k) continue;
    FactorSubset s;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const FactorSubset& x, const FactorSubset& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

/// b_0..b_N: b_k counts the subsets of factors with dimension sum k.
inline std::vector<std::uint64_t> betti_numbers(const SphereProduct& space) {
  const std::size_t l = space.factors();
  std::vector<std::uint64_t> betti(static_cast<std::size_t>(total_dimension(space)) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::size_t degree = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask & (std::uint64_t{1} << i)) degree += static_cast<std::size_t>(space.dim(i));
    }
    ++betti[degree];
  }
  return betti;
}

inline BigInt subset_product(const MapDescriptor& desc, const FactorSubset& subset) {
  BigInt p = 1;
  for (std::size_t i : subset) p *= desc.eig(i);
  return p;
}

/// Eigenvalues of f_{*k} with multiplicity, in shortlex subset order.
inline std::vector<BigInt> homology_spectrum(const MapDescriptor& desc, int k) {
  if (k < 0 || k > total_dimension(desc.space))
    throw Error(ErrorCode::KOutOfRange, "degree " + std::to_string(k) + " outside 0.." +
                                            std::to_string(total_dimension(desc.space)));
  std::vector<BigInt> spectrum;
  for (const auto& s : subsets_of_degree(desc.space, k)) spectrum.push_back(subset_product(desc, s));
  return spectrum;
}

// Lie groups whose rational homology is that of a product of odd spheres.

enum class LieFamily { SU, Sp, CustomOdd };

struct LieGroupPreset {
  LieFamily family = LieFamily::SU;
  int n = 2;
  std::vector<int> custom_dims;  // CustomOdd only

  static LieGroupPreset su(int n) { return {LieFamily::SU, n, {}}; }
  static LieGroupPreset sp(int n) { return {LieFamily::Sp, n, {}}; }
  static LieGroupPreset custom(std::vector<int> dims) {
    return {LieFamily::CustomOdd, 0, std::move(dims)};
  }
};

inline std::string to_string(LieFamily family) {
  switch (family) {
    case LieFamily::SU: return "SU";
    case LieFamily::Sp: return "Sp";
    case LieFamily::CustomOdd: return "CustomOdd";
  }
  return "?";
}

/// SU(n) -> 3,5,..,2n-1; Sp(n) -> 3,7,..,4n-1; CustomOdd -> the given list.
inline SphereProduct lie_preset(const LieGroupPreset& preset) {
  std::vector<int> dims;
  switch (preset.family) {
    case LieFamily::SU:
      if (preset.n < 2) throw Error(ErrorCode::InvalidPreset, "SU(n) needs n >= 2");
      for (int j = 2; j <= preset.n; ++j) dims.push_back(2 * j - 1);
      break;
    case LieFamily::Sp:
      if (preset.n < 1) throw Error(ErrorCode::InvalidPreset, "Sp(n) needs n >= 1");
      for (int j = 1; j <= preset.n; ++j) dims.push_back(4 * j - 1);
      break;
    case LieFamily::CustomOdd:
      dims = preset.custom_dims;
      if (dims.empty()) throw Error(ErrorCode::EmptyDims, "custom preset needs at least one dimension");
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dims[i] % 2 == 0 || (i > 0 && dims[i] <= dims[i - 1]))
          throw Error(ErrorCode::RepeatedOrEvenDim,
                      "custom dimensions must be odd, positive and strictly increasing");
      }
      break;
  }
  return make_space(std::move(dims));
}

/// Rank and dimension of the group the preset models.
inline std::size_t lie_rank(const LieGroupPreset& preset) { return lie_preset(preset).factors(); }
inline int lie_dimension(const LieGroupPreset& preset) { return total_dimension(lie_preset(preset)); }

}  // namespace lefper
