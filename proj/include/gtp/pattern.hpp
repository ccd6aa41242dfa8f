#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gtp/tensor.hpp"

namespace gtp {

/// Bitmask subset of {0, ..., n-1}; supports n <= 64.
using SubsetState = std::uint64_t;

/// Sorted, duplicate-free set of subsets.
using SubsetFamily = std::vector<SubsetState>;

inline SubsetState full_state(std::size_t n) {
  return n >= 64 ? ~SubsetState{0} : (SubsetState{1} << n) - 1;
}

/// Zero/nonzero pattern Z(A) of a tensor, with the DenseTensor offset scheme.
class PatternTensor {
 public:
  PatternTensor(std::size_t order, std::size_t dim);
  PatternTensor(std::size_t order, std::size_t dim, std::vector<std::uint8_t> bits);

  /// Pattern whose offset b is set iff bit b of `code` is; needs n^m <= 64.
  static PatternTensor from_code(std::size_t order, std::size_t dim, std::uint64_t code);

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return bits_.size(); }
  /// n^(m-1), the number of trailing index tuples per row.
  std::size_t tail_count() const noexcept { return size() / dim_; }

  bool test(std::size_t offset) const { return bits_[offset] != 0; }
  void set(std::size_t offset, bool value = true) { bits_[offset] = value ? 1 : 0; }
  bool test(std::size_t row, std::size_t tail) const { return test(row * tail_count() + tail); }

  std::size_t count() const;
  bool all() const { return count() == size(); }

  /// Pattern of A + I (every diagonal entry forced on).
  PatternTensor with_unit_diagonal() const;

  bool operator==(const PatternTensor&) const = default;

 private:
  std::size_t order_;
  std::size_t dim_;
  std::vector<std::uint8_t> bits_;
};

/// Z(A): exact nonzero test, or |a| > eps for floating tensors.
template <class T>
PatternTensor zero_pattern(const DenseTensor<T>& a, magnitude_t<T> eps = magnitude_t<T>(0)) {
  PatternTensor p(a.order(), a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (magnitude(a[i]) > eps) p.set(i);
  }
  return p;
}

/// Z(AB) from Z(A) and Z(B): the general product over the Boolean semiring.
PatternTensor pattern_product(const PatternTensor& a, const PatternTensor& b,
                              std::size_t max_entries = kDefaultMaxEntries);

/// Support of T_A(x) for any nonnegative x supported on `s`:
/// { i : some a[i, i_2..i_m] != 0 with every i_j in s }.
SubsetState step_map(const PatternTensor& p, SubsetState s);

/// Precomputed form of step_map for repeated application.
class SupportMap {
 public:
  explicit SupportMap(const PatternTensor& p);
  SubsetState operator()(SubsetState s) const;
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t dim_;
  // For each row, the index sets of its nonzero tails (minimal ones only).
  std::vector<std::vector<SubsetState>> rows_;
};

/// a[i, j, ..., j] != 0 for all i, j.
bool essentially_positive(const PatternTensor& p);

/// Least r with A^r essentially positive, from the support dynamics
/// S -> step_map(S) started at every singleton; nullopt if not primitive.
std::optional<std::size_t> primitive_degree(const PatternTensor& p);

/// (A + I)^(n-1) is essentially positive.
bool is_irreducible(const PatternTensor& p);

/// The digraph with an arc i -> j whenever j occurs in a nonzero
/// a[i, i_2..i_m] is strongly connected.
bool is_weakly_irreducible(const PatternTensor& p);

inline constexpr std::size_t kDefaultFamilyCap = std::size_t{1} << 16;

/// Supports of the slices (A^k)[., a_1..a_{m-1}] for k = 1: the starting family.
SubsetFamily initial_slice_family(const PatternTensor& p);

/// Supports of the slices of A^(k+1) from those of A^k.
SubsetFamily slice_family_step(const PatternTensor& p, const SubsetFamily& family,
                               std::size_t family_cap = kDefaultFamilyCap);

/// Least k with A^k entrywise positive, via the slice-support family
/// recursion; nullopt when the family sequence cycles first.
std::optional<std::size_t> strongly_primitive_degree(const PatternTensor& p,
                                                     std::size_t family_cap = kDefaultFamilyCap);

/// M(A)[i, j] = a[i, j, ..., j].
PatternTensor majorization_matrix(const PatternTensor& p);

template <class T>
DenseTensor<T> majorization_matrix(const DenseTensor<T>& a) {
  const std::size_t n = a.dim();
  DenseTensor<T> m(2, n);
  std::size_t step = 0;
  for (std::size_t t = 1; t < a.order(); ++t) step = step * n + 1;
  const std::size_t tail_count = a.size() / n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a[i * tail_count + j * step];
  }
  return m;
}

/// Strong connectivity of the digraph of a Boolean matrix.
bool matrix_is_irreducible(const PatternTensor& m);

/// gcd of the cycle lengths of the digraph of an irreducible Boolean matrix;
/// throws NotIrreducible otherwise.
std::size_t matrix_cyclic_index(const PatternTensor& m);

/// Least k <= (n-1)^2 + 1 with M^k all-true, else nullopt.
std::optional<std::size_t> matrix_primitive_degree(const PatternTensor& m);

}  // namespace gtp
