#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtp/error.hpp"
#include "gtp/scalar.hpp"

namespace gtp {

/// Default upper bound on the number of entries any product or power may
/// allocate. Product orders grow as (m-1)(k-1)+1 and powers as (m-1)^k+1, so
/// results explode quickly; callers opt in to larger results explicitly.
inline constexpr std::size_t kDefaultMaxEntries = 10'000'000;

/// n^e, saturating at the maximum size_t on overflow.
inline std::size_t checked_pow(std::size_t n, std::size_t e) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (n <= 1) return e == 0 ? 1 : n;
  std::size_t r = 1;
  std::size_t base = n;
  while (e > 0) {
    if (e & 1) {
      if (r > kMax / base) return kMax;
      r *= base;
    }
    e >>= 1;
    if (e > 0) {
      if (base > kMax / base) return kMax;
      base *= base;
    }
  }
  return r;
}

/// Entry count n^order, throwing ResultTooLarge above `max_entries`.
inline std::size_t entry_count_within(std::size_t order, std::size_t dim, std::size_t max_entries) {
  const std::size_t count = checked_pow(dim, order);
  if (count > max_entries) {
    fail(ErrorCode::ResultTooLarge, "order " + std::to_string(order) + " dimension " +
                                        std::to_string(dim) + " tensor exceeds the cap of " +
                                        std::to_string(max_entries) + " entries");
  }
  return count;
}

/// Order-m, dimension-n array stored row-major: the 0-based multi-index
/// (i_1, ..., i_m) lives at offset sum_j i_j * n^(m-j).
/// Order 1 is a vector, order 2 a matrix.
template <class T>
class DenseTensor {
 public:
  using value_type = T;

  DenseTensor(std::size_t order, std::size_t dim)
      : order_(order), dim_(dim), entries_(checked_size(order, dim), T(0)) {}

  DenseTensor(std::size_t order, std::size_t dim, std::vector<T> entries)
      : order_(order), dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != checked_size(order, dim)) {
      fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(checked_size(order, dim)) +
                                         " entries, got " + std::to_string(entries_.size()));
    }
  }

  static DenseTensor from_vector(std::vector<T> x) {
    const std::size_t n = x.size();
    return DenseTensor(1, n, std::move(x));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::span<const T> entries() const noexcept { return entries_; }
  std::span<T> entries() noexcept { return entries_; }
  const std::vector<T>& storage() const noexcept { return entries_; }

  const T& operator[](std::size_t offset) const { return entries_[offset]; }
  T& operator[](std::size_t offset) { return entries_[offset]; }

  std::size_t offset_of(std::span<const std::size_t> index) const {
    if (index.size() != order_) fail(ErrorCode::ShapeMismatch, "index arity differs from tensor order");
    std::size_t off = 0;
    for (std::size_t i : index) {
      if (i >= dim_) fail(ErrorCode::ShapeMismatch, "index component out of range");
      off = off * dim_ + i;
    }
    return off;
  }

  std::vector<std::size_t> index_of(std::size_t offset) const {
    std::vector<std::size_t> index(order_);
    for (std::size_t j = order_; j-- > 0;) {
      index[j] = offset % dim_;
      offset /= dim_;
    }
    return index;
  }

  const T& at(std::initializer_list<std::size_t> index) const {
    return entries_[offset_of(std::span<const std::size_t>(index.begin(), index.size()))];
  }
  T& at(std::initializer_list<std::size_t> index) {
    return entries_[offset_of(std::span<const std::size_t>(index.begin(), index.size()))];
  }
  const T& at(std::span<const std::size_t> index) const { return entries_[offset_of(index)]; }
  T& at(std::span<const std::size_t> index) { return entries_[offset_of(index)]; }

  bool same_shape(const DenseTensor& other) const noexcept {
    return order_ == other.order_ && dim_ == other.dim_;
  }

  bool operator==(const DenseTensor& other) const {
    return same_shape(other) && entries_ == other.entries_;
  }

  template <class U>
  DenseTensor<U> cast() const {
    std::vector<U> out;
    out.reserve(entries_.size());
    for (const T& v : entries_) out.push_back(scalar_cast<U>(v));
    return DenseTensor<U>(order_, dim_, std::move(out));
  }

 private:
  static std::size_t checked_size(std::size_t order, std::size_t dim) {
    if (order == 0 || dim == 0) fail(ErrorCode::ShapeMismatch, "order and dimension must be positive");
    return entry_count_within(order, dim, std::numeric_limits<std::size_t>::max() / sizeof(T) / 2);
  }

  std::size_t order_;
  std::size_t dim_;
  std::vector<T> entries_;
};

using RationalTensor = DenseTensor<Rational>;
using RealTensor = DenseTensor<double>;

/// Entrywise comparison under an explicit tolerance.
template <class T>
bool approx_equal(const DenseTensor<T>& a, const DenseTensor<T>& b, magnitude_t<T> tol) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (magnitude(T(a[i] - b[i])) > tol) return false;
  }
  return true;
}

/// Advances a 0-based multi-index over [dim]^len in row-major order.
/// Returns false after the last index wraps to all zeros.
inline bool next_index(std::span<std::size_t> index, std::size_t dim) {
  for (std::size_t j = index.size(); j-- > 0;) {
    if (++index[j] < dim) return true;
    index[j] = 0;
  }
  return false;
}

}  // namespace gtp
