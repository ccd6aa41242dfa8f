#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gtp/products.hpp"

namespace gtp {

/// Rank by Gaussian elimination with partial pivoting; entries with magnitude
/// <= tol count as zero (tol = 0 for exact scalars).
template <class T>
std::size_t matrix_rank(const DenseTensor<T>& m, magnitude_t<T> tol) {
  detail::require_matrix(m.order(), "matrix_rank operand");
  const std::size_t n = m.dim();
  std::vector<T> w(m.storage());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (magnitude(w[r * n + col]) > magnitude(w[best * n + col])) best = r;
    }
    if (near_zero(w[best * n + col], tol)) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(w[rank * n + c], w[best * n + c]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (is_exact_zero(w[r * n + col])) continue;
      const T f = w[r * n + col] / w[rank * n + col];
      for (std::size_t c = col; c < n; ++c) w[r * n + c] -= f * w[rank * n + c];
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse; throws DivisionByZero when singular at tolerance tol.
template <class T>
DenseTensor<T> matrix_inverse(const DenseTensor<T>& m, magnitude_t<T> tol) {
  detail::require_matrix(m.order(), "matrix_inverse operand");
  const std::size_t n = m.dim();
  std::vector<T> w(m.storage());
  DenseTensor<T> inv = identity_matrix<T>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (magnitude(w[r * n + col]) > magnitude(w[best * n + col])) best = r;
    }
    if (near_zero(w[best * n + col], tol)) fail(ErrorCode::DivisionByZero, "matrix is singular");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(w[col * n + c], w[best * n + c]);
      std::swap(inv[col * n + c], inv[best * n + c]);
    }
    const T pivot = w[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      w[col * n + c] /= pivot;
      inv[col * n + c] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_exact_zero(w[r * n + col])) continue;
      const T f = w[r * n + col];
      for (std::size_t c = 0; c < n; ++c) {
        w[r * n + c] -= f * w[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

/// P P^T = I within tol.
template <class T>
bool is_orthogonal(const DenseTensor<T>& p, magnitude_t<T> tol) {
  detail::require_matrix(p.order(), "is_orthogonal operand");
  return approx_equal(general_product(p, transpose(p)), identity_matrix<T>(p.dim()), tol);
}

}  // namespace gtp
