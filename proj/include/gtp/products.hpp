#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gtp/error.hpp"
#include "gtp/scalar.hpp"
#include "gtp/tensor.hpp"

namespace gtp {

template <class T>
DenseTensor<T> unit_tensor(std::size_t order, std::size_t dim) {
  DenseTensor<T> out(order, dim);
  // The diagonal offsets are multiples of 1 + n + ... + n^(m-1).
  std::size_t step = 0;
  for (std::size_t j = 0; j < order; ++j) step = step * dim + 1;
  for (std::size_t i = 0; i < dim; ++i) out[i * step] = T(1);
  return out;
}

template <class T>
DenseTensor<T> identity_matrix(std::size_t dim) {
  return unit_tensor<T>(2, dim);
}

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": dimensions " + std::to_string(a) +
                                           " and " + std::to_string(b) + " differ");
  }
}

inline void require_matrix(std::size_t order, const char* what) {
  if (order != 2) fail(ErrorCode::UnsupportedOrder, std::string(what) + " must be a matrix");
}

}  // namespace detail

/// The general product AB of an order-m (m >= 2) and an order-k tensor of
/// common dimension n: an order (m-1)(k-1)+1 tensor with
///
///   c[i, a_1, ..., a_{m-1}] = sum a[i, i_2, ..., i_m] b[i_2, a_1] ... b[i_m, a_{m-1}]
///
/// where each a_j ranges over [n]^(k-1). Matrices multiply as usual, and
/// k = 1 gives the vector Ax.
///
/// The trailing indices of A are contracted one at a time against B viewed as
/// an n x n^(k-1) matrix, so the cost is about m * n^(order of C + 1) rather
/// than n^(order of C + m - 1) for direct summation.
template <class T>
DenseTensor<T> general_product(const DenseTensor<T>& a, const DenseTensor<T>& b,
                               std::size_t max_entries = kDefaultMaxEntries) {
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "left factor of a product needs order >= 2");
  detail::require_same_dim(a.dim(), b.dim(), "general_product");
  const std::size_t n = a.dim();
  const std::size_t m = a.order();
  const std::size_t k = b.order();
  const std::size_t result_order = (m - 1) * (k - 1) + 1;
  entry_count_within(result_order, n, max_entries);
  const std::size_t s = checked_pow(n, k - 1);

  std::vector<T> cur(a.storage());
  std::size_t prefix = a.size();
  std::size_t suffix = 1;
  for (std::size_t step = 1; step < m; ++step) {
    const std::size_t new_prefix = prefix / n;
    std::vector<T> next(new_prefix * s * suffix, T(0));
    for (std::size_t p = 0; p < new_prefix; ++p) {
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t src = (p * n + t) * suffix;
        const std::size_t brow = t * s;
        for (std::size_t alpha = 0; alpha < s; ++alpha) {
          const T& bv = b[brow + alpha];
          if (is_exact_zero(bv)) continue;
          const std::size_t dst = (p * s + alpha) * suffix;
          for (std::size_t q = 0; q < suffix; ++q) {
            const T& v = cur[src + q];
            if (is_exact_zero(v)) continue;
            next[dst + q] += v * bv;
          }
        }
      }
    }
    cur = std::move(next);
    prefix = new_prefix;
    suffix *= s;
  }
  return DenseTensor<T>(result_order, n, std::move(cur));
}

/// (Ax)_i = sum a[i, i_2, ..., i_m] x_{i_2} ... x_{i_m}, evaluated in one pass
/// over the entries of A. The vector scalar U may differ from T (for example
/// complex vectors against a real tensor).
template <class T, class U>
std::vector<U> apply_vector(const DenseTensor<T>& a, std::span<const U> x) {
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "apply_vector needs order >= 2");
  detail::require_same_dim(a.dim(), x.size(), "apply_vector");
  const std::size_t n = a.dim();
  const std::size_t tail = a.order() - 1;
  const std::size_t tail_count = checked_pow(n, tail);

  std::vector<U> y(n, U(0));
  std::vector<std::size_t> idx(tail, 0);
  // prod[j] = x[idx[0]] * ... * x[idx[j-1]]
  std::vector<U> prod(tail + 1, U(1));
  for (std::size_t j = 1; j <= tail; ++j) prod[j] = prod[j - 1] * x[0];

  for (std::size_t t = 0; t < tail_count; ++t) {
    const U& w = prod[tail];
    if (!is_exact_zero(w)) {
      for (std::size_t i = 0; i < n; ++i) {
        const T& av = a[i * tail_count + t];
        if (!is_exact_zero(av)) y[i] += scalar_cast<U>(av) * w;
      }
    }
    std::size_t p = tail;
    while (p > 0) {
      --p;
      if (++idx[p] < n) break;
      idx[p] = 0;
    }
    for (std::size_t j = p; j < tail; ++j) prod[j + 1] = prod[j] * x[idx[j]];
  }
  return y;
}

template <class T, class U>
std::vector<U> apply_vector(const DenseTensor<T>& a, const std::vector<U>& x) {
  return apply_vector(a, std::span<const U>(x));
}

/// Componentwise power x^[r]. Integer exponents are exact in every scalar
/// type; fractional exponents need floating scalars and nonnegative entries.
template <class T>
std::vector<T> hadamard_power(std::span<const T> x, const Rational& r) {
  std::vector<T> out;
  out.reserve(x.size());
  if (is_integer(r)) {
    const long e = boost::multiprecision::numerator(r).convert_to<long>();
    for (const T& v : x) {
      if (e < 0 && is_exact_zero(v)) fail(ErrorCode::DivisionByZero, "zero component raised to a negative power");
      out.push_back(pow_int(v, e));
    }
    return out;
  }
  if constexpr (ScalarTraits<T>::exact) {
    fail(ErrorCode::InexactExponent, "fractional exponent " + format_rational(r) + " in exact mode");
  } else {
    const double e = to_double(r);
    for (const T& v : x) {
      if constexpr (std::is_same_v<T, double>) {
        if (v < 0.0) fail(ErrorCode::NegativeBaseFractionalExponent, "negative component with fractional exponent");
        if (v == 0.0 && e < 0.0) fail(ErrorCode::DivisionByZero, "zero component raised to a negative power");
        out.push_back(std::pow(v, e));
      } else {
        if (v.imag() != 0.0 || v.real() < 0.0) {
          fail(ErrorCode::NegativeBaseFractionalExponent, "fractional exponent needs nonnegative real components");
        }
        out.push_back(T(std::pow(v.real(), e)));
      }
    }
    return out;
  }
}

template <class T>
std::vector<T> hadamard_power(const std::vector<T>& x, const Rational& r) {
  return hadamard_power(std::span<const T>(x), r);
}

template <class T>
DenseTensor<T> add(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  if (!a.same_shape(b)) fail(ErrorCode::ShapeMismatch, "add: operands differ in shape");
  std::vector<T> out(a.storage());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return DenseTensor<T>(a.order(), a.dim(), std::move(out));
}

template <class T>
DenseTensor<T> subtract(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  if (!a.same_shape(b)) fail(ErrorCode::ShapeMismatch, "subtract: operands differ in shape");
  std::vector<T> out(a.storage());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return DenseTensor<T>(a.order(), a.dim(), std::move(out));
}

template <class T>
DenseTensor<T> scalar_mul(const T& lambda, const DenseTensor<T>& a) {
  std::vector<T> out(a.storage());
  for (T& v : out) v *= lambda;
  return DenseTensor<T>(a.order(), a.dim(), std::move(out));
}

template <class T>
DenseTensor<T> operator+(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  return add(a, b);
}

template <class T>
DenseTensor<T> operator-(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  return subtract(a, b);
}

template <class T>
DenseTensor<T> operator*(const T& lambda, const DenseTensor<T>& a) {
  return scalar_mul(lambda, a);
}

namespace detail {

/// Contracts index position `mode` of `t` against the n x n matrix `mat`:
/// out[.., i, ..] = sum_j t[.., j, ..] * coef(i, j), where coef(i, j) is
/// mat[i, j] when `row_major_coef` and mat[j, i] otherwise.
template <class T>
DenseTensor<T> contract_mode(const DenseTensor<T>& t, std::size_t mode, const DenseTensor<T>& mat,
                             bool row_major_coef) {
  const std::size_t n = t.dim();
  const std::size_t outer = checked_pow(n, mode);
  const std::size_t inner = checked_pow(n, t.order() - 1 - mode);
  DenseTensor<T> out(t.order(), n);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const T& c = row_major_coef ? mat[i * n + j] : mat[j * n + i];
        if (is_exact_zero(c)) continue;
        const std::size_t src = (o * n + j) * inner;
        const std::size_t dst = (o * n + i) * inner;
        for (std::size_t q = 0; q < inner; ++q) {
          if (!is_exact_zero(t[src + q])) out[dst + q] += c * t[src + q];
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// PAQ for matrices P, Q:
///   (PAQ)[i_1..i_m] = sum a[j_1..j_m] p[i_1, j_1] q[j_2, i_2] ... q[j_m, i_m].
/// Equal to general_product(general_product(P, A), Q), computed mode by mode.
template <class T>
DenseTensor<T> triple_product_matrix(const DenseTensor<T>& p, const DenseTensor<T>& a,
                                     const DenseTensor<T>& q) {
  detail::require_matrix(p.order(), "P");
  detail::require_matrix(q.order(), "Q");
  detail::require_same_dim(p.dim(), a.dim(), "triple_product_matrix");
  detail::require_same_dim(q.dim(), a.dim(), "triple_product_matrix");
  if (a.order() == 1) return detail::contract_mode(a, 0, p, true);
  DenseTensor<T> out = detail::contract_mode(a, 0, p, true);
  for (std::size_t mode = 1; mode < a.order(); ++mode) out = detail::contract_mode(out, mode, q, false);
  return out;
}

/// A (x) B for equal orders k and dimensions n, m: dimension n*m with the pair
/// (i, j) of 0-based indices encoded as i*m + j.
template <class T>
DenseTensor<T> direct_product(const DenseTensor<T>& a, const DenseTensor<T>& b,
                              std::size_t max_entries = kDefaultMaxEntries) {
  if (a.order() != b.order()) {
    fail(ErrorCode::OrderMismatch, "direct_product: orders " + std::to_string(a.order()) + " and " +
                                       std::to_string(b.order()) + " differ");
  }
  const std::size_t k = a.order();
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na > 0 && nb > std::numeric_limits<std::size_t>::max() / na) {
    fail(ErrorCode::ResultTooLarge, "direct_product: dimension overflow");
  }
  const std::size_t big = na * nb;
  entry_count_within(k, big, max_entries);

  // Offset of ((i_1,j_1),...,(i_k,j_k)) splits into an A part and a B part.
  auto part = [&](std::size_t offset, std::size_t dim, std::size_t scale) {
    std::size_t result = 0;
    std::size_t weight = 1;
    for (std::size_t t = 0; t < k; ++t) {
      result += (offset % dim) * scale * weight;
      offset /= dim;
      weight *= big;
    }
    return result;
  };
  std::vector<std::size_t> b_part(b.size());
  for (std::size_t ob = 0; ob < b.size(); ++ob) b_part[ob] = part(ob, nb, 1);

  DenseTensor<T> out(k, big);
  for (std::size_t oa = 0; oa < a.size(); ++oa) {
    const T& av = a[oa];
    if (is_exact_zero(av)) continue;
    const std::size_t base = part(oa, na, nb);
    for (std::size_t ob = 0; ob < b.size(); ++ob) {
      if (!is_exact_zero(b[ob])) out[base + b_part[ob]] = av * b[ob];
    }
  }
  return out;
}

/// Kronecker product of vectors, i.e. direct_product of order-1 tensors.
template <class T>
std::vector<T> kron(std::span<const T> u, std::span<const T> v) {
  std::vector<T> w;
  w.reserve(u.size() * v.size());
  for (const T& a : u) {
    for (const T& b : v) w.push_back(a * b);
  }
  return w;
}

template <class T>
std::vector<T> kron(const std::vector<T>& u, const std::vector<T>& v) {
  return kron(std::span<const T>(u), std::span<const T>(v));
}

/// Order of A^k for an order-m tensor: (m-1)^k + 1, saturating on overflow.
inline std::size_t power_order(std::size_t m, std::size_t k) {
  const std::size_t grow = checked_pow(m - 1, k);
  return grow == std::numeric_limits<std::size_t>::max() ? grow : grow + 1;
}

/// A^k = (..((A A) A)..) A. The order grows as (m-1)^k + 1, so even n = 2,
/// m = 3 gives 2^(2^k + 1) entries; the size cap is checked before any work.
template <class T>
DenseTensor<T> tensor_power(const DenseTensor<T>& a, std::size_t k,
                            std::size_t max_entries = kDefaultMaxEntries) {
  if (k == 0) fail(ErrorCode::UnsupportedOrder, "tensor_power needs k >= 1");
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "tensor_power needs order >= 2");
  const std::size_t order = power_order(a.order(), k);
  if (order == std::numeric_limits<std::size_t>::max()) {
    fail(ErrorCode::ResultTooLarge, "tensor_power: order overflow");
  }
  entry_count_within(order, a.dim(), max_entries);
  DenseTensor<T> out = a;
  for (std::size_t i = 1; i < k; ++i) out = general_product(out, a, max_entries);
  return out;
}

template <class T>
DenseTensor<T> transpose(const DenseTensor<T>& m) {
  detail::require_matrix(m.order(), "transpose operand");
  const std::size_t n = m.dim();
  DenseTensor<T> out(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = m[i * n + j];
  }
  return out;
}

/// Column j of the "diagonal fibre": (a[i, j, ..., j])_i. Equals A e_j.
template <class T>
std::vector<T> diagonal_fibre(const DenseTensor<T>& a, std::size_t j) {
  const std::size_t n = a.dim();
  std::size_t tail = 0;
  for (std::size_t t = 1; t < a.order(); ++t) tail = tail * n + j;
  const std::size_t tail_count = checked_pow(n, a.order() - 1);
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * tail_count + tail];
  return out;
}

}  // namespace gtp
