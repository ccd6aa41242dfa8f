#pragma once

// Shared fixtures and independent reference implementations for the tests.
// The oracles here evaluate the defining sums term by term and never call the
// library's product routines.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gtp/pattern.hpp"
#include "gtp/products.hpp"
#include "gtp/tensor.hpp"

namespace testing_support {

using gtp::DenseTensor;
using gtp::Rational;
using gtp::RationalTensor;
using gtp::RealTensor;

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p/q with |p| <= 5, 1 <= q <= 4.
inline Rational random_rational(Rng& rng) {
  return Rational(gtp::Integer(uniform_int(rng, -5, 5)), gtp::Integer(uniform_int(rng, 1, 4)));
}

inline Rational random_nonzero_rational(Rng& rng) {
  Rational r;
  do r = random_rational(rng);
  while (r.is_zero());
  return r;
}

inline RationalTensor random_rational_tensor(Rng& rng, std::size_t order, std::size_t dim) {
  RationalTensor t(order, dim);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = random_rational(rng);
  return t;
}

/// Entries uniform in [lo, hi].
inline RealTensor random_real_tensor(Rng& rng, std::size_t order, std::size_t dim, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RealTensor t(order, dim);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = dist(rng);
  return t;
}

/// Positive tensor with rational entries k/8, k in 1..16, so exact and
/// floating views agree.
inline RationalTensor random_positive_rational_tensor(Rng& rng, std::size_t order, std::size_t dim) {
  RationalTensor t(order, dim);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rational(gtp::Integer(uniform_int(rng, 1, 16)), gtp::Integer(8));
  return t;
}

/// 0/1 tensor realizing a pattern.
inline RationalTensor indicator_tensor(const gtp::PatternTensor& p) {
  RationalTensor t(p.order(), p.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.test(i)) t[i] = Rational(1);
  }
  return t;
}

/// 0-based multi-index of `offset` in an order-`order` tensor of dimension n.
inline std::vector<std::size_t> digits(std::size_t offset, std::size_t order, std::size_t n) {
  std::vector<std::size_t> d(order);
  for (std::size_t j = order; j-- > 0;) {
    d[j] = offset % n;
    offset /= n;
  }
  return d;
}

inline std::size_t offset(const std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t off = 0;
  for (std::size_t v : idx) off = off * n + v;
  return off;
}

/// Definition of the general product summed term by term:
/// c[i, a_1..a_{m-1}] = sum_{i_2..i_m} a[i, i_2..i_m] prod_j b[i_j, a_{j-1}].
template <class T>
DenseTensor<T> naive_general_product(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  const std::size_t n = a.dim();
  const std::size_t m = a.order();
  const std::size_t k = b.order();
  const std::size_t out_order = (m - 1) * (k - 1) + 1;
  DenseTensor<T> c(out_order, n);
  const std::size_t tails = gtp::checked_pow(n, m - 1);
  for (std::size_t oc = 0; oc < c.size(); ++oc) {
    const auto ci = digits(oc, out_order, n);
    T sum(0);
    for (std::size_t t = 0; t < tails; ++t) {
      const auto ti = digits(t, m - 1, n);
      std::vector<std::size_t> ai{ci[0]};
      ai.insert(ai.end(), ti.begin(), ti.end());
      T term = a[offset(ai, n)];
      for (std::size_t j = 0; j + 1 < m; ++j) {
        std::vector<std::size_t> bi{ti[j]};
        for (std::size_t q = 0; q + 1 < k; ++q) bi.push_back(ci[1 + j * (k - 1) + q]);
        term *= b[offset(bi, n)];
      }
      sum += term;
    }
    c[oc] = sum;
  }
  return c;
}

/// (Ax)_i by summing every term.
template <class T>
std::vector<T> naive_apply(const DenseTensor<T>& a, const std::vector<T>& x) {
  const std::size_t n = a.dim();
  std::vector<T> y(n, T(0));
  for (std::size_t o = 0; o < a.size(); ++o) {
    const auto idx = digits(o, a.order(), n);
    T term = a[o];
    for (std::size_t j = 1; j < idx.size(); ++j) term *= x[idx[j]];
    y[idx[0]] += term;
  }
  return y;
}

/// (PAQ)[i_1..i_m] = sum_{j} a[j_1..j_m] p[i_1, j_1] q[j_2, i_2] ... q[j_m, i_m].
template <class T>
DenseTensor<T> naive_triple_product(const DenseTensor<T>& p, const DenseTensor<T>& a, const DenseTensor<T>& q) {
  const std::size_t n = a.dim();
  const std::size_t m = a.order();
  DenseTensor<T> out(m, n);
  for (std::size_t oi = 0; oi < out.size(); ++oi) {
    const auto i = digits(oi, m, n);
    T sum(0);
    for (std::size_t oj = 0; oj < a.size(); ++oj) {
      const auto j = digits(oj, m, n);
      T term = a[oj] * p[i[0] * n + j[0]];
      for (std::size_t t = 1; t < m; ++t) term *= q[j[t] * n + i[t]];
      sum += term;
    }
    out[oi] = sum;
  }
  return out;
}

/// (A (x) B)[(i_1,j_1)..(i_k,j_k)] = a[i_1..i_k] b[j_1..j_k], pair (i, j) -> i * m + j.
template <class T>
DenseTensor<T> naive_direct_product(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  const std::size_t k = a.order();
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  DenseTensor<T> out(k, n * m);
  for (std::size_t o = 0; o < out.size(); ++o) {
    const auto pairs = digits(o, k, n * m);
    std::vector<std::size_t> ia;
    std::vector<std::size_t> ib;
    for (std::size_t p : pairs) {
      ia.push_back(p / m);
      ib.push_back(p % m);
    }
    out[o] = a[offset(ia, n)] * b[offset(ib, m)];
  }
  return out;
}

/// a[i, j, ..., j] != 0 for all i, j, read straight from a dense tensor.
template <class T>
bool dense_essentially_positive(const DenseTensor<T>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> idx(a.order(), j);
      idx[0] = i;
      if (gtp::is_exact_zero(a[offset(idx, n)])) return false;
    }
  }
  return true;
}

template <class T>
bool dense_positive(const DenseTensor<T>& a) {
  for (const T& v : a.entries()) {
    if (!(v > T(0))) return false;
  }
  return true;
}

/// Boolean matrix product of n x n 0/1 matrices stored row-major.
inline std::vector<int> bool_matmul(const std::vector<int>& x, const std::vector<int>& y, std::size_t n) {
  std::vector<int> z(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (y[k * n + j]) z[i * n + j] = 1;
  return z;
}

}  // namespace testing_support
