#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gtp/matrix.hpp"
#include "gtp/products.hpp"

namespace gtp {

/// A bijection sigma on {0, ..., n-1}. Its matrix P has p[i, j] = 1 exactly
/// when j = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) fail(ErrorCode::InvalidPermutation, "images do not form a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    return Permutation(std::move(images));
  }

  /// From the serialized 1-based image array.
  static Permutation from_one_based(std::span<const long long> images) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(images.size());
    for (long long v : images) {
      if (v < 1) fail(ErrorCode::InvalidPermutation, "permutation images are 1-based");
      zero_based.push_back(static_cast<std::size_t>(v - 1));
    }
    return Permutation(std::move(zero_based));
  }

  std::vector<long long> one_based() const {
    std::vector<long long> out;
    for (std::size_t v : images_) out.push_back(static_cast<long long>(v) + 1);
    return out;
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    std::vector<std::size_t> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other(i)];
    return Permutation(std::move(out));
  }

  template <class T>
  DenseTensor<T> matrix() const {
    const std::size_t n = images_.size();
    DenseTensor<T> p(2, n);
    for (std::size_t i = 0; i < n; ++i) p[i * n + images_[i]] = T(1);
    return p;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

template <class T>
struct DiagonalMatrix {
  std::vector<T> d;

  std::size_t size() const noexcept { return d.size(); }

  DenseTensor<T> matrix() const {
    const std::size_t n = d.size();
    DenseTensor<T> out(2, n);
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = d[i];
    return out;
  }

  /// diag(d_i^e) with exact integer powers.
  DiagonalMatrix power(long e) const {
    DiagonalMatrix out;
    for (const T& v : d) out.d.push_back(pow_int(v, e));
    return out;
  }

  void require_invertible() const {
    for (const T& v : d) {
      if (is_exact_zero(v)) fail(ErrorCode::SingularDiagonal, "diagonal matrix has a zero entry");
    }
  }
};

/// (lambda, x) with A x = lambda x^[m-1], or A x = lambda x for E-pairs.
template <class U>
struct EigenPair {
  U lambda;
  std::vector<U> x;
};

/// B = P A P^T for the permutation matrix P of sigma, via the relabelling
/// b[i_1..i_m] = a[sigma(i_1)..sigma(i_m)].
template <class T>
DenseTensor<T> permutation_conjugate(const DenseTensor<T>& a, const Permutation& sigma) {
  detail::require_same_dim(a.dim(), sigma.size(), "permutation_conjugate");
  const std::size_t n = a.dim();
  DenseTensor<T> out(a.order(), n);
  std::vector<std::size_t> idx(a.order(), 0);
  std::size_t dst = 0;
  do {
    std::size_t src = 0;
    for (std::size_t i : idx) src = src * n + sigma(i);
    out[dst++] = a[src];
  } while (next_index(idx, n));
  return out;
}

/// B = D^-(m-1) A D, i.e. b[i_1..i_m] = a[i_1..i_m] d_{i_1}^-(m-1) d_{i_2} ... d_{i_m}.
template <class T>
DenseTensor<T> diagonal_similarity(const DenseTensor<T>& a, const DiagonalMatrix<T>& d) {
  detail::require_same_dim(a.dim(), d.size(), "diagonal_similarity");
  d.require_invertible();
  const std::size_t n = a.dim();
  const long m = static_cast<long>(a.order());
  const DiagonalMatrix<T> lead = d.power(-(m - 1));
  DenseTensor<T> out(a.order(), n);
  std::vector<std::size_t> idx(a.order(), 0);
  std::size_t off = 0;
  do {
    if (!is_exact_zero(a[off])) {
      T v = a[off] * lead.d[idx[0]];
      for (std::size_t j = 1; j < idx.size(); ++j) v *= d.d[idx[j]];
      out[off] = v;
    }
    ++off;
  } while (next_index(idx, n));
  return out;
}

/// The matrices (D^-(m-1), D) whose triple product realizes diagonal similarity.
template <class T>
std::pair<DenseTensor<T>, DenseTensor<T>> diagonal_similarity_factors(const DiagonalMatrix<T>& d,
                                                                      std::size_t order) {
  d.require_invertible();
  return {d.power(-static_cast<long>(order - 1)).matrix(), d.matrix()};
}

/// True iff P I Q = I for the order-m unit tensor, so that A -> PAQ is a
/// similarity. Such P and Q are always invertible; that is re-checked here.
template <class T>
bool check_identity_preserving(const DenseTensor<T>& p, const DenseTensor<T>& q, std::size_t order,
                               magnitude_t<T> tol = magnitude_t<T>(0)) {
  detail::require_matrix(p.order(), "P");
  detail::require_matrix(q.order(), "Q");
  detail::require_same_dim(p.dim(), q.dim(), "check_identity_preserving");
  const auto unit = unit_tensor<T>(order, p.dim());
  const bool preserved = approx_equal(triple_product_matrix(p, unit, q), unit, tol);
  if (preserved && (matrix_rank(p, tol) != p.dim() || matrix_rank(q, tol) != q.dim())) {
    throw std::logic_error("identity-preserving pair with a singular factor");
  }
  return preserved;
}

/// B = P A P^T, entrywise b[i_1..i_m] = sum a[j_1..j_m] p[i_1,j_1] ... p[i_m,j_m].
template <class T>
DenseTensor<T> congruence(const DenseTensor<T>& a, const DenseTensor<T>& p) {
  return triple_product_matrix(p, a, transpose(p));
}

inline constexpr double kOrthogonalityTol = 1e-12;

/// congruence() restricted to real orthogonal P (checked at kOrthogonalityTol
/// in floating mode, exactly in rational mode).
template <class T>
DenseTensor<T> orthogonal_congruence(const DenseTensor<T>& a, const DenseTensor<T>& p) {
  magnitude_t<T> tol(0);
  if constexpr (!ScalarTraits<T>::exact) tol = kOrthogonalityTol;
  if (!is_orthogonal(p, tol)) fail(ErrorCode::NotOrthogonal, "P is not orthogonal");
  return congruence(a, p);
}

namespace detail {

template <class U>
void require_nonzero(std::span<const U> x) {
  if (std::all_of(x.begin(), x.end(), [](const U& v) { return is_exact_zero(v); })) {
    fail(ErrorCode::ZeroVector, "eigenvector must be nonzero");
  }
}

template <class U>
magnitude_t<U> max_norm(std::span<const U> v) {
  magnitude_t<U> best(0);
  for (const U& e : v) best = std::max(best, magnitude(e));
  return best;
}

}  // namespace detail

/// max_i |(Ax)_i - lambda x_i^(m-1)|. The pair counts as verified when this
/// is within the caller's tolerance.
template <class T, class U>
magnitude_t<U> verify_eigenpair(const DenseTensor<T>& a, const EigenPair<U>& pair) {
  detail::require_nonzero<U>(pair.x);
  std::vector<U> r = apply_vector(a, std::span<const U>(pair.x));
  const long m = static_cast<long>(a.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= pair.lambda * pow_int(pair.x[i], m - 1);
  return detail::max_norm<U>(r);
}

/// max_i |(Ax)_i - lambda x_i| for x with x^T x = 1 (within tol).
template <class T, class U>
magnitude_t<U> verify_E_eigenpair(const DenseTensor<T>& a, const EigenPair<U>& pair, magnitude_t<U> tol) {
  U norm2(0);
  for (const U& v : pair.x) norm2 += v * v;
  if (magnitude(U(norm2 - U(1))) > tol) fail(ErrorCode::NotUnitNorm, "x^T x differs from 1");
  std::vector<U> r = apply_vector(a, std::span<const U>(pair.x));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= pair.lambda * pair.x[i];
  return detail::max_norm<U>(r);
}

/// An eigenpair (lambda, x) of B = D^-(m-1) A D becomes (lambda, Dx) for A.
template <class T, class U>
EigenPair<U> transfer_eigenpair_diagonal(const EigenPair<U>& pair_of_b, const DiagonalMatrix<T>& d) {
  detail::require_same_dim(pair_of_b.x.size(), d.size(), "transfer_eigenpair_diagonal");
  d.require_invertible();
  EigenPair<U> out{pair_of_b.lambda, pair_of_b.x};
  for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] *= scalar_cast<U>(d.d[i]);
  return out;
}

/// An E-pair (lambda, x) of A becomes (lambda, Px) for P A P^T, P orthogonal.
template <class T>
EigenPair<T> transfer_E_eigenpair_orthogonal(const EigenPair<T>& pair_of_a, const DenseTensor<T>& p) {
  magnitude_t<T> tol(0);
  if constexpr (!ScalarTraits<T>::exact) tol = kOrthogonalityTol;
  if (!is_orthogonal(p, tol)) fail(ErrorCode::NotOrthogonal, "P is not orthogonal");
  return {pair_of_a.lambda, apply_vector(p, std::span<const T>(pair_of_a.x))};
}

template <class T>
struct StochasticScaling {
  DiagonalMatrix<T> d;
  DenseTensor<T> b;
  T rho;
  /// max_i |(B e)_i - rho|; (1/rho) B is stochastic when this vanishes.
  magnitude_t<T> row_sum_deviation;
};

/// Given the Perron pair (rho, u) of a nonnegative irreducible A, returns
/// D = diag(u) and B = D^-(m-1) A D, whose row sums all equal rho.
/// The pair must verify with residual <= tol * (1 + |rho|), matching the
/// guarantee of power_method_rho.
template <class T>
StochasticScaling<T> stochastic_scaling(const DenseTensor<T>& a, const T& rho, const std::vector<T>& u,
                                        magnitude_t<T> tol) {
  detail::require_same_dim(a.dim(), u.size(), "stochastic_scaling");
  for (const T& v : u) {
    if (!(v > T(0))) fail(ErrorCode::NonPositiveVector, "Perron vector must be positive");
  }
  const auto residual = verify_eigenpair(a, EigenPair<T>{rho, u});
  if (residual > tol * (magnitude_t<T>(1) + magnitude(rho))) {
    fail(ErrorCode::EigenpairResidualTooLarge, "(rho, u) is not an eigenpair within tolerance");
  }
  DiagonalMatrix<T> d{u};
  DenseTensor<T> b = diagonal_similarity(a, d);
  const std::vector<T> ones(a.dim(), T(1));
  const std::vector<T> rows = apply_vector(b, std::span<const T>(ones));
  magnitude_t<T> dev(0);
  for (const T& r : rows) dev = std::max(dev, magnitude(T(r - rho)));
  return {std::move(d), std::move(b), rho, dev};
}

}  // namespace gtp
