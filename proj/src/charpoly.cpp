#include "gtp/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtp/error.hpp"

namespace gtp {

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial polynomial_determinant(std::vector<Polynomial> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("polynomial_determinant: matrix is not n x n");
  if (n == 0) return Polynomial(1);
  bool negate = false;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k].is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[r * n + c]);
      negate = !negate;
    }
    const Polynomial& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = exact_divide(pivot * m[i * n + j] - m[i * n + k] * m[k * n + j], prev);
      }
      m[i * n + k] = Polynomial();
    }
    prev = pivot;
  }
  Polynomial det = m[n * n - 1];
  return negate ? -det : det;
}

Polynomial sylvester_resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.coeffs.empty() || g.coeffs.empty() || f.is_zero() || g.is_zero()) {
    fail(ErrorCode::DegenerateForm, "binary form is identically zero");
  }
  const std::size_t d1 = f.degree();
  const std::size_t d2 = g.degree();
  const std::size_t n = d1 + d2;
  std::vector<Polynomial> s(n * n);
  for (std::size_t r = 0; r < d2; ++r) {
    for (std::size_t i = 0; i <= d1; ++i) s[r * n + r + i] = f.coeffs[i];
  }
  for (std::size_t r = 0; r < d1; ++r) {
    for (std::size_t i = 0; i <= d2; ++i) s[(d2 + r) * n + r + i] = g.coeffs[i];
  }
  return polynomial_determinant(std::move(s), n);
}

namespace {

/// Rows of (lambda_coeff * I + sign * A) x as binary forms.
std::pair<BinaryForm, BinaryForm> forms_of(const RationalTensor& a, const Rational& sign, bool with_lambda) {
  if (a.dim() != 2) fail(ErrorCode::UnsupportedDimension, "binary forms need a dimension-2 tensor");
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "binary forms need order >= 2");
  const std::size_t d = a.order() - 1;
  const std::size_t tail_count = std::size_t{1} << d;
  BinaryForm rows[2];
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Rational> sums(d + 1);
    // A set bit in the tail index means that factor is x2.
    for (std::size_t t = 0; t < tail_count; ++t) {
      sums[static_cast<std::size_t>(__builtin_popcountll(t))] += a[i * tail_count + t];
    }
    for (std::size_t j = 0; j <= d; ++j) rows[i].coeffs.emplace_back(Rational(sign * sums[j]));
  }
  if (with_lambda) {
    rows[0].coeffs[0] += Polynomial::monomial(1);
    rows[1].coeffs[d] += Polynomial::monomial(1);
  }
  return {rows[0], rows[1]};
}

}  // namespace

std::pair<BinaryForm, BinaryForm> characteristic_forms(const RationalTensor& a) {
  return forms_of(a, Rational(-1), true);
}

Polynomial charpoly_dim2(const RationalTensor& a) {
  const auto [f, g] = characteristic_forms(a);
  const Polynomial res = sylvester_resultant(f, g);
  const auto expected = static_cast<long>(2 * (a.order() - 1));
  if (res.degree() != expected) throw std::logic_error("characteristic polynomial has unexpected degree");
  return res.monic();
}

Polynomial charpoly_matrix(const RationalTensor& a) {
  if (a.order() != 2) fail(ErrorCode::UnsupportedOrder, "charpoly_matrix needs an order-2 tensor");
  const std::size_t n = a.dim();
  std::vector<Polynomial> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = Polynomial(Rational(-a[i * n + j]));
      if (i == j) m[i * n + j] += Polynomial::monomial(1);
    }
  }
  return polynomial_determinant(std::move(m), n).monic();
}

Polynomial characteristic_polynomial(const RationalTensor& a) {
  if (a.dim() == 2) return charpoly_dim2(a);
  if (a.order() == 2) return charpoly_matrix(a);
  fail(ErrorCode::UnsupportedDimension,
       "characteristic polynomials are supported for dimension 2 or order 2 only");
}

Rational hyperdeterminant_dim2(const RationalTensor& a) {
  const auto [f, g] = forms_of(a, Rational(1), false);
  if (f.is_zero() || g.is_zero()) return Rational(0);
  return sylvester_resultant(f, g).coefficient_of_power(0);
}

bool check_rotation_symmetry(const Polynomial& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("rotation order must be positive");
  if (p.is_zero()) return true;
  for (std::size_t j = 0; j <= static_cast<std::size_t>(p.degree()); ++j) {
    if (j % k != 0 && !p.coefficient(j).is_zero()) return false;
  }
  return true;
}

std::size_t count_peripheral(std::span<const Complex> roots, double tol) {
  double rho = 0.0;
  for (const Complex& z : roots) rho = std::max(rho, std::abs(z));
  const double slack = tol * std::max(1.0, rho);
  std::vector<Complex> distinct;
  for (const Complex& z : roots) {
    if (std::abs(z) < rho - slack) continue;
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const Complex& w) { return std::abs(w - z) <= slack; });
    if (!seen) distinct.push_back(z);
  }
  return distinct.size();
}

std::vector<Complex> spectrum_dim2(const RationalTensor& a) { return polynomial_roots(charpoly_dim2(a)); }

std::size_t cyclic_index_dim2(const RationalTensor& a, double tol) {
  const auto roots = spectrum_dim2(a);
  return count_peripheral(roots, tol);
}

}  // namespace gtp
