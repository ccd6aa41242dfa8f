#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gtp/scalar.hpp"

namespace gtp {

/// Univariate polynomial with exact rational coefficients.
///
/// The public coefficient view is descending: coefficient(j) is a_j, the
/// coefficient of x^(d-j). Storage is ascending and trimmed so that the
/// leading coefficient is nonzero (the zero polynomial stores nothing).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial from_ascending(std::vector<Rational> coeffs);
  static Polynomial from_descending(std::vector<Rational> coeffs);
  /// x^e * c
  static Polynomial monomial(std::size_t e, const Rational& c = Rational(1));
  /// (x - r)
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const Rational& leading() const;
  /// a_j of x^(d-j).
  const Rational& coefficient(std::size_t j) const;
  /// Coefficient of x^e (0 beyond the degree).
  Rational coefficient_of_power(std::size_t e) const;
  std::vector<Rational> descending() const;
  const std::vector<Rational>& ascending() const noexcept { return coeffs_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  Complex evaluate(const Complex& z) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& o) const = default;

  /// Human-readable form in the variable `var`, e.g. "x^2 - 3/2*x + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Quotient of an exact division; throws std::logic_error if a remainder is left.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, std::size_t e);

/// Square-free decomposition p = c * prod_i f_i^i (Yun). Returns the pairs
/// (f_i, i) for nonconstant monic f_i, in increasing multiplicity.
std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p);

}  // namespace gtp
