#include "gtp/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtp/error.hpp"

namespace gtp {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::from_ascending(std::vector<Rational> coeffs) {
  Polynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::from_descending(std::vector<Rational> coeffs) {
  std::reverse(coeffs.begin(), coeffs.end());
  return from_ascending(std::move(coeffs));
}

Polynomial Polynomial::monomial(std::size_t e, const Rational& c) {
  std::vector<Rational> coeffs(e + 1);
  coeffs[e] = c;
  return from_ascending(std::move(coeffs));
}

Polynomial Polynomial::linear_root(const Rational& r) { return from_ascending({Rational(-r), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const Rational& Polynomial::coefficient(std::size_t j) const {
  if (j >= coeffs_.size()) throw std::out_of_range("coefficient index beyond degree");
  return coeffs_[coeffs_.size() - 1 - j];
}

Rational Polynomial::coefficient_of_power(std::size_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : Rational(0);
}

std::vector<Rational> Polynomial::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational lead = leading();
  for (Rational& c : p.coeffs_) c /= lead;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t e = 1; e < coeffs_.size(); ++e) d[e - 1] = coeffs_[e] * Rational(static_cast<long>(e));
  return from_ascending(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Polynomial::evaluate(const Complex& z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Rational& c : p.coeffs_) c = -c;
  return p;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    const Rational& c = coeffs_[e];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || e == 0) out += format_rational(mag);
    if (e > 0) {
      if (!unit) out += "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = num.ascending();
  const std::vector<Rational>& d = den.ascending();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {Polynomial(), num};
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rational c = rem[k] / d[dd];
    quot[k - dd] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d[j];
  }
  rem.resize(dd);
  return {Polynomial::from_ascending(std::move(quot)), Polynomial::from_ascending(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial pow(const Polynomial& p, std::size_t e) {
  Polynomial result(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial fp = f.derivative();
  const Polynomial a0 = gcd(f, fp);
  Polynomial b = exact_divide(f, a0);
  Polynomial c = exact_divide(fp, a0);
  Polynomial d = c - b.derivative();
  for (std::size_t i = 1; b.degree() >= 1; ++i) {
    const Polynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace gtp
