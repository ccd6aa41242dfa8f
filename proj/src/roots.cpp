#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtp/charpoly.hpp"
#include "gtp/error.hpp"

namespace gtp {

namespace {

struct Horner {
  Complex value;
  Complex slope;
};

Horner horner(const std::vector<double>& asc, Complex z) {
  Complex p(asc.back());
  Complex dp(0.0);
  for (std::size_t e = asc.size() - 1; e-- > 0;) {
    dp = dp * z + p;
    p = p * z + asc[e];
  }
  return {p, dp};
}

double scaled_residual(const std::vector<double>& asc, Complex z) {
  double scale = 0.0;
  double zpow = 1.0;
  const double r = std::abs(z);
  for (double c : asc) {
    scale += std::fabs(c) * zpow;
    zpow *= r;
  }
  const double value = std::abs(horner(asc, z).value);
  return scale == 0.0 ? value : value / scale;
}

std::vector<double> to_double_ascending(const Polynomial& p) {
  std::vector<double> asc;
  for (const Rational& c : p.ascending()) asc.push_back(to_double(c));
  return asc;
}

/// Roots of a square-free polynomial with exact coefficients.
std::vector<Complex> squarefree_roots(const Polynomial& f) {
  const Polynomial g = f.monic();
  const auto d = static_cast<std::size_t>(g.degree());
  const std::vector<double> asc = to_double_ascending(g);
  if (d == 1) return {Complex(-asc[0])};

  // Aberth-Ehrlich simultaneous iteration from a circle enclosing all roots.
  // Fujiwara bound on root moduli.
  double radius = 0.0;
  for (std::size_t e = 0; e < d; ++e) {
    const double c = e == 0 ? std::fabs(asc[0]) / 2.0 : std::fabs(asc[e]);
    radius = std::max(radius, std::pow(c, 1.0 / static_cast<double>(d - e)));
  }
  radius = radius > 0.0 ? 2.0 * radius : 1.0;
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
  }
  constexpr int kMaxIter = 2000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const Horner h = horner(asc, z[k]);
      if (h.value == Complex(0.0)) continue;
      const Complex ratio = h.value / h.slope;
      Complex repulsion(0.0);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-16) break;
  }
  // A few Newton steps on the exact factor tighten each simple root.
  for (Complex& root : z) {
    for (int i = 0; i < 3; ++i) {
      const Horner h = horner(asc, root);
      if (h.slope == Complex(0.0)) break;
      root -= h.value / h.slope;
    }
  }
  return z;
}

}  // namespace

double max_scaled_residual(const Polynomial& p, std::span<const Complex> roots) {
  const std::vector<double> asc = to_double_ascending(p);
  double worst = 0.0;
  for (const Complex& z : roots) worst = std::max(worst, scaled_residual(asc, z));
  return worst;
}

std::vector<Complex> polynomial_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::RootRefinementFailed, "the zero polynomial has no finite root set");
  std::vector<Complex> roots;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    const std::vector<Complex> simple = squarefree_roots(factor);
    const std::vector<double> asc = to_double_ascending(factor.monic());
    for (const Complex& z : simple) {
      if (scaled_residual(asc, z) > kRootResidualTol) {
        fail(ErrorCode::RootRefinementFailed, "root of " + factor.to_string() + " did not certify");
      }
      for (std::size_t i = 0; i < multiplicity; ++i) roots.push_back(z);
    }
  }
  if (max_scaled_residual(p, roots) > kRootResidualTol) {
    fail(ErrorCode::RootRefinementFailed, "roots of " + p.to_string() + " did not certify");
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace gtp
