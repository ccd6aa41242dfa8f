#include "gtp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gtp/pattern.hpp"
#include "gtp/products.hpp"
#include "gtp/transforms.hpp"

namespace gtp {

namespace {

Bracket bracket_of(std::span<const double> ax, std::span<const double> x, std::size_t order, double shift) {
  Bracket b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  const double e = static_cast<double>(order - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ratio = ax[i] / std::pow(x[i], e) - shift;
    b.lo = std::min(b.lo, ratio);
    b.hi = std::max(b.hi, ratio);
  }
  return b;
}

void require_positive(std::span<const double> x) {
  for (double v : x) {
    if (!(v > 0.0)) fail(ErrorCode::NonPositiveVector, "vector must be componentwise positive");
  }
}

}  // namespace

Bracket min_max_bracket(const RealTensor& a, std::span<const double> x) {
  detail::require_same_dim(a.dim(), x.size(), "min_max_bracket");
  require_positive(x);
  const std::vector<double> ax = apply_vector(a, x);
  return bracket_of(ax, x, a.order(), 0.0);
}

PerronResult power_method_rho(const RealTensor& a, const IterationConfig& cfg) {
  if (!(cfg.tol > 0.0) || cfg.max_iter < 1 || !(cfg.shift >= 0.0)) {
    throw std::invalid_argument("power_method_rho: need tol > 0, max_iter >= 1, shift >= 0");
  }
  if (a.order() < 2) fail(ErrorCode::UnsupportedOrder, "power iteration needs order >= 2");
  for (double v : a.entries()) {
    if (v < 0.0 || std::isnan(v)) fail(ErrorCode::NegativeEntry, "power iteration needs a nonnegative tensor");
  }
  if (!is_weakly_irreducible(zero_pattern(a))) {
    fail(ErrorCode::NotIrreducible, "tensor is not (weakly) irreducible");
  }

  const std::size_t n = a.dim();
  const double e = static_cast<double>(a.order() - 1);
  PerronResult result;
  std::vector<double> x(n, 1.0);
  Bracket b;
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    std::vector<double> y = apply_vector(a, std::span<const double>(x));
    for (std::size_t i = 0; i < n; ++i) y[i] += cfg.shift * std::pow(x[i], e);
    require_positive(y);
    b = bracket_of(y, x, a.order(), cfg.shift);
    if (cfg.record_history) result.history.push_back(b);
    if (b.width() <= cfg.tol) {
      result.iterations = it;
      break;
    }
    double top = 0.0;
    for (double& v : y) {
      v = std::pow(v, 1.0 / e);
      top = std::max(top, v);
    }
    for (double& v : y) v /= top;
    x = std::move(y);
  }
  if (result.iterations == 0) {
    throw NotConvergedError("power iteration did not converge in " + std::to_string(cfg.max_iter) + " steps",
                            b, cfg.max_iter);
  }
  result.rho = 0.5 * (b.lo + b.hi);
  result.bracket = b;
  result.u = x;
  result.residual = verify_eigenpair(a, EigenPair<double>{result.rho, x});
  if (result.residual > cfg.tol * (1.0 + std::fabs(result.rho))) {
    fail(ErrorCode::EigenpairResidualTooLarge, "power iteration result failed re-verification");
  }
  return result;
}

}  // namespace gtp
