#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtp/error.hpp"
#include "gtp/tensor.hpp"

namespace gtp {

struct IterationConfig {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  /// Iterate on A + shift * I; a positive shift handles cyclic spectra.
  double shift = 1.0;
  bool record_history = false;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

struct PerronResult {
  double rho = 0.0;
  /// Positive eigenvector, normalized to max entry 1.
  std::vector<double> u;
  std::size_t iterations = 0;
  /// Bracket on rho(A) at termination.
  Bracket bracket;
  /// max_i |(Au)_i - rho u_i^(m-1)|.
  double residual = 0.0;
  /// Bracket on rho(A) after each iteration, when requested.
  std::vector<Bracket> history;
};

/// Thrown when max_iter is reached; carries the last bracket on rho(A).
class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& message, Bracket bracket, std::size_t iterations)
      : Error(ErrorCode::NotConverged, message), bracket_(bracket), iterations_(iterations) {}

  const Bracket& bracket() const noexcept { return bracket_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  Bracket bracket_;
  std::size_t iterations_;
};

/// Componentwise min and max of (Ax)_i / x_i^(m-1) for x > 0. For a
/// nonnegative irreducible A the interval contains rho(A).
Bracket min_max_bracket(const RealTensor& a, std::span<const double> x);

/// Spectral radius and Perron vector of a nonnegative tensor by the shifted
/// power iteration x <- normalize((A x + shift x^[m-1])^[1/(m-1)]), stopping
/// once the min/max bracket is narrower than cfg.tol. Inputs must be
/// nonnegative (NegativeEntry) and weakly irreducible (NotIrreducible). The
/// returned pair is re-verified: residual <= tol * (1 + rho) or
/// EigenpairResidualTooLarge.
PerronResult power_method_rho(const RealTensor& a, const IterationConfig& cfg = {});

}  // namespace gtp
