#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gtp/polynomial.hpp"
#include "gtp/tensor.hpp"

namespace gtp {

/// Binary form sum_i c_i x1^(d-i) x2^i whose coefficients are polynomials in
/// a parameter (lambda for characteristic polynomials).
struct BinaryForm {
  std::vector<Polynomial> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const;
};

/// Determinant of a square matrix (row-major, side n) over Q[x] by
/// fraction-free Bareiss elimination with row pivoting.
Polynomial polynomial_determinant(std::vector<Polynomial> matrix, std::size_t n);

/// Resultant of two binary forms: the determinant of their Sylvester matrix,
/// normalized so that Res(x1^d, x2^e) = 1. Vanishes exactly where the forms
/// share a nontrivial common zero.
Polynomial sylvester_resultant(const BinaryForm& f, const BinaryForm& g);

/// The two binary forms (lambda I - A)x for an order-m dimension-2 tensor.
std::pair<BinaryForm, BinaryForm> characteristic_forms(const RationalTensor& a);

/// det(lambda I - A) for a dimension-2 tensor of any order m >= 2: monic of
/// degree 2(m-1).
Polynomial charpoly_dim2(const RationalTensor& a);

/// det(lambda I - A) for a square matrix of any dimension.
Polynomial charpoly_matrix(const RationalTensor& a);

/// Dispatches to charpoly_dim2 or charpoly_matrix; any other shape
/// (n >= 3 with m >= 3) throws UnsupportedDimension.
Polynomial characteristic_polynomial(const RationalTensor& a);

/// det(A), the resultant of A x = 0, for dimension 2.
Rational hyperdeterminant_dim2(const RationalTensor& a);

inline constexpr double kRootResidualTol = 1e-8;

/// All complex roots with multiplicity. Multiplicities come from an exact
/// square-free decomposition; each square-free factor is solved by Aberth
/// iteration and Newton polishing. Every root is certified by its scaled
/// residual |p(z)| / sum |a_j| |z|^j <= kRootResidualTol, else
/// RootRefinementFailed.
std::vector<Complex> polynomial_roots(const Polynomial& p);

/// Largest scaled residual of `roots` against p.
double max_scaled_residual(const Polynomial& p, std::span<const Complex> roots);

/// Eigenvalues of a dimension-2 tensor with multiplicity: the 2(m-1) roots of
/// charpoly_dim2.
std::vector<Complex> spectrum_dim2(const RationalTensor& a);

/// True iff a_j = 0 whenever k does not divide j (descending coefficients),
/// i.e. p(x) = x^r f(x^k) and the roots are invariant under rotation by 2pi/k.
bool check_rotation_symmetry(const Polynomial& p, std::size_t k);

/// Number of distinct values of maximal modulus among `roots`; values within
/// tol * max(1, rho) of each other are identified.
std::size_t count_peripheral(std::span<const Complex> roots, double tol = 1e-8);

/// Cyclic index of a dimension-2 tensor from its full spectrum.
std::size_t cyclic_index_dim2(const RationalTensor& a, double tol = 1e-8);

}  // namespace gtp
