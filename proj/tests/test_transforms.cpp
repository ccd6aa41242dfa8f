#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gtp/spectral.hpp"
#include "gtp/transforms.hpp"
#include "support.hpp"

using namespace gtp;
using namespace testing_support;

namespace {

DiagonalMatrix<Rational> random_diagonal(Rng& rng, std::size_t n) {
  DiagonalMatrix<Rational> d;
  for (std::size_t i = 0; i < n; ++i) d.d.push_back(random_nonzero_rational(rng));
  return d;
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Invariant under every permutation of the indices.
template <class T>
bool is_supersymmetric(const DenseTensor<T>& a) {
  const std::size_t n = a.dim();
  for (std::size_t o = 0; o < a.size(); ++o) {
    auto idx = digits(o, a.order(), n);
    std::sort(idx.begin(), idx.end());
    do {
      if (a[offset(idx, n)] != a[o]) return false;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return true;
}

RationalTensor symmetrize(const RationalTensor& a) {
  const std::size_t n = a.dim();
  RationalTensor s(a.order(), n);
  for (std::size_t o = 0; o < a.size(); ++o) {
    auto idx = digits(o, a.order(), n);
    std::sort(idx.begin(), idx.end());
    Rational sum(0);
    std::size_t count = 0;
    do {
      sum += a[offset(idx, n)];
      ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    s[o] = sum / Rational(static_cast<long>(count));
  }
  return s;
}

RealTensor rotation(double theta) {
  return RealTensor(2, 2, {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)});
}

}  // namespace

TEST_CASE("permutation validation and algebra") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  CHECK_THROWS_AS(Permutation({0, 2}), Error);
  const std::vector<long long> one_based{2, 3, 1};
  const Permutation p = Permutation::from_one_based(one_based);
  CHECK(p.one_based() == one_based);
  CHECK(p.compose(p.inverse()) == Permutation::identity(3));
  const auto m = p.matrix<Rational>();
  CHECK(m.at({0, 1}) == 1);
  CHECK(m.at({2, 0}) == 1);
  try {
    const std::vector<long long> bad{0, 1};
    (void)Permutation::from_one_based(bad);
    FAIL("expected InvalidPermutation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPermutation);
  }
}

TEST_CASE("permutation conjugation") {
  Rng rng(11);
  SUBCASE("identity permutation") {
    const auto a = random_rational_tensor(rng, 3, 3);
    CHECK(permutation_conjugate(a, Permutation::identity(3)) == a);
  }
  SUBCASE("unit tensor is fixed") {
    for (int t = 0; t < 5; ++t) {
      CHECK(permutation_conjugate(unit_tensor<Rational>(4, 3), random_permutation(rng, 3)) ==
            unit_tensor<Rational>(4, 3));
    }
  }
  SUBCASE("swap moves a_111 to b_222") {
    RationalTensor a(3, 2);
    a.at({0, 0, 0}) = Rational(5);
    const auto b = permutation_conjugate(a, Permutation({1, 0}));
    CHECK(b.at({1, 1, 1}) == 5);
    CHECK(b.at({0, 0, 0}) == 0);
  }
  SUBCASE("equals P A P^T and preserves supersymmetry") {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      const auto a = random_rational_tensor(rng, m, n);
      const auto sigma = random_permutation(rng, n);
      const auto p = sigma.matrix<Rational>();
      CHECK(permutation_conjugate(a, sigma) == naive_triple_product(p, a, transpose(p)));
      const auto s = symmetrize(a);
      REQUIRE(is_supersymmetric(s));
      CHECK(is_supersymmetric(permutation_conjugate(s, sigma)));
    }
  }
  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(permutation_conjugate(unit_tensor<Rational>(3, 3), Permutation::identity(2)), Error);
  }
}

TEST_CASE("diagonal similarity") {
  Rng rng(12);
  SUBCASE("D = I") {
    const auto a = random_rational_tensor(rng, 3, 3);
    CHECK(diagonal_similarity(a, DiagonalMatrix<Rational>{std::vector<Rational>(3, Rational(1))}) == a);
  }
  SUBCASE("unit tensor is fixed") {
    for (std::size_t m = 2; m <= 4; ++m) {
      CHECK(diagonal_similarity(unit_tensor<Rational>(m, 3), random_diagonal(rng, 3)) == unit_tensor<Rational>(m, 3));
    }
  }
  SUBCASE("closed form equals the triple product") {
    for (int t = 0; t < 10; ++t) {
      const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      const auto a = random_rational_tensor(rng, m, 3);
      const auto d = random_diagonal(rng, 3);
      const auto [left, right] = diagonal_similarity_factors(d, m);
      CHECK(diagonal_similarity(a, d) == naive_triple_product(left, a, right));
      CHECK(diagonal_similarity(a, d) == triple_product_matrix(left, a, right));
    }
  }
  SUBCASE("singular diagonal") {
    try {
      (void)diagonal_similarity(unit_tensor<Rational>(3, 2), DiagonalMatrix<Rational>{{Rational(1), Rational(0)}});
      FAIL("expected SingularDiagonal");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SingularDiagonal);
    }
  }
}

TEST_CASE("identity-preserving pairs") {
  Rng rng(13);
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto sigma = random_permutation(rng, 3);
    const auto p = sigma.matrix<Rational>();
    CHECK(check_identity_preserving(p, transpose(p), m));
    const auto d = random_diagonal(rng, 3);
    const auto [left, right] = diagonal_similarity_factors(d, m);
    CHECK(check_identity_preserving(left, right, m));
  }
  // A dense invertible P with Q = P^-1 preserves I only for matrices.
  RationalTensor p(2, 2, {Rational(1), Rational(1), Rational(0), Rational(1)});
  const auto q = matrix_inverse(p, Rational(0));
  CHECK(check_identity_preserving(p, q, 2));
  CHECK_FALSE(check_identity_preserving(p, q, 3));
  int preserved = 0;
  for (int t = 0; t < 10; ++t) {
    auto r = random_rational_tensor(rng, 2, 3);
    if (matrix_rank(r, Rational(0)) < 3) continue;
    preserved += check_identity_preserving(r, matrix_inverse(r, Rational(0)), 3);
  }
  CHECK(preserved == 0);
}

TEST_CASE("similarity is symmetric") {
  Rng rng(14);
  const auto a = random_rational_tensor(rng, 3, 3);
  const auto sigma = random_permutation(rng, 3);
  const auto b = permutation_conjugate(a, sigma);
  CHECK(permutation_conjugate(b, sigma.inverse()) == a);
  const auto d = random_diagonal(rng, 3);
  DiagonalMatrix<Rational> inv;
  for (const auto& v : d.d) inv.d.push_back(Rational(1) / v);
  CHECK(diagonal_similarity(diagonal_similarity(a, d), inv) == a);
}

TEST_CASE("congruence") {
  Rng rng(15);
  const auto a = random_rational_tensor(rng, 3, 3);
  CHECK(congruence(a, identity_matrix<Rational>(3)) == a);
  for (int t = 0; t < 5; ++t) {
    const auto p = random_rational_tensor(rng, 2, 3);
    const auto r = random_rational_tensor(rng, 2, 3);
    CHECK(congruence(a, p) == naive_triple_product(p, a, transpose(p)));
    CHECK(congruence(congruence(a, p), r) == congruence(a, general_product(r, p)));
  }
  SUBCASE("orthogonal matrices") {
    Rng local(16);
    const auto m = random_real_tensor(local, 2, 2, -1.0, 1.0);
    const auto q = rotation(0.7);
    const auto b = orthogonal_congruence(m, q);
    CHECK(approx_equal(b, general_product(general_product(q, m), transpose(q)), 1e-14));
    CHECK_THROWS_AS(orthogonal_congruence(m, RealTensor(2, 2, {1.0, 1.0, 0.0, 1.0})), Error);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(congruence(a, identity_matrix<Rational>(2)), Error);
  }
}

TEST_CASE("eigenpair verification") {
  SUBCASE("unit tensor with e_1") {
    const EigenPair<Rational> pair{Rational(1), {Rational(1), Rational(0), Rational(0)}};
    CHECK(verify_eigenpair(unit_tensor<Rational>(3, 3), pair) == 0);
  }
  SUBCASE("stochastic tensor with the all-ones vector") {
    Rng rng(17);
    RationalTensor a = random_positive_rational_tensor(rng, 3, 3);
    const auto rows = naive_apply(a, std::vector<Rational>(3, Rational(1)));
    for (std::size_t o = 0; o < a.size(); ++o) a[o] /= rows[o / 9];
    const EigenPair<Rational> pair{Rational(1), std::vector<Rational>(3, Rational(1))};
    CHECK(verify_eigenpair(a, pair) == 0);
    EigenPair<Rational> perturbed = pair;
    perturbed.x[0] += Rational(1, 100);
    CHECK(verify_eigenpair(a, perturbed) > Rational(1, 10000));
  }
  SUBCASE("zero vector") {
    try {
      (void)verify_eigenpair(unit_tensor<Rational>(3, 2), EigenPair<Rational>{Rational(1), {Rational(0), Rational(0)}});
      FAIL("expected ZeroVector");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroVector);
    }
  }
}

TEST_CASE("E-eigenpairs and orthogonal transfer") {
  const EigenPair<double> e1{1.0, {1.0, 0.0}};
  CHECK(verify_E_eigenpair(identity_matrix<double>(2), e1, 1e-12) == 0.0);
  try {
    (void)verify_E_eigenpair(identity_matrix<double>(2), EigenPair<double>{1.0, {1.0, 1.0}}, 1e-12);
    FAIL("expected NotUnitNorm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitNorm);
  }

  Rng rng(18);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  constexpr double kTol = 1e-12;
  for (int t = 0; t < 20; ++t) {
    // A = A0 + r x x ... x makes (lambda, x) an E-pair whenever x^T x = 1.
    const double phi = angle(rng);
    const std::vector<double> x{std::cos(phi), std::sin(phi)};
    const double lambda = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    RealTensor a = random_real_tensor(rng, 3, 2, -1.0, 1.0);
    const auto ax = naive_apply(a, x);
    for (std::size_t o = 0; o < a.size(); ++o) {
      const auto idx = digits(o, 3, 2);
      a[o] += (lambda * x[idx[0]] - ax[idx[0]]) * x[idx[1]] * x[idx[2]];
    }
    const EigenPair<double> pair{lambda, x};
    REQUIRE(verify_E_eigenpair(a, pair, kTol) <= kTol);
    const auto p = rotation(angle(rng));
    const auto moved = transfer_E_eigenpair_orthogonal(pair, p);
    CHECK(moved.lambda == lambda);
    CHECK(verify_E_eigenpair(orthogonal_congruence(a, p), moved, kTol) <= 10 * kTol);
  }
}

TEST_CASE("eigenpair transfer through diagonal similarity") {
  Rng rng(19);
  const auto d = random_diagonal(rng, 2);
  SUBCASE("D = I leaves the pair unchanged") {
    const EigenPair<Rational> pair{Rational(3), {Rational(1), Rational(2)}};
    const auto same = transfer_eigenpair_diagonal(pair, DiagonalMatrix<Rational>{{Rational(1), Rational(1)}});
    CHECK(same.lambda == pair.lambda);
    CHECK(same.x == pair.x);
  }
  SUBCASE("exact pair of B gives an exact pair of A") {
    for (int t = 0; t < 10; ++t) {
      // A stochastic-like tensor: A e = 2 e, so (2, e) is a pair of A and
      // (2, D^-1 e) is a pair of B = D^-(m-1) A D.
      RationalTensor a = random_positive_rational_tensor(rng, 3, 2);
      const auto rows = naive_apply(a, std::vector<Rational>(2, Rational(1)));
      for (std::size_t o = 0; o < a.size(); ++o) a[o] = Rational(2) * a[o] / rows[o / 4];
      const auto b = diagonal_similarity(a, d);
      EigenPair<Rational> pair_b{Rational(2), {}};
      for (const auto& v : d.d) pair_b.x.push_back(Rational(1) / v);
      REQUIRE(verify_eigenpair(b, pair_b) == 0);
      const auto pair_a = transfer_eigenpair_diagonal(pair_b, d);
      CHECK(pair_a.lambda == 2);
      CHECK(verify_eigenpair(a, pair_a) == 0);
    }
  }
  SUBCASE("singular D") {
    CHECK_THROWS_AS(transfer_eigenpair_diagonal(EigenPair<Rational>{Rational(1), {Rational(1), Rational(1)}},
                                                DiagonalMatrix<Rational>{{Rational(0), Rational(1)}}),
                    Error);
  }
}

TEST_CASE("stochastic scaling") {
  SUBCASE("a stochastic tensor is its own scaling") {
    Rng rng(20);
    RationalTensor a = random_positive_rational_tensor(rng, 3, 3);
    const auto rows = naive_apply(a, std::vector<Rational>(3, Rational(1)));
    for (std::size_t o = 0; o < a.size(); ++o) a[o] /= rows[o / 9];
    const auto s = stochastic_scaling(a, Rational(1), std::vector<Rational>(3, Rational(1)), Rational(0));
    CHECK(s.b == a);
    CHECK(s.row_sum_deviation == 0);
  }
  SUBCASE("Perron pair from power iteration") {
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
      const RealTensor a = random_real_tensor(rng, 3, 3, 0.05, 1.0);
      const PerronResult r = power_method_rho(a);
      const auto s = stochastic_scaling(a, r.rho, r.u, 1e-10);
      CHECK(s.row_sum_deviation <= 1e-8);
      for (double v : s.b.entries()) CHECK(v >= 0.0);
    }
  }
  SUBCASE("preconditions") {
    const RealTensor a = unit_tensor<double>(3, 2) + RealTensor(3, 2, std::vector<double>(8, 1.0));
    try {
      (void)stochastic_scaling(a, 5.0, {1.0, 0.0}, 1e-10);
      FAIL("expected NonPositiveVector");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonPositiveVector);
    }
    try {
      (void)stochastic_scaling(a, 4.0, {1.0, 1.0}, 1e-10);
      FAIL("expected EigenpairResidualTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EigenpairResidualTooLarge);
    }
  }
}
