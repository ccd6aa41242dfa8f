#pragma once

#include <cstddef>
#include <vector>

#include "gtp/products.hpp"
#include "gtp/tensor.hpp"
#include "gtp/transforms.hpp"

namespace gtp {

/// k-uniform hypergraph on vertices {0, ..., n-1}. Edges are stored as sorted
/// vertex lists in lexicographic order.
class UniformHypergraph {
 public:
  using Edge = std::vector<std::size_t>;

  /// Throws InvalidHypergraph on k < 2, out-of-range or repeated vertices,
  /// wrong edge sizes, or duplicate edges.
  UniformHypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges);

  /// From 1-based vertex lists, as in the JSON format.
  static UniformHypergraph from_one_based(std::size_t n, std::size_t k,
                                          const std::vector<std::vector<long long>>& edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool operator==(const UniformHypergraph&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Edge> edges_;
};

/// Order-k, dimension-n tensor with 1/(k-1)! at every ordering of every edge.
RationalTensor adjacency_tensor(const UniformHypergraph& h);

/// G [] H on n(G) * n(H) vertices, vertex (i, j) encoded as i * n(H) + j:
/// edges {(i, j) : j in f} for each vertex i of G and edge f of H, and
/// {(i, j) : i in e} for each edge e of G and vertex j of H.
UniformHypergraph cartesian_product(const UniformHypergraph& g, const UniformHypergraph& h);

/// G x H: for each edge e of G and f of H, every bijection between e and f
/// gives the edge {(e_t, f_pi(t))}.
UniformHypergraph direct_product_hypergraph(const UniformHypergraph& g, const UniformHypergraph& h);

/// The hypergraph H' with adjacency P_sigma A P_sigma^T: vertex v of H' is
/// vertex sigma(v) of H, so E(H') = { sigma^-1(f) : f in E(H) }.
UniformHypergraph relabel(const UniformHypergraph& h, const Permutation& sigma);

/// A (x) I_m + I_n (x) B for equal orders.
template <class T>
DenseTensor<T> cartesian_sum(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  if (a.order() != b.order()) fail(ErrorCode::OrderMismatch, "cartesian_sum: orders differ");
  const std::size_t k = a.order();
  return direct_product(a, unit_tensor<T>(k, b.dim())) + direct_product(unit_tensor<T>(k, a.dim()), b);
}

template <class T>
struct ProductEigenpairs {
  /// (lambda + mu, u (x) v) for A (x) I + I (x) B.
  EigenPair<T> cartesian;
  /// (lambda mu, u (x) v) for A (x) B.
  EigenPair<T> direct;
};

/// Composes eigenpairs of A and B into eigenpairs of their Cartesian sum and
/// direct product. The tensors fix the orders, which must agree.
template <class T>
ProductEigenpairs<T> compose_product_eigenpairs(const DenseTensor<T>& a, const EigenPair<T>& pair_a,
                                                const DenseTensor<T>& b, const EigenPair<T>& pair_b) {
  if (a.order() != b.order()) {
    fail(ErrorCode::OrderMismatch, "eigenpairs belong to tensors of different orders");
  }
  detail::require_same_dim(a.dim(), pair_a.x.size(), "compose_product_eigenpairs");
  detail::require_same_dim(b.dim(), pair_b.x.size(), "compose_product_eigenpairs");
  std::vector<T> w = kron(pair_a.x, pair_b.x);
  return {EigenPair<T>{T(pair_a.lambda + pair_b.lambda), w}, EigenPair<T>{T(pair_a.lambda * pair_b.lambda), w}};
}

}  // namespace gtp
