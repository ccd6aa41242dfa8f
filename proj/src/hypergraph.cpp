#include "gtp/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace gtp {

namespace {

void require_same_uniformity(const UniformHypergraph& g, const UniformHypergraph& h) {
  if (g.k() != h.k()) {
    fail(ErrorCode::UniformityMismatch, "hypergraphs are " + std::to_string(g.k()) + "- and " +
                                            std::to_string(h.k()) + "-uniform");
  }
}

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n_ == 0) fail(ErrorCode::InvalidHypergraph, "hypergraph needs at least one vertex");
  if (k_ < 2) fail(ErrorCode::InvalidHypergraph, "uniformity must be at least 2");
  for (Edge& e : edges_) {
    if (e.size() != k_) {
      fail(ErrorCode::InvalidHypergraph, "edge of size " + std::to_string(e.size()) + " in a " +
                                             std::to_string(k_) + "-uniform hypergraph");
    }
    std::sort(e.begin(), e.end());
    if (e.back() >= n_) fail(ErrorCode::InvalidHypergraph, "edge vertex out of range");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(ErrorCode::InvalidHypergraph, "edge repeats a vertex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    fail(ErrorCode::InvalidHypergraph, "duplicate edge");
  }
}

UniformHypergraph UniformHypergraph::from_one_based(std::size_t n, std::size_t k,
                                                    const std::vector<std::vector<long long>>& edges) {
  std::vector<Edge> zero_based;
  for (const auto& e : edges) {
    Edge out;
    for (long long v : e) {
      if (v < 1) fail(ErrorCode::InvalidHypergraph, "vertices are 1-based");
      out.push_back(static_cast<std::size_t>(v - 1));
    }
    zero_based.push_back(std::move(out));
  }
  return UniformHypergraph(n, k, std::move(zero_based));
}

RationalTensor adjacency_tensor(const UniformHypergraph& h) {
  const std::size_t k = h.k();
  const std::size_t n = h.n();
  RationalTensor a(k, n);
  const Rational weight(Integer(1), Integer(factorial(k - 1)));
  for (UniformHypergraph::Edge e : h.edges()) {
    do {
      std::size_t off = 0;
      for (std::size_t v : e) off = off * n + v;
      a[off] = weight;
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return a;
}

UniformHypergraph cartesian_product(const UniformHypergraph& g, const UniformHypergraph& h) {
  require_same_uniformity(g, h);
  const std::size_t m = h.n();
  std::vector<UniformHypergraph::Edge> edges;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (const auto& f : h.edges()) {
      UniformHypergraph::Edge e;
      for (std::size_t j : f) e.push_back(i * m + j);
      edges.push_back(std::move(e));
    }
  }
  for (const auto& f : g.edges()) {
    for (std::size_t j = 0; j < m; ++j) {
      UniformHypergraph::Edge e;
      for (std::size_t i : f) e.push_back(i * m + j);
      edges.push_back(std::move(e));
    }
  }
  return UniformHypergraph(g.n() * m, g.k(), std::move(edges));
}

UniformHypergraph direct_product_hypergraph(const UniformHypergraph& g, const UniformHypergraph& h) {
  require_same_uniformity(g, h);
  const std::size_t m = h.n();
  std::vector<UniformHypergraph::Edge> edges;
  for (const auto& e : g.edges()) {
    for (UniformHypergraph::Edge f : h.edges()) {
      do {
        UniformHypergraph::Edge out;
        for (std::size_t t = 0; t < e.size(); ++t) out.push_back(e[t] * m + f[t]);
        edges.push_back(std::move(out));
      } while (std::next_permutation(f.begin(), f.end()));
    }
  }
  return UniformHypergraph(g.n() * m, g.k(), std::move(edges));
}

UniformHypergraph relabel(const UniformHypergraph& h, const Permutation& sigma) {
  if (sigma.size() != h.n()) fail(ErrorCode::DimensionMismatch, "permutation size differs from vertex count");
  const Permutation inv = sigma.inverse();
  std::vector<UniformHypergraph::Edge> edges;
  for (const auto& f : h.edges()) {
    UniformHypergraph::Edge e;
    for (std::size_t v : f) e.push_back(inv(v));
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(h.n(), h.k(), std::move(edges));
}

}  // namespace gtp
