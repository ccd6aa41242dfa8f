#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gtp/charpoly.hpp"
#include "gtp/hypergraph.hpp"
#include "gtp/polynomial.hpp"
#include "gtp/tensor.hpp"
#include "gtp/transforms.hpp"

namespace gtp {

using Json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

/// Exact scalars accept integers and "p" / "p/q" strings; floating scalars
/// also accept any JSON number.
Rational rational_from_json(const Json& j);
double real_from_json(const Json& j);

Json to_json(const Rational& x);
Json to_json(double x);

/// Dense {"order", "dim", "entries"} or sparse {"order", "dim", "sparse":
/// [[[i_1, ..., i_m], value], ...]} with 1-based indices.
RationalTensor rational_tensor_from_json(const Json& j);
RealTensor real_tensor_from_json(const Json& j);

/// Always the dense form.
Json to_json(const RationalTensor& t);
Json to_json(const RealTensor& t);

/// A vector given either as an order-1 tensor or a bare JSON array.
std::vector<Rational> rational_vector_from_json(const Json& j);
std::vector<double> real_vector_from_json(const Json& j);

/// 1-based image array.
Permutation permutation_from_json(const Json& j);
Json to_json(const Permutation& p);

/// {"n", "k", "edges"} with 1-based vertices.
UniformHypergraph hypergraph_from_json(const Json& j);
Json to_json(const UniformHypergraph& h);

/// {"degree", "coeffs"} with coefficients in descending powers.
Json to_json(const Polynomial& p);

/// [[re, im], ...].
Json roots_to_json(const std::vector<Complex>& roots);

}  // namespace gtp
