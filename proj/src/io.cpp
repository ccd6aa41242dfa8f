#include "gtp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gtp/error.hpp"

namespace gtp {

namespace {

[[noreturn]] void parse_fail(const std::string& message) { fail(ErrorCode::ParseError, message); }

std::size_t positive_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    parse_fail(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

template <class T, class Convert>
DenseTensor<T> tensor_from_json(const Json& j, Convert convert) {
  const std::size_t order = positive_field(j, "order");
  const std::size_t dim = positive_field(j, "dim");
  const std::size_t size = entry_count_within(order, dim, kDefaultMaxEntries);
  const bool dense = j.contains("entries");
  if (dense == j.contains("sparse")) parse_fail("tensor needs exactly one of \"entries\" or \"sparse\"");
  if (dense) {
    const Json& entries = j.at("entries");
    if (!entries.is_array()) parse_fail("\"entries\" must be an array");
    if (entries.size() != size) {
      parse_fail("\"entries\" has " + std::to_string(entries.size()) + " values, expected " + std::to_string(size));
    }
    std::vector<T> values;
    values.reserve(size);
    for (const Json& v : entries) values.push_back(convert(v));
    return DenseTensor<T>(order, dim, std::move(values));
  }
  const Json& sparse = j.at("sparse");
  if (!sparse.is_array()) parse_fail("\"sparse\" must be an array");
  DenseTensor<T> out(order, dim);
  std::set<std::size_t> seen;
  for (const Json& item : sparse) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || item[0].size() != order) {
      parse_fail("sparse items are [[i_1, ..., i_m], value]");
    }
    std::size_t off = 0;
    for (const Json& idx : item[0]) {
      if (!idx.is_number_integer() || idx.get<long long>() < 1 || idx.get<std::size_t>() > dim) {
        parse_fail("sparse index out of range 1.." + std::to_string(dim));
      }
      off = off * dim + (idx.get<std::size_t>() - 1);
    }
    if (!seen.insert(off).second) parse_fail("sparse index listed twice");
    out[off] = convert(item[1]);
  }
  return out;
}

template <class T, class Convert>
std::vector<T> vector_from_json(const Json& j, Convert convert) {
  if (j.is_array()) {
    std::vector<T> out;
    for (const Json& v : j) out.push_back(convert(v));
    if (out.empty()) parse_fail("vector must be nonempty");
    return out;
  }
  DenseTensor<T> t = tensor_from_json<T>(j, convert);
  if (t.order() != 1) parse_fail("expected a vector (order-1 tensor)");
  return t.storage();
}

template <class T>
Json tensor_to_json(const DenseTensor<T>& t) {
  Json entries = Json::array();
  for (const T& v : t.entries()) entries.push_back(to_json(v));
  return Json{{"order", t.order()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    parse_fail(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) parse_fail("exact mode needs integers or \"p/q\" strings, got " + j.dump());
  parse_fail("expected a scalar, got " + j.dump());
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  parse_fail("expected a scalar, got " + j.dump());
}

Json to_json(const Rational& x) { return format_rational(x); }
Json to_json(double x) { return x; }

RationalTensor rational_tensor_from_json(const Json& j) {
  return tensor_from_json<Rational>(j, rational_from_json);
}

RealTensor real_tensor_from_json(const Json& j) { return tensor_from_json<double>(j, real_from_json); }

Json to_json(const RationalTensor& t) { return tensor_to_json(t); }
Json to_json(const RealTensor& t) { return tensor_to_json(t); }

std::vector<Rational> rational_vector_from_json(const Json& j) {
  return vector_from_json<Rational>(j, rational_from_json);
}

std::vector<double> real_vector_from_json(const Json& j) { return vector_from_json<double>(j, real_from_json); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("permutation must be an array of 1-based images");
  std::vector<long long> images;
  for (const Json& v : j) {
    if (!v.is_number_integer()) parse_fail("permutation images must be integers");
    images.push_back(v.get<long long>());
  }
  return Permutation::from_one_based(images);
}

Json to_json(const Permutation& p) { return p.one_based(); }

UniformHypergraph hypergraph_from_json(const Json& j) {
  const std::size_t n = positive_field(j, "n");
  const std::size_t k = positive_field(j, "k");
  if (!j.contains("edges") || !j.at("edges").is_array()) parse_fail("hypergraph needs an \"edges\" array");
  std::vector<std::vector<long long>> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array()) parse_fail("each edge must be an array of vertices");
    std::vector<long long> edge;
    for (const Json& v : e) {
      if (!v.is_number_integer()) parse_fail("vertices must be integers");
      edge.push_back(v.get<long long>());
    }
    edges.push_back(std::move(edge));
  }
  return UniformHypergraph::from_one_based(n, k, edges);
}

Json to_json(const UniformHypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json edge = Json::array();
    for (std::size_t v : e) edge.push_back(v + 1);
    edges.push_back(std::move(edge));
  }
  return Json{{"n", h.n()}, {"k", h.k()}, {"edges", std::move(edges)}};
}

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.descending()) coeffs.push_back(to_json(c));
  return Json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Json roots_to_json(const std::vector<Complex>& roots) {
  Json out = Json::array();
  for (const Complex& z : roots) out.push_back(Json::array({z.real(), z.imag()}));
  return out;
}

}  // namespace gtp
