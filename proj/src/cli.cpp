#include "gtp/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>

#include "CLI11.hpp"

#include "gtp/census.hpp"
#include "gtp/charpoly.hpp"
#include "gtp/hypergraph.hpp"
#include "gtp/io.hpp"
#include "gtp/pattern.hpp"
#include "gtp/products.hpp"
#include "gtp/spectral.hpp"
#include "gtp/transforms.hpp"

namespace gtp {

namespace {

struct Options {
  std::string mode;
  double tol = -1.0;
  std::size_t cap = kDefaultMaxEntries;
  std::string out_path;
  std::uint64_t seed = 0;
};

template <class T>
DenseTensor<T> load_tensor(const std::string& path) {
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_tensor_from_json(read_json_file(path));
  } else {
    return real_tensor_from_json(read_json_file(path));
  }
}

template <class T>
std::vector<T> load_vector(const std::string& path) {
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_vector_from_json(read_json_file(path));
  } else {
    return real_vector_from_json(read_json_file(path));
  }
}

template <class T>
Json vector_json(const std::vector<T>& v) {
  return to_json(DenseTensor<T>::from_vector(v));
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json error_json(std::string_view code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

/// Runs `body` with T = Rational in exact mode and T = double in float mode.
template <class Body>
Json dispatch_mode(const std::string& mode, Body&& body) {
  if (mode == "float") return body.template operator()<double>();
  return body.template operator()<Rational>();
}

Json pattern_report_json(const PatternReport& r) {
  return Json{{"essentially_positive", r.essentially_positive},
              {"irreducible", r.irreducible},
              {"primitive", r.primitive()},
              {"gamma", optional_json(r.gamma)},
              {"strongly_primitive", r.strongly_primitive()},
              {"strong_degree", optional_json(r.strong_degree)},
              {"majorization",
               Json{{"irreducible", r.majorization_irreducible},
                    {"primitive", r.majorization_gamma.has_value()},
                    {"gamma", optional_json(r.majorization_gamma)},
                    {"cyclic_index", optional_json(r.majorization_cyclic_index)}}}};
}

Json census_summary_json(const CensusSummary& s) {
  Json hist = Json::object();
  for (const auto& [gamma, count] : s.gamma_histogram) hist[std::to_string(gamma)] = count;
  return Json{{"summary",
               Json{{"n", s.n},
                    {"m", s.m},
                    {"patterns", s.patterns},
                    {"essentially_positive", s.essentially_positive},
                    {"irreducible", s.irreducible},
                    {"primitive", s.primitive},
                    {"strongly_primitive", s.strongly_primitive},
                    {"max_gamma", s.max_gamma},
                    {"max_strong_degree", s.max_strong_degree},
                    {"gamma_histogram", hist},
                    {"violations",
                     Json{{"gamma_bound", s.gamma_bound_violations},
                          {"majorization_bound", s.majorization_bound_violations},
                          {"strong_not_primitive", s.strong_not_primitive},
                          {"majorization_irreducible_not_irreducible",
                           s.majorization_irreducible_not_irreducible}}}}}};
}

Json perron_json(const PerronResult& r) {
  Json j{{"rho", r.rho},
         {"bracket", Json::array({r.bracket.lo, r.bracket.hi})},
         {"iterations", r.iterations},
         {"residual", r.residual},
         {"vector", r.u}};
  if (!r.history.empty()) {
    Json h = Json::array();
    for (const Bracket& b : r.history) h.push_back(Json::array({b.lo, b.hi}));
    j["history"] = std::move(h);
  }
  return j;
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

class Output {
 public:
  Output(std::ostream& out, const std::string& path) : out_(&out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(ErrorCode::ParseError, "cannot write " + path);
      out_ = &file_;
    }
  }

  void document(const Json& j) { *out_ << j.dump(2) << '\n'; }
  void line(const Json& j) { *out_ << j.dump() << '\n'; }

 private:
  std::ostream* out_;
  std::ofstream file_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"General tensor products, spectra and primitivity analysis", "gtp"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--mode", opt.mode, "Scalar arithmetic: exact (rationals) or float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", opt.tol, "Tolerance for floating computations");
  app.add_option("--cap", opt.cap, "Maximum number of entries of any product or power");
  app.add_option("--out", opt.out_path, "Write the result here instead of standard output");
  app.add_option("--seed", opt.seed, "Seed for random fixture generation");

  std::function<Json()> action;
  std::function<void(Output&)> streaming;

  std::string path_a;
  std::string path_b;

  auto* product = app.add_subcommand("product", "General product AB");
  product->add_option("A", path_a)->required();
  product->add_option("B", path_b)->required();
  product->callback([&] {
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        return to_json(general_product(load_tensor<T>(path_a), load_tensor<T>(path_b), opt.cap));
      });
    };
  });

  std::size_t power_k = 1;
  auto* power = app.add_subcommand("power", "Tensor power A^k (order (m-1)^k + 1)");
  power->add_option("A", path_a)->required();
  power->add_option("--k", power_k, "Exponent")->required()->check(CLI::PositiveNumber);
  power->callback([&] {
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        return to_json(tensor_power(load_tensor<T>(path_a), power_k, opt.cap));
      });
    };
  });

  auto* apply = app.add_subcommand("apply", "Vector application Ax");
  apply->add_option("A", path_a)->required();
  apply->add_option("x", path_b)->required();
  apply->callback([&] {
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        return vector_json(apply_vector(load_tensor<T>(path_a), load_vector<T>(path_b)));
      });
    };
  });

  auto* kron_cmd = app.add_subcommand("kron", "Direct product A (x) B");
  kron_cmd->add_option("A", path_a)->required();
  kron_cmd->add_option("B", path_b)->required();
  kron_cmd->callback([&] {
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        return to_json(direct_product(load_tensor<T>(path_a), load_tensor<T>(path_b), opt.cap));
      });
    };
  });

  std::string perm_path;
  std::string diag_path;
  std::string p_path;
  std::string q_path;
  auto* similar = app.add_subcommand("similar", "Similarity transform PAQ");
  similar->add_option("A", path_a)->required();
  auto* perm_opt = similar->add_option("--perm", perm_path, "1-based permutation images (P A P^T)");
  auto* diag_opt = similar->add_option("--diag", diag_path, "Diagonal D (D^-(m-1) A D)");
  auto* p_opt = similar->add_option("--P", p_path, "Left matrix P");
  auto* q_opt = similar->add_option("--Q", q_path, "Right matrix Q");
  perm_opt->excludes(diag_opt)->excludes(p_opt)->excludes(q_opt);
  diag_opt->excludes(p_opt)->excludes(q_opt);
  p_opt->needs(q_opt);
  q_opt->needs(p_opt);
  similar->callback([&] {
    if (perm_path.empty() && diag_path.empty() && p_path.empty()) {
      throw CLI::RequiredError("one of --perm, --diag or --P/--Q");
    }
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        const DenseTensor<T> a = load_tensor<T>(path_a);
        if (!perm_path.empty()) {
          const Permutation sigma = permutation_from_json(read_json_file(perm_path));
          return Json{{"identity_preserving", true}, {"tensor", to_json(permutation_conjugate(a, sigma))}};
        }
        if (!diag_path.empty()) {
          const DiagonalMatrix<T> d{load_vector<T>(diag_path)};
          return Json{{"identity_preserving", true}, {"tensor", to_json(diagonal_similarity(a, d))}};
        }
        const DenseTensor<T> p = load_tensor<T>(p_path);
        const DenseTensor<T> q = load_tensor<T>(q_path);
        magnitude_t<T> tol(0);
        if constexpr (!ScalarTraits<T>::exact) tol = opt.tol > 0 ? opt.tol : 1e-12;
        const bool preserving = check_identity_preserving(p, q, a.order(), tol);
        return Json{{"identity_preserving", preserving}, {"tensor", to_json(triple_product_matrix(p, a, q))}};
      });
    };
  });

  bool require_orthogonal = false;
  auto* congruent = app.add_subcommand("congruent", "Congruence P A P^T");
  congruent->add_option("A", path_a)->required();
  congruent->add_option("P", path_b)->required();
  congruent->add_flag("--orthogonal", require_orthogonal, "Require P to be orthogonal");
  congruent->callback([&] {
    action = [&] {
      return dispatch_mode(opt.mode, [&]<class T>() {
        const DenseTensor<T> a = load_tensor<T>(path_a);
        const DenseTensor<T> p = load_tensor<T>(path_b);
        return to_json(require_orthogonal ? orthogonal_congruence(a, p) : congruence(a, p));
      });
    };
  });

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial det(lambda I - A)");
  charpoly->add_option("A", path_a)->required();
  charpoly->callback([&] {
    action = [&] {
      const Polynomial p = characteristic_polynomial(load_tensor<Rational>(path_a));
      Json j = to_json(p);
      j["polynomial"] = p.to_string("lambda");
      j["roots"] = roots_to_json(polynomial_roots(p));
      return j;
    };
  });

  auto* spectrum = app.add_subcommand("spectrum", "All eigenvalues with multiplicity");
  spectrum->add_option("A", path_a)->required();
  spectrum->callback([&] {
    action = [&] {
      const Polynomial p = characteristic_polynomial(load_tensor<Rational>(path_a));
      const std::vector<Complex> roots = polynomial_roots(p);
      double rho = 0.0;
      for (const Complex& z : roots) rho = std::max(rho, std::abs(z));
      return Json{{"roots", roots_to_json(roots)},
                  {"spectral_radius", rho},
                  {"peripheral_count", count_peripheral(roots)},
                  {"max_scaled_residual", max_scaled_residual(p, roots)}};
    };
  });

  IterationConfig iter;
  auto* rho_cmd = app.add_subcommand("rho", "Spectral radius and Perron vector by power iteration");
  rho_cmd->add_option("A", path_a)->required();
  rho_cmd->add_option("--max-iter", iter.max_iter, "Iteration limit")->check(CLI::PositiveNumber);
  rho_cmd->add_option("--shift", iter.shift, "Shift s in A + s I")->check(CLI::NonNegativeNumber);
  rho_cmd->add_flag("--history", iter.record_history, "Include the bracket after every iteration");
  rho_cmd->callback([&] {
    action = [&] {
      if (opt.tol > 0) iter.tol = opt.tol;
      return perron_json(power_method_rho(load_tensor<double>(path_a), iter));
    };
  });

  auto* hgraph = app.add_subcommand("hgraph", "Uniform hypergraph operations");
  hgraph->require_subcommand(1);
  auto* adj = hgraph->add_subcommand("adj", "Adjacency tensor");
  adj->add_option("H", path_a)->required();
  adj->callback([&] {
    action = [&] { return to_json(adjacency_tensor(hypergraph_from_json(read_json_file(path_a)))); };
  });
  auto* cart = hgraph->add_subcommand("cartesian", "Cartesian product G [] H");
  cart->add_option("G", path_a)->required();
  cart->add_option("H", path_b)->required();
  cart->callback([&] {
    action = [&] {
      return to_json(cartesian_product(hypergraph_from_json(read_json_file(path_a)),
                                       hypergraph_from_json(read_json_file(path_b))));
    };
  });
  auto* direct = hgraph->add_subcommand("direct", "Direct product G x H");
  direct->add_option("G", path_a)->required();
  direct->add_option("H", path_b)->required();
  direct->callback([&] {
    action = [&] {
      return to_json(direct_product_hypergraph(hypergraph_from_json(read_json_file(path_a)),
                                               hypergraph_from_json(read_json_file(path_b))));
    };
  });
  auto* check = hgraph->add_subcommand("spectrum-check", "Compose Perron pairs of G and H and verify them on the products");
  check->add_option("G", path_a)->required();
  check->add_option("H", path_b)->required();
  check->callback([&] {
    action = [&] {
      if (opt.tol > 0) iter.tol = opt.tol;
      const UniformHypergraph g = hypergraph_from_json(read_json_file(path_a));
      const UniformHypergraph h = hypergraph_from_json(read_json_file(path_b));
      if (g.k() != h.k()) fail(ErrorCode::UniformityMismatch, "hypergraphs have different uniformity");
      const RealTensor a = adjacency_tensor(g).cast<double>();
      const RealTensor b = adjacency_tensor(h).cast<double>();
      const PerronResult pa = power_method_rho(a, iter);
      const PerronResult pb = power_method_rho(b, iter);
      const auto pairs = compose_product_eigenpairs(a, EigenPair<double>{pa.rho, pa.u}, b,
                                                    EigenPair<double>{pb.rho, pb.u});
      const RealTensor cart_adj = adjacency_tensor(cartesian_product(g, h)).cast<double>();
      const RealTensor direct_adj = adjacency_tensor(direct_product_hypergraph(g, h)).cast<double>();
      // adjacency(G x H) = (k-1)! (A (x) B), so its eigenvalue is (k-1)! lambda mu.
      const double scale = factorial(g.k() - 1);
      const EigenPair<double> direct_pair{scale * pairs.direct.lambda, pairs.direct.x};
      const double cart_res = verify_eigenpair(cart_adj, pairs.cartesian);
      const double direct_res = verify_eigenpair(direct_adj, direct_pair);
      const double tol = opt.tol > 0 ? opt.tol : 1e-8;
      return Json{{"G", Json{{"rho", pa.rho}, {"residual", pa.residual}}},
                  {"H", Json{{"rho", pb.rho}, {"residual", pb.residual}}},
                  {"cartesian", Json{{"lambda", pairs.cartesian.lambda}, {"residual", cart_res}}},
                  {"direct", Json{{"lambda", direct_pair.lambda}, {"residual", direct_res}}},
                  {"verified", cart_res <= tol && direct_res <= tol}};
    };
  });

  double eps = 0.0;
  auto* analyze = app.add_subcommand("analyze", "Primitivity analysis of the zero pattern");
  analyze->add_option("A", path_a)->required();
  analyze->add_option("--eps", eps, "Float mode: entries with |a| <= eps count as zero")
      ->check(CLI::NonNegativeNumber);
  analyze->callback([&] {
    action = [&] {
      const PatternTensor p = opt.mode == "float" ? zero_pattern(load_tensor<double>(path_a), eps)
                                                  : zero_pattern(load_tensor<Rational>(path_a));
      return pattern_report_json(analyze_pattern(p));
    };
  });

  std::size_t census_n = 2;
  std::size_t census_m = 3;
  CensusOptions census_opt;
  bool summary_only = false;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive analysis of all zero patterns");
  census_cmd->add_option("--n", census_n, "Dimension")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--m", census_m, "Order")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--jobs", census_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--max-patterns", census_opt.max_patterns, "Refuse censuses larger than this");
  census_cmd->add_flag("--summary-only", summary_only, "Print only the aggregate line");
  census_cmd->callback([&] {
    streaming = [&](Output& sink) {
      std::function<void(const PatternReport&)> row;
      if (!summary_only) {
        row = [&](const PatternReport& r) {
          Json j = pattern_report_json(r);
          j["pattern"] = r.code;
          sink.line(j);
        };
      }
      sink.line(census_summary_json(census(census_n, census_m, census_opt, row)));
    };
  });

  std::size_t rand_order = 3;
  std::size_t rand_dim = 2;
  long rand_max = 9;
  bool rand_positive = false;
  auto* random = app.add_subcommand("random-tensor", "Random nonnegative integer tensor fixture (uses --seed)");
  random->add_option("--order", rand_order, "Order m")->check(CLI::PositiveNumber);
  random->add_option("--dim", rand_dim, "Dimension n")->check(CLI::PositiveNumber);
  random->add_option("--max", rand_max, "Largest entry")->check(CLI::PositiveNumber);
  random->add_flag("--positive", rand_positive, "Entries at least 1");
  random->callback([&] {
    action = [&] {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<long> dist(rand_positive ? 1 : 0, rand_max);
      RationalTensor t(rand_order, rand_dim);
      entry_count_within(rand_order, rand_dim, opt.cap);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rational(dist(rng));
      return to_json(t);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("ParseError", e.what()).dump(2) << '\n';
    err << app.help();
    return 2;
  }

  try {
    Output sink(out, opt.out_path);
    if (streaming) {
      streaming(sink);
    } else {
      sink.document(action());
    }
    return 0;
  } catch (const NotConvergedError& e) {
    Json j = error_json(to_string(e.code()), e.what());
    j["bracket"] = Json::array({e.bracket().lo, e.bracket().hi});
    j["iterations"] = e.iterations();
    out << j.dump(2) << '\n';
    return 1;
  } catch (const Error& e) {
    out << error_json(to_string(e.code()), e.what()).dump(2) << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const Json::exception& e) {
    out << error_json("ParseError", e.what()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << error_json("InternalError", e.what()).dump(2) << '\n';
    return 1;
  }
}

}  // namespace gtp
