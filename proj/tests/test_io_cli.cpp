#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gtp/cli.hpp"
#include "gtp/io.hpp"
#include "support.hpp"

using namespace gtp;
using namespace testing_support;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Scratch directory removed at scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gtp_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string write(const std::string& name, const Json& j) const {
    const auto p = path_ / name;
    std::ofstream(p) << j.dump();
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

const Json kExampleTwoByThree = Json{{"order", 3}, {"dim", 2}, {"entries", {1, 0, 0, 1, 1, 0, 0, 1}}};

}  // namespace

TEST_CASE("rational JSON round trip is exact") {
  Rng rng(70);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_rational_tensor(rng, 3, 2);
    CHECK(rational_tensor_from_json(Json::parse(to_json(a).dump())) == a);
  }
  const Rational big(gtp::Integer("123456789012345678901234567890"), gtp::Integer(7));
  CHECK(rational_from_json(to_json(big)) == big);
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK(rational_from_json(Json("-6/4")) == Rational(-3, 2));
}

TEST_CASE("float JSON round trip is bit-exact") {
  Rng rng(71);
  const auto a = random_real_tensor(rng, 3, 3, -1.0, 1.0);
  CHECK(real_tensor_from_json(Json::parse(to_json(a).dump())) == a);
}

TEST_CASE("sparse tensor input") {
  const Json j{{"order", 3}, {"dim", 2}, {"sparse", {{{1, 2, 2}, "1/2"}, {{2, 1, 1}, 3}}}};
  const auto a = rational_tensor_from_json(j);
  RationalTensor expected(3, 2);
  expected[3] = Rational(1, 2);
  expected[4] = Rational(3);
  CHECK(a == expected);
}

TEST_CASE("malformed input is a ParseError") {
  const auto code_of = [](const Json& j) {
    try {
      (void)rational_tensor_from_json(j);
    } catch (const Error& e) {
      return std::optional<ErrorCode>(e.code());
    }
    return std::optional<ErrorCode>{};
  };
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}, {"entries", {1, 2, 3}}}) == ErrorCode::ParseError);
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}}) == ErrorCode::ParseError);
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}, {"entries", {1, 2, 3, 0.5}}}) == ErrorCode::ParseError);
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}, {"sparse", {{{1, 3}, 1}}}}) == ErrorCode::ParseError);
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}, {"sparse", {{{1, 1}, 1}, {{1, 1}, 2}}}}) == ErrorCode::ParseError);
  CHECK(code_of(Json{{"order", 2}, {"dim", 2}, {"entries", {1, 2, 3, "x/y"}}}) == ErrorCode::ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/gtp.json"), Error);
}

TEST_CASE("hypergraph and permutation JSON are 1-based") {
  const auto h = hypergraph_from_json(Json{{"n", 3}, {"k", 3}, {"edges", {{1, 2, 3}}}});
  CHECK(h.edges() == std::vector<UniformHypergraph::Edge>{{0, 1, 2}});
  CHECK(to_json(h) == Json{{"n", 3}, {"k", 3}, {"edges", {{1, 2, 3}}}});
  const auto p = permutation_from_json(Json{2, 3, 1});
  CHECK(to_json(p) == Json{2, 3, 1});
  CHECK_THROWS_AS(permutation_from_json(Json{1, 1}), Error);
}

TEST_CASE("cli: product and apply") {
  TempDir dir;
  const auto a = dir.write("a.json", Json{{"order", 2}, {"dim", 2}, {"entries", {1, 2, 3, 4}}});
  const auto b = dir.write("b.json", Json{{"order", 2}, {"dim", 2}, {"entries", {0, 1, 1, 0}}});
  const auto r = run({"product", a, b});
  REQUIRE(r.code == 0);
  CHECK(rational_tensor_from_json(r.json()) ==
        RationalTensor(2, 2, {Rational(2), Rational(1), Rational(4), Rational(3)}));

  const auto x = dir.write("x.json", Json{1, "1/2"});
  const auto ax = run({"apply", a, x});
  REQUIRE(ax.code == 0);
  CHECK(rational_vector_from_json(ax.json()) == std::vector<Rational>{Rational(2), Rational(5)});

  const auto fl = run({"--mode", "float", "product", a, b});
  REQUIRE(fl.code == 0);
  CHECK(real_tensor_from_json(fl.json()) == RealTensor(2, 2, {2.0, 1.0, 4.0, 3.0}));
}

TEST_CASE("cli: analyze") {
  TempDir dir;
  const auto r = run({"analyze", dir.write("a.json", kExampleTwoByThree)});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["primitive"] == true);
  CHECK(j["gamma"] == 1);
  CHECK(j["strongly_primitive"] == false);
  CHECK(j["majorization"]["cyclic_index"] == 1);
}

TEST_CASE("cli: census") {
  const auto r = run({"census", "--n", "2", "--m", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t rows = 0;
  Json summary;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    if (j.contains("summary")) {
      summary = j["summary"];
    } else {
      CHECK(j["pattern"] == rows);
      ++rows;
    }
  }
  CHECK(rows == 256);
  CHECK(summary["primitive"] == 48);
  for (const auto& [name, count] : summary["violations"].items()) CHECK(count == 0);

  const auto big = run({"census", "--n", "3", "--m", "3"});
  CHECK(big.code == 1);
  CHECK(big.json()["code"] == "CensusTooLarge");
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  SUBCASE("missing argument") {
    const auto r = run({"product"});
    CHECK(r.code == 2);
    CHECK(r.json()["code"] == "ParseError");
  }
  SUBCASE("unknown subcommand") { CHECK(run({"frobnicate"}).code == 2); }
  SUBCASE("malformed file") {
    const auto p = dir.path("bad.json");
    std::ofstream(p) << "{ not json";
    CHECK(run({"charpoly", p}).code == 2);
  }
  SUBCASE("domain error") {
    const auto a = dir.write("a.json", Json{{"order", 3}, {"dim", 2}, {"entries", {1, 0, 0, 1, 1, 0, 0, 1}}});
    const auto b = dir.write("b.json", Json{{"order", 2}, {"dim", 3}, {"entries", {1, 0, 0, 0, 1, 0, 0, 0, 1}}});
    const auto r = run({"product", a, b});
    CHECK(r.code == 1);
    CHECK(r.json()["code"] == "DimensionMismatch");
  }
  SUBCASE("size cap") {
    const auto a = dir.write("a.json", kExampleTwoByThree);
    const auto r = run({"--cap", "10", "power", a, "--k", "3"});
    CHECK(r.code == 1);
    CHECK(r.json()["code"] == "ResultTooLarge");
  }
  SUBCASE("not converged") {
    const auto a = dir.write("a.json", Json{{"order", 3}, {"dim", 2}, {"entries", {1, 2, 3, 4, 5, 6, 7, 8}}});
    const auto r = run({"--tol", "1e-300", "rho", a, "--max-iter", "2"});
    CHECK(r.code == 1);
    const Json j = r.json();
    CHECK(j["code"] == "NotConverged");
    CHECK(j["bracket"].size() == 2);
  }
}

TEST_CASE("cli: --out writes the file") {
  TempDir dir;
  const auto a = dir.write("a.json", kExampleTwoByThree);
  const auto path = dir.path("result.json");
  const auto r = run({"--out", path, "charpoly", a});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const Json j = read_json_file(path);
  CHECK(j["degree"] == 4);
}

TEST_CASE("cli: charpoly, spectrum and rho") {
  TempDir dir;
  const auto a = dir.write("a.json", kExampleTwoByThree);
  const Json cp = run({"charpoly", a}).json();
  // lambda^2 (lambda - 2)^2 = lambda^4 - 4 lambda^3 + 4 lambda^2.
  CHECK(cp["coeffs"] == Json{"1", "-4", "4", "0", "0"});
  const Json sp = run({"spectrum", a}).json();
  CHECK(sp["spectral_radius"].get<double>() == doctest::Approx(2.0));
  CHECK(sp["roots"].size() == 4);
  const Json rho = run({"rho", a}).json();
  CHECK(rho["rho"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  const auto hist = run({"rho", a, "--history"}).json();
  CHECK(hist.contains("history"));
}

TEST_CASE("cli: hypergraph commands") {
  TempDir dir;
  const auto g = dir.write("g.json", Json{{"n", 3}, {"k", 3}, {"edges", {{1, 2, 3}}}});
  const auto h = dir.write("h.json", Json{{"n", 4}, {"k", 3}, {"edges", {{1, 2, 3}, {2, 3, 4}}}});
  const Json adj = run({"hgraph", "adj", g}).json();
  CHECK(rational_tensor_from_json(adj)[5] == Rational(1, 2));
  const Json cart = run({"hgraph", "cartesian", g, h}).json();
  CHECK(cart["edges"].size() == 3 * 2 + 4 * 1);
  const Json direct = run({"hgraph", "direct", g, h}).json();
  CHECK(direct["n"] == 12);
  const auto check = run({"hgraph", "spectrum-check", g, h});
  REQUIRE(check.code == 0);
  CHECK(check.json()["verified"] == true);
  const auto k2 = dir.write("k2.json", Json{{"n", 2}, {"k", 2}, {"edges", {{1, 2}}}});
  const auto mismatch = run({"hgraph", "cartesian", g, k2});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.json()["code"] == "UniformityMismatch");
}

TEST_CASE("cli: similarity transforms") {
  TempDir dir;
  const auto a = dir.write("a.json", kExampleTwoByThree);
  const auto perm = dir.write("p.json", Json{2, 1});
  const auto r = run({"similar", a, "--perm", perm});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["identity_preserving"] == true);
  const auto moved = rational_tensor_from_json(j["tensor"]);
  // Swapping the two indices maps a[i,j,k] to a[s(i),s(j),s(k)].
  const auto orig = rational_tensor_from_json(kExampleTwoByThree);
  for (std::size_t o = 0; o < 8; ++o) CHECK(moved[o] == orig[7 - o]);
  const auto cp_a = run({"charpoly", a}).json();
  const auto cp_b = run({"charpoly", dir.write("b.json", j["tensor"])}).json();
  CHECK(cp_a["coeffs"] == cp_b["coeffs"]);
}

TEST_CASE("cli: random-tensor is reproducible from the seed") {
  const auto a = run({"--seed", "7", "random-tensor", "--order", "3", "--dim", "3"});
  const auto b = run({"--seed", "7", "random-tensor", "--order", "3", "--dim", "3"});
  const auto c = run({"--seed", "8", "random-tensor", "--order", "3", "--dim", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}
