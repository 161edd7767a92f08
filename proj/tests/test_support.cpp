#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lipkit/common/config.hpp"
#include "lipkit/common/csv.hpp"
#include "lipkit/common/expr.hpp"
#include "lipkit/common/manifest.hpp"
#include "lipkit/common/multi_index.hpp"
#include "lipkit/common/parallel.hpp"
#include "lipkit/common/point.hpp"
#include "lipkit/common/rng.hpp"

using namespace lipkit;

namespace {
std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}
}  // namespace

TEST_CASE("point arithmetic") {
  Point a(1.0, 2.0);
  Point b(0.5, -1.0, 3.0);
  CHECK(a[2] == 0.0);
  Point c = a + 2.0 * b;
  CHECK(c[0] == doctest::Approx(2.0));
  CHECK(c[1] == doctest::Approx(0.0));
  CHECK(c[2] == doctest::Approx(6.0));
  CHECK(dot(a, b) == doctest::Approx(0.5 - 2.0));
  CHECK(norm(Point(3.0, 4.0)) == doctest::Approx(5.0));
}

TEST_CASE("multi-index enumeration is graded lex") {
  auto v = multi_indices_upto(2, 2);
  REQUIRE(v.size() == 6);  // C(2+2,2)
  const char* want[] = {"(0,0)", "(1,0)", "(0,1)", "(2,0)", "(1,1)", "(0,2)"};
  for (size_t i = 0; i < 6; ++i) CHECK(v[i].str() == want[i]);
  for (size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] < v[i + 1]);

  CHECK(multi_indices_upto(3, 2).size() == 10);  // C(3+2,3)
  CHECK(multi_indices_exact(3, 2).size() == 6);
  CHECK(multi_indices_exact(2, 5).size() == 6);
}

TEST_CASE("multi-index arithmetic") {
  MultiIndex a(2, {2, 1, 0});
  CHECK(a.order() == 3);
  CHECK(a.factorial() == doctest::Approx(2.0));
  CHECK(a.monomial(Point(3.0, 2.0)) == doctest::Approx(9.0 * 2.0));
  MultiIndex b = MultiIndex::unit(2, 0);
  CHECK((a + b).str() == "(3,1)");
  CHECK((a - b).str() == "(1,1)");
  CHECK(a.contains(b));
  CHECK(!b.contains(a));
  CHECK_THROWS(b - a);
  CHECK(factorial(6) == doctest::Approx(720.0));
  CHECK(binomial(5, 2) == doctest::Approx(10.0));
}

TEST_CASE("expression parsing and evaluation") {
  CHECK(Expr::parse("2*3+4").eval(Point(0, 0)) == doctest::Approx(10.0));
  CHECK(Expr::parse("2+3*4").eval(Point(0, 0)) == doctest::Approx(14.0));
  CHECK(Expr::parse("-x + y/4").eval(Point(5, 8)) == doctest::Approx(-3.0));
  CHECK(Expr::parse("pow(x, 3)").eval(Point(2, 0)) == doctest::Approx(8.0));
  CHECK(Expr::parse("sin(pi/2) + cos(0)").eval(Point(0, 0)) == doctest::Approx(2.0));
  CHECK(Expr::parse("log(e)").eval(Point(0, 0)) == doctest::Approx(1.0));
  CHECK(Expr::parse("abs(-2.5)").eval(Point(0, 0)) == doctest::Approx(2.5));
  CHECK(Expr::parse("x1*x2*x3").eval(Point(2, 3, 4)) == doctest::Approx(24.0));
  CHECK(Expr::parse("(1+2)*(3-1)").eval(Point(0, 0)) == doctest::Approx(6.0));
  CHECK(Expr::parse("0.05*sin(3*x)").eval(Point(1.0, 0)) ==
        doctest::Approx(0.05 * std::sin(3.0)));
  CHECK_THROWS_AS(Expr::parse("2+"), ExprError);
  CHECK_THROWS_AS(Expr::parse("foo(2)"), ExprError);
  CHECK_THROWS_AS(Expr::parse("(1+2"), ExprError);
  try {
    Expr::parse("1 + @");
  } catch (const ExprError& e) {
    CHECK(e.column == 5);
  }
}

TEST_CASE("csv round trip and formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-13) == "1e-13");
  CHECK(format_double(-2.5) == "-2.5");

  std::string path = tmp_path("lipkit_test.csv");
  {
    CsvWriter w(path, {"k", "value", "tag"});
    w.row({1ll, 0.5, std::string("alpha")});
    w.row({2ll, -1.25e-7, std::string("beta")});
    w.close();
  }
  CsvTable t = read_csv(path);
  REQUIRE(t.header.size() == 3);
  CHECK(t.column("value") == 1);
  CHECK(t.column("missing") == -1);
  REQUIRE(t.rows.size() == 2);
  auto vals = t.numeric_column("value");
  CHECK(vals[0] == doctest::Approx(0.5));
  CHECK(vals[1] == doctest::Approx(-1.25e-7));
  std::remove(path.c_str());

  CsvWriter w2(tmp_path("lipkit_test2.csv"), {"a", "b"});
  CHECK_THROWS(w2.row({1.0}));
}

TEST_CASE("config parsing") {
  Config c = Config::parse_string(
      "# comment line\n"
      "domain.type = graph   # trailing comment\n"
      "grid.h = 0.015625\n"
      "eps = [0.4, 0.2, 0.1]\n"
      "label = \"two words\"\n");
  CHECK(c.str("domain.type") == "graph");
  CHECK(c.number("grid.h") == doctest::Approx(0.015625));
  auto eps = c.numbers("eps");
  REQUIRE(eps.size() == 3);
  CHECK(eps[1] == doctest::Approx(0.2));
  CHECK(c.str("label") == "two words");
  CHECK(c.number_or("absent", 7.0) == doctest::Approx(7.0));
  CHECK(c.has("eps"));
  CHECK(!c.has("absent"));
  CHECK_THROWS_AS(Config::parse_string("key 5\n"), ConfigError);
  CHECK_THROWS_AS(c.number("label"), std::exception);
}

TEST_CASE("rng determinism and ranges") {
  Rng r1(42), r2(42);
  for (int i = 0; i < 100; ++i) CHECK(r1.raw() == r2.raw());
  Rng r(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double u = r.unit();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
  for (int i = 0; i < 100; ++i) {
    double v = r.log_uniform(1e-4, 1e-1);
    CHECK(v >= 1e-4);
    CHECK(v <= 1e-1);
  }
  double mean = 0.0, var = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    double g = r.normal();
    mean += g;
    var += g * g;
  }
  mean /= n;
  var = var / n - mean * mean;
  CHECK(std::abs(mean) < 0.03);
  CHECK(var == doctest::Approx(1.0).epsilon(0.05));
  bool saw_lo = false, saw_hi = false;
  for (int i = 0; i < 200; ++i) {
    int k = r.uniform_int(3, 5);
    CHECK(k >= 3);
    CHECK(k <= 5);
    saw_lo |= (k == 3);
    saw_hi |= (k == 5);
  }
  CHECK(saw_lo);
  CHECK(saw_hi);
}

TEST_CASE("fnv1a64 known vectors") {
  // Reference vectors from the published FNV test suite.
  CHECK(fnv1a64_bytes("", 0) == 0xcbf29ce484222325ull);
  CHECK(fnv1a64_bytes("a", 1) == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64_bytes("foobar", 6) == 0x85944171f73967e8ull);
  CHECK(hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");

  std::string path = tmp_path("lipkit_hash.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "foobar";
  }
  CHECK(fnv1a64_file(path) == 0x85944171f73967e8ull);
  std::remove(path.c_str());
}

TEST_CASE("manifest records checks and files") {
  std::string data = tmp_path("lipkit_m_in.txt");
  {
    std::ofstream out(data);
    out << "payload";
  }
  Manifest m;
  m.set("tool", "demo");
  m.set_double("tol", 1e-6);
  m.add_file("input", data);
  m.add_check("alpha", true, "ok");
  m.add_check("beta", false, "ratio=2.0");
  CHECK(!m.all_passed());
  CHECK(m.failures() == 1);

  std::string path = tmp_path("lipkit_manifest.txt");
  m.write(path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("tool=demo") != std::string::npos);
  CHECK(text.find("tol=1e-06") != std::string::npos);
  CHECK(text.find("hash.input=") != std::string::npos);
  CHECK(text.find("check.alpha=PASS ok") != std::string::npos);
  CHECK(text.find("check.beta=FAIL ratio=2.0") != std::string::npos);
  CHECK(text.find("checks.total=2") != std::string::npos);
  CHECK(text.find("checks.failed=1") != std::string::npos);
  std::remove(path.c_str());
  std::remove(data.c_str());
}

TEST_CASE("parallel sums are deterministic") {
  std::vector<double> v(100000);
  Rng r(3);
  for (auto& x : v) x = r.uniform(-1.0, 1.0);

  auto serial_chunks = [&](size_t chunk) {
    size_t nchunks = (v.size() + chunk - 1) / chunk;
    double s = 0.0;
    for (size_t c = 0; c < nchunks; ++c) {
      size_t b = c * chunk, e = std::min(v.size(), (c + 1) * chunk);
      double p = 0.0;
      for (size_t i = b; i < e; ++i) p += v[i];
      s += p;
    }
    return s;
  };
  double want = serial_chunks(1024);
  double got = parallel_sum(v.size(), 1024, [&](size_t b, size_t e) {
    double p = 0.0;
    for (size_t i = b; i < e; ++i) p += v[i];
    return p;
  });
  CHECK(got == want);  // bitwise: chunk partials combine in chunk order

  std::vector<double> ones(1 << 14, 1.0);
  CHECK(pairwise_sum(ones) == doctest::Approx(double(1 << 14)));
}
