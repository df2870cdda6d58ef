#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "hirz/cli.hpp"
#include "hirz/error.hpp"
#include "hirz/expr_parser.hpp"
#include "hirz/motivic.hpp"
#include "support.hpp"

using namespace hirz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const char* order_env = nullptr) {
  args.insert(args.begin(), "hirz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, order_env);
  return {code, out.str(), err.str()};
}

ExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 10 : 5), param(0, 12);
  switch (pick(rng)) {
    case 0: return Expr::make_atom(AtomKind::Projective, param(rng));
    case 1: return Expr::make_atom(AtomKind::Affine, param(rng));
    case 2: return Expr::make_atom(AtomKind::Curve, param(rng));
    case 3: return Expr::make_atom(rng() % 2 ? AtomKind::Lefschetz : AtomKind::Torus);
    case 4: return Expr::make_atom(AtomKind::Point);
    case 5: return Expr::make_integer(param(rng));
    case 6: return Expr::make_binary(Expr::Kind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::make_binary(Expr::Kind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 8:
    case 9: return Expr::make_binary(Expr::Kind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::make_dual(random_expr(rng, depth - 1));
  }
}

size_t error_offset(const std::string& src) {
  try {
    (void)parse_expr(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_expr examples") {
  const ExprPtr e = parse_expr("P2 * P1 - L");
  REQUIRE(e->kind == Expr::Kind::Sub);
  CHECK(e->lhs->kind == Expr::Kind::Mul);
  CHECK(e->rhs->atom == AtomKind::Lefschetz);
  CHECK(render(*e) == "P2 * P1 - L");

  const MotivicClass two_lines = evaluate(parse_expr("P2 - 2 P1 + pt"));
  CHECK(two_lines.realization() == motivic_arrangement_complement(2, 2).realization());
  CHECK(render(*parse_expr("P2 - 2 P1 + pt")) == "P2 - 2 * P1 + pt");

  CHECK(error_offset("P2 +") == 5);
  CHECK(error_offset("") == 1);
  CHECK(error_offset("(P1") == 4);
  CHECK(error_offset("P") == 2);
  CHECK(error_offset("P1 )") == 4);
  CHECK(error_offset("X1") == 1);
  CHECK(error_offset("  Gm * q") == 8);
  try {
    (void)parse_expr("P2 +");
  } catch (const ParseError& e) {
    CHECK(std::find(e.expected().begin(), e.expected().end(), "pt") != e.expected().end());
  }
  CHECK(render(*parse_expr(" ( P1+pt )*  C2")) == "(P1 + pt) * C2");
  CHECK(render(*parse_expr("3 (L - pt)")) == "3 * (L - pt)");
  CHECK(render(*parse_expr("P1 - (pt - L)")) == "P1 - (pt - L)");
  CHECK(render(*parse_expr("D(P1) * A2")) == "D(P1) * A2");
}

TEST_CASE("expressions survive render and parse") {
  std::mt19937 rng(61);
  for (int i = 0; i < 500; ++i) {
    const ExprPtr e = random_expr(rng, 4);
    const std::string text = render(*e);
    INFO(text);
    CHECK(*parse_expr(text) == *e);
  }
}

TEST_CASE("execute examples") {
  CHECK(render_text(execute({"epoly", {{"expr", "C1"}}})) == "1 - u - v + u*v\n");
  CHECK(render_text(execute({"genus", {{"space", "P2"}}})) == "1 - y + y^2\n");
  CHECK(render_text(execute({"genus", {{"motivic", "Gm * Gm"}}})) == "1 + 2*y + y^2\n");
  const Report r = execute({"arrangement", {{"n", "2"}, {"k", "2"}, {"op", "mht"}}});
  REQUIRE(r.results.size() == 2);
  CHECK(r.results[1].first == "at y=-1");
  CHECK(r.results[1].second == "[P2] + 1*l");
  CHECK(render_text(execute({"arrangement", {{"n", "2"}, {"k", "0"}, {"op", "csm"}}})) == "[P2] + 3*l + 3*[pt]\n");
  CHECK_THROWS_AS(execute({"arrangement", {{"n", "2"}, {"k", "9"}, {"op", "csm"}}}), InvalidParameter);
  CHECK_THROWS_AS(execute({"epoly", {{"expr", "P2 +"}}}), ParseError);
  CHECK_THROWS_AS(execute({"verify", {{"suite", "nope"}}}), InvalidParameter);
  CHECK_THROWS_AS(execute({"launch", {}}), InvalidParameter);
}

TEST_CASE("command line exit codes") {
  Run r = cli({"epoly", "C1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - u - v + u*v\n");

  r = cli({"genus", "--space", "Hyp(3,4)"});
  CHECK(r.out == "2 - 20*y + 2*y^2\n");

  r = cli({"epoly", "P2 +"});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 5") != std::string::npos);

  CHECK(cli({}).code == 2);
  CHECK(cli({"genus"}).code == 2);
  CHECK(cli({"classes", "--series", "todd"}).code == 2);
  CHECK(cli({"classes", "--space", "P2", "--series", "x"}).code == 2);
  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli({"verify", "--suite", "ghrr"}, "abc").code == 2);
  CHECK(cli({"genus", "--space", "P1", "--motivic", "pt"}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  r = cli({"verify", "--suite", "ghrr"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ghrr: PASS", 0) == 0);
}

TEST_CASE("classes and describe") {
  Run r = cli({"classes", "--space", "P2", "--series", "todd"});
  CHECK(r.out == "class: 1 + 3/2*h + h^2\nintegral: 1\n");
  r = cli({"classes", "--space", "P1", "--series", "ty"});
  CHECK(r.out == "class: 1 + (1 - y)*h\nintegral: 1 - y\n");
  r = cli({"classes", "--space", "Hyp(3,4)", "--series", "l"});
  CHECK(r.out.find("integral: -16") != std::string::npos);
  r = cli({"describe", "--space", "Arr(2,3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("log cotangent: rank 2, c = 1\n") != std::string::npos);
}

TEST_CASE("custom space documents from a file") {
  const std::string path = "hirz_test_quadric.space";
  {
    std::ofstream f(path);
    f << "name Quadric\ndim 2\ngen a 1\ngen b 1\nrel a^2 = 0\nrel b^2 = 0\nint a*b = 1\n"
         "chern 1 + 2*a + 2*b + 4*a*b\n";
  }
  Run r = cli({"genus", "--space-file", path});
  CHECK(r.code == 0);
  CHECK(r.out == "1 - 2*y + y^2\n");
  r = cli({"describe", "--space-file", path});
  CHECK(r.out.find("key: Quadric\n") != std::string::npos);
  std::remove(path.c_str());
  CHECK(cli({"genus", "--space-file", path}).code == 2);
}

TEST_CASE("json reports") {
  const Run a = cli({"--format", "json", "arrangement", "--n", "2", "--k", "3", "--op", "genus"});
  const Run b = cli({"arrangement", "--op", "genus", "--k", "3", "--n", "2", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["command"] == "arrangement");
  CHECK(doc["inputs"]["k"] == "3");
  CHECK(doc["results"]["chi_y"] == "1 + 2*y + y^2");
  CHECK(doc["results"]["chi_c_y"] == "1 + 2*y + y^2");
  CHECK(doc["suites"].empty());

  const Run v = cli({"verify", "--suite", "duality", "--format", "json"});
  const auto report = nlohmann::json::parse(v.out);
  CHECK(report["suites"][0]["name"] == "duality");
  CHECK(report["suites"][0]["pass"] == true);
  CHECK(report["suites"][0]["checks"].size() == 109);
}

TEST_CASE("truncation order precedence") {
  auto order_of = [](const Run& r) { return nlohmann::json::parse(r.out)["inputs"]["order"].get<std::string>(); };
  CHECK(order_of(cli({"verify", "--suite", "series-limits", "--format", "json"})) == "8");
  CHECK(order_of(cli({"verify", "--suite", "series-limits", "--format", "json"}, "5")) == "5");
  CHECK(order_of(cli({"verify", "--suite", "series-limits", "--format", "json", "--order", "6"}, "5")) == "6");
  CHECK(cli({"verify", "--suite", "series-limits", "--order", "0"}).code == 2);
}

TEST_CASE("failing identities set exit status 1") {
  Report r;
  r.suites.push_back({"demo", {{"a = a", true, ""}, {"a = b", false, "lhs = a; rhs = b"}}});
  CHECK(r.failed());
  CHECK(render_text(r) == "demo: FAIL (1 of 2 checks failed)\n  a = b\n    lhs = a; rhs = b\n");
}

TEST_CASE("perturbing any series coefficient is detected") {
  const SeriesKind kinds[] = {SeriesKind::Chern, SeriesKind::Todd, SeriesKind::LClass, SeriesKind::Hirzebruch};
  for (SeriesKind target : kinds) {
    for (int j = 0; j <= 8; ++j) {
      SuiteOptions options;
      options.series = [target, j](SeriesKind kind, int order) {
        ChernRootSeries s = genus_series(kind, order);
        if (kind == target && j <= order) s.coefficients[static_cast<std::size_t>(j)] += LaurentY(Rational(1, 7));
        return s;
      };
      INFO(to_string(target) << " x^" << j);
      CHECK_FALSE(run_suite("series-limits", options).pass());
    }
  }
  // The downstream suites notice a perturbed Todd series on their own.
  SuiteOptions options;
  options.series = [](SeriesKind kind, int order) {
    ChernRootSeries s = genus_series(kind, order);
    if (kind == SeriesKind::Todd) s.coefficients[2] += LaurentY(Rational(1, 7));
    return s;
  };
  CHECK_FALSE(run_suite("ghrr", options).pass());
  CHECK_FALSE(run_suite("multiplicativity", options).pass());
}
