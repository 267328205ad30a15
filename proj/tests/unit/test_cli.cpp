#include "support/random_poly.hpp"
#include "tropalg/cli/export.hpp"
#include "tropalg/cli/expression.hpp"

#include <doctest.h>

using namespace tropalg;
using namespace tropalg::cli;
using tropalg::testing::Rng;

namespace {

MaxPlus mp(Rational v) { return MaxPlus(std::move(v)); }

std::size_t error_column(const char* text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("parsing") {
  Polynomial p = parse_polynomial("0*x^2 + 3*x + 4");
  CHECK(p == Polynomial(1, {{{2}, mp(0)}, {{1}, mp(3)}, {{0}, mp(4)}}));
  CHECK(parse_polynomial("(x + 0)*(y + 0)") == parse_polynomial("x*y + x + y + 0"));
  CHECK(parse_polynomial("x + -inf") == parse_polynomial("x"));
  CHECK(parse_polynomial("-3/4*x^2") == Polynomial(1, {{{2}, mp(Rational(-3, 4))}}));
  CHECK(parse_polynomial("2.25") == Polynomial(1, {{{0}, mp(Rational(9, 4))}}));
  CHECK(parse_polynomial("X2 + X4").arity() == 4);
  CHECK(parse_polynomial("Y") == parse_polynomial("y"));
  CHECK(parse_polynomial("x^0") == parse_polynomial("0"));
  CHECK(parse_polynomial("2^3") == parse_polynomial("6"));
  CHECK(parse_polynomial("-inf").is_zero());
  CHECK(parse_polynomial("x", 3).arity() == 3);
  // ^ binds tighter than *, which binds tighter than +
  CHECK(parse_polynomial("1 + 2*x^2") == Polynomial(1, {{{0}, mp(1)}, {{2}, mp(2)}}));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_column("x + ") == 5);
  CHECK(error_column("x^-1") == 3);
  CHECK(error_column("x^1.5") == 3);
  CHECK(error_column("x + w") == 5);
  CHECK(error_column("(x + 1") == 7);
  CHECK(error_column("x + X2") == 5);
  CHECK(error_column("x $ y") == 3);
  CHECK(error_column("1/0") == 1);
  CHECK_THROWS_AS(parse_polynomial("x*y", 1), UsageError);
}

TEST_CASE("print and parse round trip") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    std::size_t arity = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    Polynomial p = testing::random_polynomial(rng, {.arity = arity, .max_terms = 6, .max_degree = 4});
    CHECK(parse_polynomial(to_string(p), arity) == p);
  }
}

TEST_CASE("classical convention reads logarithms") {
  ParseOptions o{Convention::Classical, 2};
  CHECK(parse_polynomial("x + 8", 0, o) == parse_polynomial("x + 3"));
  CHECK(parse_polynomial("1/4*x", 0, o) == parse_polynomial("-2*x"));
  CHECK(parse_polynomial("x + 0", 0, o) == parse_polynomial("x"));
  CHECK(parse_polynomial("x + 1.5", 1, ParseOptions{Convention::Classical, Rational(9, 4)}) ==
        parse_polynomial("x + 1/2"));
  CHECK_THROWS_AS(parse_polynomial("x + 3", 0, o), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + -inf", 0, o), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + -2", 0, o), ParseError);
  CHECK(rational_log(Rational(32), Rational(4)) == Rational(5, 2));
  CHECK(rational_log(Rational(1, 8), Rational(1, 2)) == Rational(3));
  CHECK_FALSE(rational_log(Rational(3), Rational(2)));
}

TEST_CASE("json renderings") {
  auto roots_json = to_json(roots(parse_polynomial("0*x^2 + 3*x + 4")));
  CHECK(roots_json.dump() == R"([{"root":"3","mult":1},{"root":"1","mult":1}])");
  CHECK(to_json(roots(parse_polynomial("x^3 + 1*x^2"))).dump() == R"([{"root":"1","mult":1},{"root":"-inf","mult":2}])");
  auto poly = to_json(parse_polynomial("1/2*x*y + -1"));
  CHECK(poly.dump() ==
        R"({"text":"1/2*x*y + -1","terms":[{"exponent":[0,0],"coefficient":"-1"},{"exponent":[1,1],"coefficient":"1/2"}]})");
}

TEST_CASE("affine forms and boxes") {
  CHECK(form_text(AffineForm{{1, -1}, 0}) == "x - y");
  CHECK(form_text(AffineForm{{0, 2}, Rational(-1, 2)}) == "2*y - 1/2");
  CHECK(form_text(AffineForm{{0, 0}, 0}) == "0");
  auto b = parse_bbox("-1,-2,3,4");
  CHECK(b.xmin == -1);
  CHECK(b.ymax == 4);
  CHECK_THROWS_AS(parse_bbox("1,2,3"), UsageError);
  CHECK_THROWS_AS(parse_bbox("1,1,0,2"), UsageError);
}

TEST_CASE("svg clips every wall to the box") {
  auto v = variety_cells(canonicalize(parse_polynomial("x + y + 0")));
  std::string svg = variety_svg(v, BoundingBox{-10, -10, 10, 10});
  std::size_t lines = 0;
  for (std::size_t pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) ++lines;
  CHECK(lines == 3);
  CHECK(svg.find("x1=\"200.000\" y1=\"200.000\" x2=\"400.000\" y2=\"0.000\"") != std::string::npos);
  // a box that misses the curve draws nothing
  std::string empty = variety_svg(v, BoundingBox{1, -10, 5, -2});
  CHECK(empty.find("<line") == std::string::npos);
}

TEST_CASE("dot output") {
  auto g = dominance_graph(canonicalize(parse_polynomial("x + 0")));
  CHECK(dominance_dot(g) ==
        "graph dominance {\n  // connected: true\n  v0 [label=\"0\"];\n  v1 [label=\"x\"];\n  v0 -- v1 [label=\"-x\"];\n}\n");
}
