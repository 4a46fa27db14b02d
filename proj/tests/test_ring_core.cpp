#include <doctest.h>

#include <random>
#include <sstream>
#include <vector>

#include "brf/errors.hpp"
#include "brf/poly.hpp"
#include "brf/poly_io.hpp"
#include "brf/poly_xy.hpp"
#include "brf/random_inputs.hpp"

using namespace brf;

TEST_CASE("parse simple forms") {
  Poly p = parse_poly("x1^2 - 1", 1);
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient(Exponent{2}) == 1);
  CHECK(p.coefficient(Exponent{0}) == -1);

  Poly z = parse_poly("0", 2);
  CHECK(z.is_zero());
  CHECK(z.degree() == Degree::minus_infinity());
  CHECK(to_string(z) == "0");

  Poly q = parse_poly("3/2*x1*x2 + x2^3", 2);
  CHECK(q.term_count() == 2);
  CHECK(q.degree() == 3);
  CHECK(q.coefficient(Exponent{1, 1}) == Rational(3, 2));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_poly("x1^", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 +", 1), ParseError);
  try {
    parse_poly("x1 + * x2", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("canonical printing") {
  CHECK(to_string(parse_poly("1 - x2 + x1^2*x2*3/2", 2)) == "3/2*x1^2*x2 - x2 + 1");
  CHECK(to_string(parse_poly("x1 + x1", 1)) == "2*x1");
  CHECK(to_string(parse_poly("-x1^1", 1)) == "-x1");
  CHECK(to_string(parse_poly_xy("x1 - y1", 1)) == "x1 - y1");
}

TEST_CASE("basic arithmetic") {
  Poly x = Poly::variable(1, 0);
  Poly one = Poly::constant(1, 1);
  CHECK((x + one) * (x - one) == parse_poly("x1^2 - 1", 1));

  Poly p = parse_poly("x1*x2 - 3/4*x2 + 2", 2);
  CHECK((p + poly_scale(p, -1)).is_zero());
  CHECK_THROWS_AS(x + Poly::variable(2, 0), DimensionMismatch);
}

TEST_CASE("evaluation") {
  std::vector<Rational> one{1};
  CHECK(parse_poly("x1^2 - 1", 1).eval(one) == 0);
  std::vector<Rational> pt{2, Rational(3, 2)};
  CHECK(Poly(2).eval(pt) == 0);
  CHECK(parse_poly("x1*x2", 2).eval(pt) == 3);
  CHECK_THROWS_AS(parse_poly("x1*x2", 2).eval(one), DimensionMismatch);
}

TEST_CASE("doubled variables") {
  PolyXY ex = embed_x(Poly::variable(2, 0));
  CHECK(to_string(ex) == "x1");
  CHECK(to_string(embed_y(Poly::variable(2, 1))) == "y2");
  PolyXY d = PolyXY::x_minus_y(1, 0);
  CHECK(subst_swap_xy(d) == -d);
  PolyXY q = parse_poly_xy("x1^2*y2 - 3*y1 + x2", 2);
  CHECK(q.swapped().swapped() == q);
  CHECK(q.x_degree() == 2);
  CHECK(q.y_degree() == 1);
}

TEST_CASE("ring axioms on random triples") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    CaseRng rng(11, i);
    std::size_t n = rng.uniform(1, 3);
    Poly a = random_poly(rng, n, rng.uniform(0, 3));
    Poly b = random_poly(rng, n, rng.uniform(0, 3));
    Poly c = random_poly(rng, n, rng.uniform(0, 3));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    Degree sum = (a + b).degree();
    CHECK(sum <= std::max(a.degree(), b.degree()));
    if (a.degree() != b.degree()) CHECK(sum == std::max(a.degree(), b.degree()));
  }
}

TEST_CASE("print/parse round trip") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    CaseRng rng(12, i);
    std::size_t n = rng.uniform(1, 4);
    Poly p = random_poly(rng, n, rng.uniform(0, 5), 6);
    std::string text = to_string(p);
    CHECK(parse_poly(text, n) == p);
    CHECK(to_string(parse_poly(text, n)) == text);
  }
}

TEST_CASE("polynomial lines with comments") {
  std::istringstream in("# system\nx1^2 - 1\n\nx1*x2 - 2  # second\n");
  auto polys = parse_poly_lines(in, 2);
  REQUIRE(polys.size() == 2);
  CHECK(polys[1] == parse_poly("x1*x2 - 2", 2));
  CHECK(infer_nvars("x1 + x3^2") == 3);
}
