#include <doctest.h>

#include <utility>
#include <vector>

#include "brf/errors.hpp"
#include "brf/functional.hpp"
#include "brf/poly_io.hpp"
#include "brf/random_inputs.hpp"

using namespace brf;

namespace {

Functional eval1(Rational v, int bound) {
  std::vector<Rational> pt{v};
  return eval_functional(pt, bound);
}

}  // namespace

TEST_CASE("apply examples") {
  Poly f = parse_poly("x1^2 - 1", 1);
  CHECK(Functional::dual_monomial(Exponent{0}, 2).apply(f) == -1);
  CHECK(eval1(3, 2).apply(Poly(1)) == 0);
  CHECK(eval1(1, 2).apply(f) == 0);
  CHECK_THROWS_AS(eval1(1, 1).apply(f), DegreeOverflow);
}

TEST_CASE("evaluation functionals") {
  std::vector<Rational> origin{0, 0};
  Functional z = eval_functional(origin, 3);
  CHECK(z == Functional::dual_monomial(Exponent{0, 0}, 3));

  Functional one = eval1(1, 2);
  Functional two = eval1(2, 2);
  for (unsigned k = 0; k <= 2; ++k) {
    CHECK(one.at(Exponent{k}) == 1);
    CHECK(two.at(Exponent{k}) == (1 << k));
  }
}

TEST_CASE("partial application in y") {
  Functional one = eval1(1, 2);
  CHECK(apply_in_y(one, parse_poly_xy("x1 + y1", 1)) == parse_poly("x1 + 1", 1));
  CHECK(apply_in_y(Functional::dual_monomial(Exponent{0}, 2), parse_poly_xy("3*x1^2 - 1", 1)) ==
        parse_poly("3*x1^2 - 1", 1));
  CHECK(apply_in_y(Functional::dual_monomial(Exponent{2}, 2), parse_poly_xy("x1*y1^2", 1)) ==
        parse_poly("x1", 1));
  CHECK_THROWS_AS(apply_in_y(eval1(1, 1), parse_poly_xy("y1^2", 1)), DegreeOverflow);
}

TEST_CASE("linear combinations") {
  Functional l = eval1(Rational(3, 2), 3);
  std::vector<std::pair<Rational, Functional>> cancel{{1, l}, {-1, l}};
  CHECK(functional_lincomb(cancel).is_zero());

  std::vector<std::pair<Rational, Functional>> twice{{2, Functional::dual_monomial(Exponent{1}, 2)}};
  Functional t = functional_lincomb(twice);
  CHECK(t.coeffs().size() == 1);
  CHECK(t.at(Exponent{1}) == 2);

  std::vector<std::pair<Rational, Functional>> diff{{1, eval1(1, 1)}, {-1, eval1(0, 1)}};
  CHECK(functional_lincomb(diff) == Functional::dual_monomial(Exponent{1}, 1));

  std::vector<std::pair<Rational, Functional>> mixed{{1, eval1(1, 3)}, {1, eval1(2, 1)}};
  CHECK(functional_lincomb(mixed).bound() == 1);
  CHECK_THROWS(functional_lincomb({}));
}

TEST_CASE("restriction and comparison") {
  Functional l = eval1(2, 3);
  Functional r = l.restricted(1);
  CHECK(r.bound() == 1);
  CHECK(r.coeffs().size() == 2);
  CHECK(r.zero_extended(3).at(Exponent{3}) == 0);

  FunctionalComparison same = compare_functionals(l, l);
  CHECK(same.equal);
  CHECK_FALSE(same.partial);
  FunctionalComparison part = compare_functionals(l, r);
  CHECK(part.equal);
  CHECK(part.partial);
  FunctionalComparison differ = compare_functionals(l, eval1(1, 3));
  CHECK_FALSE(differ.equal);
  REQUIRE(differ.first_difference);
  CHECK(*differ.first_difference == Exponent{1});
}

TEST_CASE("json round trip") {
  Functional::Coeffs c;
  c[Exponent{1, 0}] = Rational(-3, 7);
  c[Exponent{0, 2}] = 5;
  Functional l(2, 2, c);
  nlohmann::json j = to_json(l);
  CHECK(functional_from_json(j) == l);
  CHECK(functional_from_json(nlohmann::json::parse(j.dump())) == l);
  CHECK_THROWS(functional_from_json(nlohmann::json::parse(R"({"nvars":1,"bound":1,"coeffs":[{"exp":[2],"val":"1"}]})")));
}

TEST_CASE("evaluation agrees with substitution") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    CaseRng rng(31, i);
    std::size_t n = rng.uniform(1, 3);
    int bound = rng.uniform(0, 4);
    std::vector<Rational> pt(n);
    for (auto& v : pt) v = rng.small_rational();
    Functional l = eval_functional(pt, bound);
    Poly f = random_poly(rng, n, rng.uniform(0, bound), 6);
    CHECK(l.apply(f) == f.eval(pt));

    Poly g = random_poly(rng, n, 2);
    CHECK(apply_in_y(l, embed_y(f) * embed_x(g)) == g * l.apply(f));
    PolyXY q1 = embed_y(f) * embed_x(g);
    PolyXY q2 = embed_y(random_poly(rng, n, rng.uniform(0, bound))) * embed_x(f);
    CHECK(apply_in_y(l, q1 + q2) == apply_in_y(l, q1) + apply_in_y(l, q2));
  }
}
