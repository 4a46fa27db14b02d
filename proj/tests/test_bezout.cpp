#include <doctest.h>

#include <vector>

#include "brf/bezout.hpp"
#include "brf/errors.hpp"
#include "brf/poly_io.hpp"
#include "brf/random_inputs.hpp"
#include "support/oracles.hpp"

using namespace brf;

namespace {

SystemProfile sys(std::vector<const char*> lines) {
  std::vector<Poly> polys;
  for (const char* l : lines) polys.push_back(parse_poly(l, lines.size()));
  return SystemProfile(std::move(polys));
}

Functional eval_at(std::vector<Rational> pt, int bound) { return eval_functional(pt, bound); }

BezoutConfig all_swapped(std::size_t n) {
  BezoutConfig cfg;
  cfg.system.assign(n, DerivativeChoice::swapped());
  cfg.target = DerivativeChoice::swapped();
  return cfg;
}

}  // namespace

TEST_CASE("bezoutian, one variable") {
  SystemProfile f = sys({"x1^2 - 1"});
  Poly x = parse_poly("x1", 1);
  BezoutForms forms = bezout_forms(f, x, {}, 1);
  CHECK(forms.x_form == parse_poly_xy("x1*y1 + 1", 1));
  CHECK(forms.y_form == forms.x_form);
  CHECK(bezout_poly(f, x) == parse_poly_xy("x1*y1 + 1", 1));
  CHECK(bezout_poly(f, Poly(1)).is_zero());

  BezoutConfig same;
  same.target = DerivativeChoice::supply(nabla(f[0]));
  CHECK(bezout_forms(f, f[0], same, 2).y_form.is_zero());
}

TEST_CASE("bezoutian, two variables (frozen symbolic result)") {
  SystemProfile f = sys({"x1^2 + x2 - 1", "x1*x2 - 2"});
  Poly target = parse_poly("x1^2*x2", 2);
  PolyXY expected =
      parse_poly_xy("-x1*x2*y1^3 + x1*x2*y1 - 2*x1*x2 + 2*x1*y1^2 - 2*x2*y1 + 2*y1^3", 2);
  CHECK(bezout_poly(f, target) == expected);
  CHECK(expected.degree() <= Degree(f.delta_f() + 3));
}

TEST_CASE("determinant agrees with Bareiss") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    CaseRng rng(61, i);
    std::size_t n = rng.uniform(1, 3);
    SystemProfile f = random_system(rng, n, 3);
    Poly target = random_poly(rng, n, rng.uniform(0, 3));
    int budget = std::max(0, target.degree().value_or(0));
    for (bool bottom_in_y : {false, true}) {
      PolyXYMatrix m = bordered_matrix(f, target, {}, budget, bottom_in_y);
      CHECK(determinant(m) == oracle::bareiss_determinant(m));
    }
  }
}

TEST_CASE("expansion route matches the determinant") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    CaseRng rng(62, i);
    std::size_t n = rng.uniform(1, 3);
    SystemProfile f = random_system(rng, n, 3);
    Poly target = random_poly(rng, n, rng.uniform(0, 3));
    BezoutExpansion ex(f, {});
    CHECK(ex.evaluate(target, nabla(target)) == bezout_poly(f, target));
    BezoutConfig sw = all_swapped(n);
    BezoutExpansion ex2(f, sw);
    CHECK(ex2.evaluate(target, nabla_swapped(nabla(target))) == bezout_poly(f, target, sw));
  }
}

TEST_CASE("supplied derivatives are validated") {
  SystemProfile f = sys({"x1*x2 - 1", "x2^2 - x1"});
  Poly target = parse_poly("x1*x2", 2);
  BezoutConfig bad;
  bad.target = DerivativeChoice::supply(CovectorXY{2, {parse_poly_xy("x2", 2), parse_poly_xy("x1", 2)}});
  CHECK_THROWS_AS(bezout_poly(f, target, bad), PreconditionViolation);

  BezoutConfig good;
  good.target = DerivativeChoice::supply(CovectorXY{2, {parse_poly_xy("y2", 2), parse_poly_xy("x1", 2)}});
  CHECK_NOTHROW(bezout_poly(f, target, good));
  CHECK_THROWS_AS(bezout_poly(f, parse_poly("x1^3", 2), {}, 2), PreconditionViolation);
}

TEST_CASE("uniqueness certificates") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    CaseRng rng(63, i);
    std::size_t n = rng.uniform(1, 2);
    SystemProfile f = random_system(rng, n, 2);
    Poly target = random_poly(rng, n, rng.uniform(1, 2));
    BezoutConfig a;
    BezoutConfig b;
    b.target = DerivativeChoice::swapped();
    UniquenessCertificate t = target_choice_certificate(f, target, a, b);
    REQUIRE(t.witness);
    CHECK(t.witness->certifies(t.difference.joint(), t.generators));

    UniquenessCertificate s = system_choice_certificate(f, target, a, all_swapped(n));
    REQUIRE(s.witness);
    CHECK(s.witness->certifies(s.difference.joint(), s.generators));
  }
}

TEST_CASE("extension step examples") {
  SystemProfile f = sys({"x1^2 - 1"});
  Functional l = eval_at({1}, 2);
  CHECK(extend_step(l, 0, f, parse_poly("x1^2", 1)) == parse_poly("x1 + 1", 1));
  CHECK(extend_step(l, 0, f, f[0]).is_zero());
  CHECK(extend_step(l, 0, f, Poly(1)).is_zero());

  CHECK_THROWS_AS(extend_step(Functional::dual_monomial(Exponent{0}, 2), 1, f, f[0]), NotAnnihilating);
  CHECK_THROWS_AS(extend_step(eval_at({1}, 0), 0, f, f[0]), PreconditionViolation);
  CHECK_THROWS_AS(extend_step(eval_at({1}, 1), 0, f, parse_poly("x1^3", 1)), DegreeOverflow);
}

TEST_CASE("product functional, closed forms") {
  SystemProfile f = sys({"x1^2 - 1"});
  Functional one = eval_at({1}, 1);
  Functional minus = eval_at({-1}, 1);
  for (Execution exec : {Execution::Serial, Execution::Parallel}) {
    Functional p = product_functional(one, 0, one, 0, f, {}, exec);
    std::vector<std::pair<Rational, Functional>> twice{{2, eval_at({1}, 2)}};
    CHECK(p == functional_lincomb(twice));
    Functional q = product_functional(one, 0, minus, 0, f, {}, exec);
    CHECK(q.bound() == 2);
    CHECK(q.is_zero());
    CHECK(product_functional(Functional(1, 1), 0, one, 0, f, {}, exec).is_zero());
  }
  CHECK(verify_commutativity(one, 0, minus, 0, f).holds);
  CHECK(verify_commutativity(one, 0, one, 0, f).holds);
}

TEST_CASE("product functional, two variables (frozen symbolic result)") {
  SystemProfile f = sys({"x1^2 - 1", "x2 - x1"});
  Functional a = eval_at({1, 1}, 1);
  Functional b = eval_at({-1, -1}, 1);
  Functional p = product_functional(a, 0, a, 0, f);
  CHECK(p.bound() == 2);
  CHECK(p.coeffs().size() == 6);
  for (const auto& [e, v] : p.coeffs()) CHECK(v == 2);
  CHECK(product_functional(a, 0, b, 0, f).is_zero());
}

TEST_CASE("serial and parallel products agree") {
  for (std::uint64_t i = 0; i < 12; ++i) {
    CaseRng rng(64, i);
    std::size_t n = rng.uniform(1, 2);
    SystemProfile f = random_system(rng, n, 2);
    int d1 = rng.uniform(0, 1), d2 = rng.uniform(0, 1);
    Functional l1 = random_root_functional(rng, f, f.delta_f() + d1);
    Functional l2 = random_root_functional(rng, f, f.delta_f() + d2);
    BezoutConfig cfg = rng.uniform(0, 1) ? all_swapped(n) : BezoutConfig{};
    Functional s = product_functional(l1, d1, l2, d2, f, cfg, Execution::Serial);
    Functional p = product_functional(l1, d1, l2, d2, f, cfg, Execution::Parallel);
    CHECK(s == p);
    CHECK(annihilates(p, f, p.bound()));
    CHECK(oracle::annihilates_by_expansion(p, f, p.bound()));
    CHECK(verify_commutativity(l1, d1, l2, d2, f, cfg).holds);
  }
}
