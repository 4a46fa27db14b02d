#include <doctest.h>

#include <vector>

#include "brf/diff_deriv.hpp"
#include "brf/errors.hpp"
#include "brf/poly_io.hpp"
#include "brf/random_inputs.hpp"
#include "support/oracles.hpp"

using namespace brf;

namespace {

PolyXY xy(const char* text, std::size_t n) { return parse_poly_xy(text, n); }

bool telescopes(const CovectorXY& d, const Poly& f) {
  return d.contract_with_difference() == embed_x(f) - embed_y(f);
}

// Telescoping identity checked by evaluation at random rational points,
// independent of the symbolic contraction.
bool telescopes_pointwise(const CovectorXY& d, const Poly& f, CaseRng& rng) {
  const std::size_t n = f.nvars();
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rational> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.small_rational();
      y[i] = rng.small_rational();
    }
    Rational lhs = 0;
    for (std::size_t k = 0; k < n; ++k) lhs += (x[k] - y[k]) * oracle::eval_xy(d.comps[k], x, y);
    if (lhs != f.eval(x) - f.eval(y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("nabla examples") {
  CHECK(nabla(parse_poly("x1^2", 1)).comps == std::vector{xy("x1 + y1", 1)});
  CHECK(nabla(parse_poly("x1*x2", 2)).comps == std::vector{xy("x2", 2), xy("y1", 2)});
  CHECK(nabla(parse_poly("7/3", 2)) == CovectorXY::zero(2));
  CHECK(nabla(Poly(3)) == CovectorXY::zero(3));
}

TEST_CASE("swapped examples") {
  CovectorXY d = nabla(parse_poly("x1^2", 1));
  CHECK(nabla_swapped(d) == d);
  CovectorXY e = nabla_swapped(nabla(parse_poly("x1*x2", 2)));
  CHECK(e.comps == std::vector{xy("y2", 2), xy("x1", 2)});
  CHECK(telescopes(e, parse_poly("x1*x2", 2)));
  CHECK(nabla_swapped(CovectorXY::zero(2)) == CovectorXY::zero(2));
}

TEST_CASE("product rule examples") {
  Poly x = parse_poly("x1", 1);
  CHECK(nabla_product(x, x, nabla(x), nabla(x)) == nabla(parse_poly("x1^2", 1)));

  Poly g = parse_poly("x1*x2^2 - x2", 2);
  Poly one = Poly::constant(2, 1);
  CHECK(nabla_product(one, g, nabla(one), nabla(g)) == nabla(g));

  Poly x1 = parse_poly("x1 + 1", 1);
  CHECK(nabla_product(x, x1, nabla(x), nabla(x1)).comps == std::vector{xy("x1 + y1 + 1", 1)});
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(xy("x1^3", 1), 0) == xy("x1^2 + x1*y1 + y1^2", 1));
  CHECK(divided_difference(xy("x1*y1", 1), 0) == xy("y1", 1));
  CHECK(divided_difference(xy("x1*x2 + y2", 2), 1) == xy("y1", 2));
}

TEST_CASE("decomposition examples") {
  CovectorXY d1 = nabla(parse_poly("x1*x2", 2));
  CovectorXY d2 = nabla_swapped(d1);
  DiscrepancyDecomposition dec = decompose_difference(d1, d2, 2);
  REQUIRE(dec.t_table.size() == 1);
  CHECK(dec.t_table.at({0, 1}) == xy("-1", 2));
  for (std::size_t m = 0; m < 2; ++m) CHECK(dec.reconstruct(m) == d1.comps[m] - d2.comps[m]);

  DiscrepancyDecomposition same = decompose_difference(d1, d1, 2);
  for (const auto& [key, t] : same.t_table) CHECK(t.is_zero());

  CovectorXY u = nabla(parse_poly("x1^3 - x1", 1));
  CHECK(decompose_difference(u, nabla_swapped(u), 3).t_table.empty());
}

TEST_CASE("decomposition rejects mismatched derivatives") {
  CovectorXY a = nabla(parse_poly("x1*x2", 2));
  CovectorXY b = nabla(parse_poly("x1*x2 + x1", 2));
  CHECK_THROWS_AS(decompose_difference(a, b, 2), PreconditionViolation);
  CHECK_THROWS_AS(decompose_difference(a, nabla_swapped(a), 1), PreconditionViolation);
}

TEST_CASE("random telescoping, monotonicity, linearity") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    CaseRng rng(21, i);
    std::size_t n = rng.uniform(1, 3);
    Poly f = random_poly(rng, n, rng.uniform(0, 5), 6);
    Poly g = random_poly(rng, n, rng.uniform(0, 5), 6);
    CovectorXY df = nabla(f);
    CHECK(telescopes(df, f));
    CHECK(telescopes_pointwise(df, f, rng));
    CHECK(df.degree() <= f.degree() - 1);
    CHECK(is_difference_derivative(nabla_swapped(df), f));

    Rational a = rng.small_rational(), b = rng.small_rational();
    CovectorXY lhs = nabla(f * a + g * b);
    CovectorXY dg = nabla(g);
    for (std::size_t k = 0; k < n; ++k) CHECK(lhs.comps[k] == df.comps[k] * a + dg.comps[k] * b);

    CovectorXY prod = nabla_product(f, g, df, dg);
    CHECK(telescopes(prod, f * g));
  }
}

TEST_CASE("random decompositions") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    CaseRng rng(22, i);
    std::size_t n = rng.uniform(2, 3);
    int d = rng.uniform(1, 4);
    Poly f = random_poly(rng, n, d, 6);
    CovectorXY d1 = nabla(f);
    CovectorXY d2 = nabla_swapped(d1);
    DiscrepancyDecomposition dec = decompose_difference(d1, d2, d);
    for (const auto& [key, t] : dec.t_table) CHECK(t.degree() <= Degree(d - 2));
    for (std::size_t m = 0; m < n; ++m) CHECK(dec.reconstruct(m) == d1.comps[m] - d2.comps[m]);
  }
}
