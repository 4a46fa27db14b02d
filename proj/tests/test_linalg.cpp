#include <doctest.h>

#include <vector>

#include "brf/linalg.hpp"
#include "brf/random_inputs.hpp"
#include "support/oracles.hpp"

using namespace brf;

namespace {

RationalMatrix random_matrix(CaseRng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng.uniform(0, 2) == 0) m(r, c) = rng.small_rational();
    }
  }
  // Force some dependent rows.
  if (rows > 2) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2, 3) - m(1, c);
  }
  return m;
}

}  // namespace

TEST_CASE("small known ranks") {
  RationalMatrix m(2, 3);
  m(0, 0) = -1;
  m(0, 2) = 1;
  CHECK(matrix_rank(m) == 1);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);

  RationalMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = Rational(1, i + 1);
  CHECK(matrix_rank(id, Execution::Serial) == 3);
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("solve returns the first solution or nothing") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 2;
  a(1, 1) = 2;
  std::vector<Rational> ok{3, 6};
  auto x = solve_first(a, ok);
  REQUIRE(x);
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == 0);
  std::vector<Rational> bad{3, 5};
  CHECK_FALSE(solve_first(a, bad));
}

TEST_CASE("serial and parallel elimination agree with the oracle") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    CaseRng rng(41, i);
    std::size_t rows = rng.uniform(1, 12), cols = rng.uniform(1, 12);
    RationalMatrix m = random_matrix(rng, rows, cols);
    Echelon s = echelonize(m, Execution::Serial);
    Echelon p = echelonize(m, Execution::Parallel);
    CHECK(s.pivot_cols == p.pivot_cols);
    CHECK(s.rows == p.rows);
    CHECK(s.rank() == oracle::rational_rank(m));

    auto ker = kernel_basis(m);
    CHECK(ker.size() + s.rank() == cols);
    for (const auto& v : ker) {
      for (const auto& e : oracle::multiply(m, v)) CHECK(e == 0);
    }

    std::vector<Rational> seed(cols);
    for (auto& v : seed) v = rng.small_rational();
    std::vector<Rational> b = oracle::multiply(m, seed);
    auto sol = solve_first(m, b, Execution::Serial);
    REQUIRE(sol);
    CHECK(oracle::multiply(m, *sol) == b);
    CHECK(solve_first(m, b, Execution::Parallel) == sol);
  }
}
