#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "brf/execution.hpp"
#include "brf/rational.hpp"

namespace brf {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form computed over the integers.
///
/// Each input row is scaled to a primitive integer vector; elimination replaces
/// row_i by p·row_i - a·row_pivot (p, a divided by their gcd) and re-normalizes
/// the row content, so no fractions appear. Pivots are the first nonzero entry
/// scanning columns left to right and rows top to bottom.
struct Echelon {
  std::size_t cols = 0;
  /// rank rows; row t has its pivot at pivot_cols[t] and zeros in every other pivot column.
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivot_cols;
  /// Rows beyond the rank that are nonzero outside the pivot-eligible columns.
  bool inconsistent = false;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Eliminates on columns [0, pivot_limit) only; later columns are carried along
/// (used for augmented systems).
Echelon echelonize(const RationalMatrix& m, std::size_t pivot_limit, Execution exec = Execution::Parallel);
inline Echelon echelonize(const RationalMatrix& m, Execution exec = Execution::Parallel) {
  return echelonize(m, m.cols(), exec);
}

std::size_t matrix_rank(const RationalMatrix& m, Execution exec = Execution::Parallel);

/// Basis of {v : m v = 0}, one vector per free column in ascending order; the
/// vector for free column j has 1 at j, 0 at the other free columns.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, Execution exec = Execution::Parallel);

/// A solution of a x = b with every free variable set to 0, or nullopt.
std::optional<std::vector<Rational>> solve_first(const RationalMatrix& a, std::span<const Rational> b,
                                                 Execution exec = Execution::Parallel);

}  // namespace brf
