#include "brf/linalg.hpp"

#include <utility>

#include "brf/errors.hpp"

namespace brf {

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (auto& v : row) {
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }
}

IntRow to_integer_row(std::span<const Rational> row) {
  mpz_class lcm = 1;
  for (const auto& q : row) {
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    out[j] = row[j].get_num() * (lcm / row[j].get_den());
  }
  make_primitive(out);
  return out;
}

// row := p·row - a·pivot_row with (p, a) = (pivot, row[col]) / gcd.
void eliminate_one(IntRow& row, const IntRow& pivot_row, std::span<const std::size_t> pivot_support,
                   std::size_t col) {
  const mpz_class& pivot = pivot_row[col];
  mpz_class g = gcd(pivot, row[col]);
  mpz_class p = pivot / g;
  mpz_class a = row[col] / g;
  if (p != 1) {
    for (auto& v : row) {
      if (v != 0) v *= p;
    }
  }
  for (std::size_t j : pivot_support) row[j] -= a * pivot_row[j];
  make_primitive(row);
}

void eliminate_serial(std::vector<IntRow>& rows, std::size_t pivot, std::size_t col,
                      std::span<const std::size_t> support) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == pivot || rows[i][col] == 0) continue;
    eliminate_one(rows[i], rows[pivot], support, col);
  }
}

void eliminate_parallel(std::vector<IntRow>& rows, std::size_t pivot, std::size_t col,
                        std::span<const std::size_t> support) {
  const auto count = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    auto ui = static_cast<std::size_t>(i);
    if (ui == pivot || rows[ui][col] == 0) continue;
    eliminate_one(rows[ui], rows[pivot], support, col);
  }
}

}  // namespace

Echelon echelonize(const RationalMatrix& m, std::size_t pivot_limit, Execution exec) {
  if (pivot_limit > m.cols()) throw DimensionMismatch("echelonize: pivot limit exceeds column count");
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_integer_row(m.row(r)));

  Echelon out;
  out.cols = m.cols();
  std::size_t next = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < pivot_limit && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && rows[found][col] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    if (rows[next][col] < 0) {
      for (auto& v : rows[next]) v = -v;
    }
    support.clear();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rows[next][j] != 0) support.push_back(j);
    }
    if (exec == Execution::Parallel) {
      eliminate_parallel(rows, next, col, support);
    } else {
      eliminate_serial(rows, next, col, support);
    }
    out.pivot_cols.push_back(col);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r) {
    for (std::size_t j = pivot_limit; j < m.cols(); ++j) {
      if (rows[r][j] != 0) out.inconsistent = true;
    }
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t matrix_rank(const RationalMatrix& m, Execution exec) { return echelonize(m, exec).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, Execution exec) {
  Echelon e = echelonize(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(m.cols());
    v[j] = 1;
    for (std::size_t t = 0; t < e.rank(); ++t) {
      const mpz_class& entry = e.rows[t][j];
      if (entry == 0) continue;
      Rational q(-entry, e.rows[t][e.pivot_cols[t]]);
      q.canonicalize();
      v[e.pivot_cols[t]] = q;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_first(const RationalMatrix& a, std::span<const Rational> b,
                                                 Execution exec) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_first: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = echelonize(aug, a.cols(), exec);
  if (e.inconsistent) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t t = 0; t < e.rank(); ++t) {
    const mpz_class& rhs = e.rows[t][a.cols()];
    if (rhs == 0) continue;
    Rational q(rhs, e.rows[t][e.pivot_cols[t]]);
    q.canonicalize();
    x[e.pivot_cols[t]] = q;
  }
  return x;
}

}  // namespace brf
