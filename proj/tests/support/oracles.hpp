#pragma once

// Reference computations used only by the tests. They deliberately avoid the
// library's own elimination and determinant code paths.

#include <cstddef>
#include <optional>
#include <vector>

#include "brf/functional.hpp"
#include "brf/ideal.hpp"
#include "brf/linalg.hpp"
#include "brf/poly.hpp"
#include "brf/poly_xy.hpp"

namespace brf::oracle {

/// Textbook Gaussian elimination over Q with division; returns the rank.
inline std::size_t rational_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// m · v.
inline std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

/// Exact quotient a / b in Q[vars], or nullopt when b does not divide a.
/// Division by a single polynomial: the remainder vanishes iff b | a.
inline std::optional<Poly> exact_divide(Poly a, const Poly& b) {
  Poly q(a.nvars());
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  while (!a.is_zero()) {
    const auto& [e, c] = *a.terms().rbegin();
    Exponent shift(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lead_e[i]) return std::nullopt;
      shift.set(i, e[i] - lead_e[i]);
    }
    Rational factor = c / lead_c;
    q.add_term(shift, factor);
    a -= b.shifted(shift) * factor;
  }
  return q;
}

/// Fraction-free Bareiss determinant over the polynomial ring.
inline PolyXY bareiss_determinant(std::vector<std::vector<PolyXY>> m) {
  const std::size_t size = m.size();
  const std::size_t n = m[0][0].nvars();
  Poly prev = Poly::constant(2 * n, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < size && m[p][k].is_zero()) ++p;
      if (p == size) return PolyXY(n);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        Poly num = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).joint();
        m[i][j] = PolyXY(n, *exact_divide(num, prev));
      }
    }
    prev = m[k][k].joint();
  }
  PolyXY det = m[size - 1][size - 1];
  return negate ? -det : det;
}

/// Evaluates a doubled-variable polynomial at (x, y).
inline Rational eval_xy(const PolyXY& p, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> point(x);
  point.insert(point.end(), y.begin(), y.end());
  return p.joint().eval(point);
}

/// L applied to every truncated generator by direct expansion of x^a · f_i.
inline bool annihilates_by_expansion(const Functional& l, const SystemProfile& f, int d) {
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    int room = d - f[i].degree().value();
    if (room < 0) continue;
    // Enumerate shifts by brute force over the box [0, room]^n.
    std::vector<unsigned> s(f.nvars(), 0);
    for (;;) {
      unsigned total = 0;
      for (unsigned v : s) total += v;
      if (static_cast<int>(total) <= room) {
        Rational sum = 0;
        for (const auto& [e, c] : f[i].terms()) {
          Exponent shifted(f.nvars());
          for (std::size_t k = 0; k < f.nvars(); ++k) shifted.set(k, e[k] + s[k]);
          sum += c * l.at(shifted);
        }
        if (sum != 0) return false;
      }
      std::size_t k = 0;
      while (k < s.size() && s[k] == static_cast<unsigned>(room)) s[k++] = 0;
      if (k == s.size()) break;
      ++s[k];
    }
  }
  return true;
}

}  // namespace brf::oracle
