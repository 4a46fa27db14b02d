#pragma once

#include <cstddef>

#include "brf/poly.hpp"

namespace brf {

/// Polynomial in the doubled variable set (x_1..x_n, y_1..y_n).
///
/// Stored as a Poly over 2n variables: indices [0, n) are the x-block and
/// [n, 2n) the y-block.
class PolyXY {
 public:
  PolyXY() = default;
  explicit PolyXY(std::size_t nvars);
  /// `joint` must have exactly 2·nvars variables.
  PolyXY(std::size_t nvars, Poly joint);

  static PolyXY embed_x(const Poly& p);
  static PolyXY embed_y(const Poly& p);
  /// x_k - y_k, 0-based k.
  static PolyXY x_minus_y(std::size_t nvars, std::size_t k);

  std::size_t nvars() const noexcept { return nvars_; }
  const Poly& joint() const noexcept { return joint_; }
  bool is_zero() const noexcept { return joint_.is_zero(); }

  Degree degree() const noexcept { return joint_.degree(); }
  Degree x_degree() const noexcept;
  Degree y_degree() const noexcept;

  /// Q(x, y) -> Q(y, x).
  PolyXY swapped() const;

  PolyXY& operator+=(const PolyXY& other);
  PolyXY& operator-=(const PolyXY& other);
  PolyXY& operator*=(const Rational& c);

  friend PolyXY operator+(PolyXY a, const PolyXY& b) { return a += b; }
  friend PolyXY operator-(PolyXY a, const PolyXY& b) { return a -= b; }
  friend PolyXY operator*(const PolyXY& a, const PolyXY& b);
  friend PolyXY operator*(PolyXY a, const Rational& c) { return a *= c; }
  PolyXY operator-() const;

  bool operator==(const PolyXY& other) const = default;

 private:
  void require_same_nvars(const PolyXY& other) const;

  std::size_t nvars_ = 0;
  Poly joint_;
};

inline PolyXY embed_x(const Poly& p) { return PolyXY::embed_x(p); }
inline PolyXY embed_y(const Poly& p) { return PolyXY::embed_y(p); }
inline PolyXY subst_swap_xy(const PolyXY& q) { return q.swapped(); }

}  // namespace brf
