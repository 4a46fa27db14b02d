#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brf/exponent.hpp"
#include "brf/poly.hpp"
#include "brf/poly_xy.hpp"
#include "brf/rational.hpp"

namespace brf {

/// Linear functional on the truncated space of polynomials of degree <= bound,
/// stored as its values on the monomials x^a with |a| <= bound.
class Functional {
 public:
  using Coeffs = std::map<Exponent, Rational, GrlexLess>;

  Functional() = default;
  Functional(std::size_t nvars, int bound);
  /// Zero entries are dropped; throws PreconditionViolation for |a| > bound.
  Functional(std::size_t nvars, int bound, Coeffs coeffs);

  /// The functional taking x^e to 1 and every other monomial to 0.
  static Functional dual_monomial(const Exponent& e, int bound);

  std::size_t nvars() const noexcept { return nvars_; }
  int bound() const noexcept { return bound_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Value on the monomial x^e; zero off the stored table. Throws
  /// DegreeOverflow when |e| > bound.
  Rational at(const Exponent& e) const;

  /// Dual pairing with F. Throws DegreeOverflow when deg F > bound.
  Rational apply(const Poly& f) const;

  /// Same values up to `bound`, zero on monomials above the current bound.
  Functional zero_extended(int new_bound) const;
  /// Forgets values above `new_bound`.
  Functional restricted(int new_bound) const;

  /// Equality as functionals on a common bound.
  bool operator==(const Functional& other) const = default;

 private:
  std::size_t nvars_ = 0;
  int bound_ = 0;
  Coeffs coeffs_;
};

/// Comparison of two functionals on the smaller of their bounds.
struct FunctionalComparison {
  bool equal = false;
  /// True when the bounds differ, so agreement was only checked below the smaller one.
  bool partial = false;
  std::optional<Exponent> first_difference;
};

FunctionalComparison compare_functionals(const Functional& a, const Functional& b);

inline Rational functional_apply(const Functional& l, const Poly& f) { return l.apply(f); }

/// The evaluation functional F -> F(point) on degree <= bound.
Functional eval_functional(std::span<const Rational> point, int bound);

/// Applies L to the y-block: Q = sum_b q_b(x) y^b  ->  sum_b L(y^b) q_b(x).
/// Throws DegreeOverflow when the y-degree of Q exceeds L's bound.
Poly apply_in_y(const Functional& l, const PolyXY& q);

/// Pointwise linear combination restricted to the smallest bound.
/// Throws PreconditionViolation on empty input, DimensionMismatch on mixed nvars.
Functional functional_lincomb(std::span<const std::pair<Rational, Functional>> terms);

/// {"nvars": n, "bound": D, "coeffs": [{"exp": [...], "val": "p/q"}, ...]}
/// with exponents in ascending graded-lex order and zero values omitted.
nlohmann::json to_json(const Functional& l);
Functional functional_from_json(const nlohmann::json& j);

}  // namespace brf
