#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "brf/degree.hpp"
#include "brf/exponent.hpp"
#include "brf/rational.hpp"

namespace brf {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order and no stored coefficient is zero.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  Poly() = default;
  explicit Poly(std::size_t nvars);

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& c = 1);
  /// x_index, 0-based.
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Degree degree() const noexcept;
  Rational coefficient(const Exponent& e) const;

  /// Adds c·x^e in place, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& other) const = default;

  /// Exact substitution x = point.
  Rational eval(std::span<const Rational> point) const;

  /// Multiplies by the monomial x^e.
  Poly shifted(const Exponent& e) const;

  /// Re-expresses the polynomial over `target_nvars` variables, sending
  /// variable i to variable map[i].
  Poly remap(std::size_t target_nvars, std::span<const std::size_t> map) const;

 private:
  void require_same_nvars(const Poly& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

// Free-function spellings of the ring operations.
inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly poly_scale(const Poly& a, const Rational& c) { return a * c; }
inline Rational poly_eval(const Poly& p, std::span<const Rational> point) { return p.eval(point); }

}  // namespace brf
