#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brf {

/// Minimal contract the polynomial layer relies on: exact field arithmetic with
/// decidable equality.
template <class T>
concept ExactField = std::regular<T> && requires(T a, T b) {
  { T(a + b) };
  { T(a - b) };
  { T(a * b) };
  { T(a / b) };
  { T(-a) };
  { a == b } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

using Rational = mpq_class;
static_assert(ExactField<Rational>);

/// Parses "p" or "p/q" (optional leading sign). Throws brf::Error on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" text.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace brf
