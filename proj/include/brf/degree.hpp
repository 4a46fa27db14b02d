#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace brf {

/// Total degree with a distinguished minus-infinity for the zero polynomial.
/// Minus infinity compares below every integer and absorbs addition.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const noexcept { return value_ != kMinusInf; }
  /// Only meaningful when is_finite().
  constexpr int value() const noexcept { return value_; }
  /// The finite value, or `fallback` for minus infinity.
  constexpr int value_or(int fallback) const noexcept { return is_finite() ? value_ : fallback; }

  constexpr auto operator<=>(const Degree&) const = default;
  constexpr bool operator==(const Degree&) const = default;

  friend constexpr Degree operator+(Degree a, int b) {
    return a.is_finite() ? Degree(a.value_ + b) : a;
  }
  friend constexpr Degree operator-(Degree a, int b) { return a + (-b); }
  friend constexpr Degree operator+(Degree a, Degree b) {
    return a.is_finite() && b.is_finite() ? Degree(a.value_ + b.value_) : minus_infinity();
  }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "-inf"; }

 private:
  static constexpr int kMinusInf = std::numeric_limits<int>::min();
  int value_ = kMinusInf;
};

inline std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

}  // namespace brf
