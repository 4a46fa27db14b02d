#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace brf {

/// Exponent vector of a monomial x^a = x_1^a_1 ... x_n^a_n.
///
/// Storage is inline; the doubled (x, y) variable set of a 4-variable system is
/// the largest shape the library works with.
class Exponent {
 public:
  static constexpr std::size_t kMaxVars = 8;

  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<unsigned> entries);
  explicit Exponent(std::span<const unsigned> entries);

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return entries_[i]; }
  unsigned total() const noexcept { return total_; }
  bool is_zero() const noexcept { return total_ == 0; }

  void set(std::size_t i, unsigned value);

  Exponent operator+(const Exponent& other) const;

  /// Concatenation (a, b) -> exponent over the variables of a followed by those of b.
  static Exponent concat(const Exponent& a, const Exponent& b);
  /// Entries [offset, offset + count).
  Exponent slice(std::size_t offset, std::size_t count) const;

  std::vector<unsigned> to_vector() const;

  bool operator==(const Exponent& other) const noexcept = default;

 private:
  std::array<std::uint16_t, kMaxVars> entries_{};
  std::uint8_t size_ = 0;
  std::uint16_t total_ = 0;
};

/// Graded lexicographic comparison: total degree first, then x_1 > x_2 > ... on
/// the first differing entry.
std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b) noexcept;

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    return grlex_compare(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

}  // namespace brf
