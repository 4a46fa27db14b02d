#include "brf/exponent.hpp"

#include <limits>

#include "brf/errors.hpp"

namespace brf {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > Exponent::kMaxVars) {
    throw DimensionMismatch("exponent supports at most " + std::to_string(Exponent::kMaxVars) +
                            " variables, got " + std::to_string(nvars));
  }
}

}  // namespace

Exponent::Exponent(std::size_t nvars) {
  check_nvars(nvars);
  size_ = static_cast<std::uint8_t>(nvars);
}

Exponent::Exponent(std::initializer_list<unsigned> entries)
    : Exponent(std::span<const unsigned>(entries.begin(), entries.size())) {}

Exponent::Exponent(std::span<const unsigned> entries) : Exponent(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

void Exponent::set(std::size_t i, unsigned value) {
  if (i >= size_) throw DimensionMismatch("exponent index out of range");
  if (value > std::numeric_limits<std::uint16_t>::max()) throw Error("exponent entry too large");
  unsigned total = total_ - entries_[i] + value;
  if (total > std::numeric_limits<std::uint16_t>::max()) throw Error("exponent total too large");
  entries_[i] = static_cast<std::uint16_t>(value);
  total_ = static_cast<std::uint16_t>(total);
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (size_ != other.size_) throw DimensionMismatch("exponent length mismatch");
  Exponent out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, entries_[i] + other.entries_[i]);
  return out;
}

Exponent Exponent::concat(const Exponent& a, const Exponent& b) {
  Exponent out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b[i]);
  return out;
}

Exponent Exponent::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > size_) throw DimensionMismatch("exponent slice out of range");
  Exponent out(count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, entries_[offset + i]);
  return out;
}

std::vector<unsigned> Exponent::to_vector() const {
  return std::vector<unsigned>(entries_.begin(), entries_.begin() + size_);
}

std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b) noexcept {
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) h = h * 1000003u + e[i];
  return h;
}

}  // namespace brf
