#include "brf/poly.hpp"

#include <string>

#include "brf/errors.hpp"

namespace brf {

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > Exponent::kMaxVars) {
    throw DimensionMismatch("too many variables: " + std::to_string(nvars));
  }
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars);
  e.set(index, 1);
  return monomial(e);
}

Degree Poly::degree() const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  // Graded order: the last key has the largest total.
  return static_cast<int>(terms_.rbegin()->first.total());
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("term exponent length does not match nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_nvars(const Poly& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionMismatch("nvars mismatch: " + std::to_string(nvars_) + " vs " +
                            std::to_string(other.nvars_));
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_nvars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_nvars(b);
  Poly out(a.nvars_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ea + eb, prod);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw DimensionMismatch("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Poly Poly::shifted(const Exponent& e) const {
  if (e.size() != nvars_) throw DimensionMismatch("shift exponent length does not match nvars");
  Poly out(nvars_);
  for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t + e, c);
  return out;
}

Poly Poly::remap(std::size_t target_nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw DimensionMismatch("variable map length does not match nvars");
  Poly out(target_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent t(target_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t.set(map[i], t[map[i]] + e[i]);
    }
    out.add_term(t, c);
  }
  return out;
}

}  // namespace brf
