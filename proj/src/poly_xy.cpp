#include "brf/poly_xy.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "brf/errors.hpp"

namespace brf {

namespace {

Degree block_degree(const Poly& joint, std::size_t offset, std::size_t count) {
  if (joint.is_zero()) return Degree::minus_infinity();
  int best = 0;
  for (const auto& [e, c] : joint.terms()) {
    int total = 0;
    for (std::size_t i = offset; i < offset + count; ++i) total += static_cast<int>(e[i]);
    best = std::max(best, total);
  }
  return best;
}

}  // namespace

PolyXY::PolyXY(std::size_t nvars) : nvars_(nvars), joint_(2 * nvars) {}

PolyXY::PolyXY(std::size_t nvars, Poly joint) : nvars_(nvars), joint_(std::move(joint)) {
  if (joint_.nvars() != 2 * nvars) {
    throw DimensionMismatch("doubled polynomial must have 2*nvars variables");
  }
}

PolyXY PolyXY::embed_x(const Poly& p) {
  std::vector<std::size_t> map(p.nvars());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return PolyXY(p.nvars(), p.remap(2 * p.nvars(), map));
}

PolyXY PolyXY::embed_y(const Poly& p) {
  std::vector<std::size_t> map(p.nvars());
  std::iota(map.begin(), map.end(), p.nvars());
  return PolyXY(p.nvars(), p.remap(2 * p.nvars(), map));
}

PolyXY PolyXY::x_minus_y(std::size_t nvars, std::size_t k) {
  return PolyXY(nvars, Poly::variable(2 * nvars, k) - Poly::variable(2 * nvars, nvars + k));
}

Degree PolyXY::x_degree() const noexcept { return block_degree(joint_, 0, nvars_); }
Degree PolyXY::y_degree() const noexcept { return block_degree(joint_, nvars_, nvars_); }

PolyXY PolyXY::swapped() const {
  std::vector<std::size_t> map(2 * nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    map[i] = nvars_ + i;
    map[nvars_ + i] = i;
  }
  return PolyXY(nvars_, joint_.remap(2 * nvars_, map));
}

void PolyXY::require_same_nvars(const PolyXY& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("doubled polynomials over different nvars");
}

PolyXY& PolyXY::operator+=(const PolyXY& other) {
  require_same_nvars(other);
  joint_ += other.joint_;
  return *this;
}

PolyXY& PolyXY::operator-=(const PolyXY& other) {
  require_same_nvars(other);
  joint_ -= other.joint_;
  return *this;
}

PolyXY& PolyXY::operator*=(const Rational& c) {
  joint_ *= c;
  return *this;
}

PolyXY operator*(const PolyXY& a, const PolyXY& b) {
  a.require_same_nvars(b);
  return PolyXY(a.nvars_, a.joint_ * b.joint_);
}

PolyXY PolyXY::operator-() const { return PolyXY(nvars_, -joint_); }

}  // namespace brf
