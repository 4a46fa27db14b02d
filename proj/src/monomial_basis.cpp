#include "brf/monomial_basis.hpp"

#include <limits>

#include "brf/errors.hpp"

namespace brf {

std::uint64_t truncated_dimension(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  // C(n + d, n) built up as a product of exact partial binomials.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= nvars; ++i) {
    acc = acc * (static_cast<unsigned>(degree) + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void fill(Exponent& current, std::size_t slot, unsigned remaining, std::vector<Exponent>& out) {
  if (slot + 1 == current.size()) {
    current.set(slot, remaining);
    out.push_back(current);
    current.set(slot, 0);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    current.set(slot, v);
    fill(current, slot + 1, remaining - v, out);
  }
  current.set(slot, 0);
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0 || nvars == 0) return out;
  Exponent current(nvars);
  fill(current, 0, static_cast<unsigned>(degree), out);
  return out;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  for (int t = 0; t <= degree; ++t) {
    auto layer = monomials_of_degree(nvars, t);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

MonomialIndex::MonomialIndex(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree), monomials_(monomials_up_to(nvars, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace brf
