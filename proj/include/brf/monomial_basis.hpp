#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "brf/exponent.hpp"

namespace brf {

/// C(n + d, n): the dimension of the space of polynomials of degree <= d in n
/// variables. Saturates at UINT64_MAX; zero for d < 0.
std::uint64_t truncated_dimension(std::size_t nvars, int degree);

/// All exponents with total <= degree, ascending graded-lex. Empty for degree < 0.
std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree);

/// Exponents with total exactly `degree`, ascending graded-lex.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

/// Ascending graded-lex monomial basis of a truncated space with reverse lookup.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, int degree);

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }

  std::optional<std::size_t> find(const Exponent& e) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

}  // namespace brf
