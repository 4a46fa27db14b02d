#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "brf/functional.hpp"
#include "brf/ideal.hpp"
#include "brf/poly.hpp"

namespace brf {

/// Deterministic generator for one verification case, keyed by (seed, case index).
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t case_index);

  int uniform(int lo, int hi);
  /// p/q with 1 <= |p| <= 5, 1 <= q <= 3.
  Rational small_rational();
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random polynomial of exactly the given degree (zero when degree < 0) with
/// up to `max_terms` terms.
Poly random_poly(CaseRng& rng, std::size_t nvars, int degree, int max_terms = 5);

/// Square system with degrees uniform in [1, degmax].
SystemProfile random_system(CaseRng& rng, std::size_t nvars, int degmax, int max_terms = 4);

/// Random rational combination of the bounded root functional basis at degree D.
Functional random_root_functional(CaseRng& rng, const SystemProfile& f, int D);

/// sum_i f_i g^i with random g^i of degree <= d - deg f_i.
Poly random_member(CaseRng& rng, const SystemProfile& f, int d);

/// Random values on the monomials of degree in (from, to], zero below.
Functional random_tail(CaseRng& rng, std::size_t nvars, int from, int to);

}  // namespace brf
