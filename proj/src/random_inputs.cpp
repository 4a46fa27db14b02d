#include "brf/random_inputs.hpp"

#include <algorithm>
#include <vector>

#include "brf/monomial_basis.hpp"

namespace brf {

namespace {

std::seed_seq make_seed(std::uint64_t seed, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index), 0x62726675u};
}

}  // namespace

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t case_index) {
  auto seq = make_seed(seed, case_index);
  engine_.seed(seq);
}

int CaseRng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational CaseRng::small_rational() {
  int p = uniform(1, 5) * (uniform(0, 1) == 0 ? 1 : -1);
  int q = uniform(1, 3);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Poly random_poly(CaseRng& rng, std::size_t nvars, int degree, int max_terms) {
  Poly p(nvars);
  if (degree < 0) return p;
  auto top = monomials_of_degree(nvars, degree);
  p.add_term(top[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(top.size()) - 1))], rng.small_rational());
  auto all = monomials_up_to(nvars, degree);
  int extra = rng.uniform(0, std::max(0, max_terms - 1));
  for (int t = 0; t < extra; ++t) {
    const auto& e = all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
    if (p.coefficient(e) == 0) p.add_term(e, rng.small_rational());
  }
  return p;
}

SystemProfile random_system(CaseRng& rng, std::size_t nvars, int degmax, int max_terms) {
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < nvars; ++i) polys.push_back(random_poly(rng, nvars, rng.uniform(1, degmax), max_terms));
  return SystemProfile(std::move(polys));
}

Functional random_root_functional(CaseRng& rng, const SystemProfile& f, int D) {
  auto basis = root_functional_basis(f, D).basis;
  if (basis.empty()) return Functional(f.nvars(), D);
  std::vector<std::pair<Rational, Functional>> terms;
  for (auto& l : basis) {
    Rational c = rng.uniform(0, 3) == 0 ? Rational(0) : rng.small_rational();
    terms.emplace_back(c, std::move(l));
  }
  return functional_lincomb(terms);
}

Poly random_member(CaseRng& rng, const SystemProfile& f, int d) {
  Poly sum(f.nvars());
  for (const auto& fi : f.polys()) {
    int room = d - fi.degree().value();
    if (room < 0) continue;
    sum += fi * random_poly(rng, f.nvars(), rng.uniform(0, room), 3);
  }
  return sum;
}

Functional random_tail(CaseRng& rng, std::size_t nvars, int from, int to) {
  Functional::Coeffs coeffs;
  for (int t = std::max(from + 1, 0); t <= to; ++t) {
    for (const auto& e : monomials_of_degree(nvars, t)) {
      if (rng.uniform(0, 1) == 1) coeffs.emplace(e, rng.small_rational());
    }
  }
  return Functional(nvars, std::max(to, 0), std::move(coeffs));
}

}  // namespace brf
