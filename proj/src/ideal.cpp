#include "brf/ideal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "brf/errors.hpp"
#include "brf/monomial_basis.hpp"

namespace brf {

SystemProfile::SystemProfile(std::vector<Poly> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw PreconditionViolation("system must contain at least one polynomial");
  const std::size_t n = polys_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (polys_[i].nvars() != n) {
      throw PreconditionViolation("system is not square: " + std::to_string(n) + " polynomials in " +
                                  std::to_string(polys_[i].nvars()) + " variables");
    }
    Degree d = polys_[i].degree();
    if (d < Degree(1)) {
      throw PreconditionViolation("f" + std::to_string(i + 1) + " has degree " + d.to_string() +
                                  "; every equation must have degree >= 1");
    }
    delta_f_ += d.value() - 1;
  }
}

int SystemProfile::min_degree() const noexcept {
  int best = std::numeric_limits<int>::max();
  for (const auto& p : polys_) best = std::min(best, p.degree().value());
  return best;
}

std::vector<TruncatedGenerator> truncated_generators(const SystemProfile& f, int d) {
  std::vector<TruncatedGenerator> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    int room = d - f[i].degree().value();
    for (const auto& shift : monomials_up_to(f.nvars(), room)) {
      out.push_back({i, shift, f[i].shifted(shift)});
    }
  }
  return out;
}

namespace {

void require_cap(std::size_t nvars, int d, std::uint64_t cap) {
  std::uint64_t dim = truncated_dimension(nvars, d);
  if (dim > cap) {
    throw CapExceeded("truncated space of degree " + std::to_string(d) + " in " + std::to_string(nvars) +
                      " variables has " + std::to_string(dim) + " monomials, cap is " + std::to_string(cap));
  }
}

}  // namespace

MacaulayMatrix macaulay_matrix(const SystemProfile& f, int d, std::uint64_t column_cap) {
  require_cap(f.nvars(), d, column_cap);
  MacaulayMatrix m;
  m.degree = d;
  m.generators = truncated_generators(f, d);
  MonomialIndex index(f.nvars(), d);
  m.columns = index.monomials();
  m.entries = RationalMatrix(m.generators.size(), index.size());
  for (std::size_t r = 0; r < m.generators.size(); ++r) {
    for (const auto& [e, c] : m.generators[r].product.terms()) m.entries(r, *index.find(e)) = c;
  }
  return m;
}

Poly MembershipWitness::reconstruct(std::span<const SpanGenerator> generators) const {
  if (generators.size() != multipliers.size()) throw DimensionMismatch("witness length mismatch");
  if (generators.empty()) throw DimensionMismatch("witness over an empty generator list");
  Poly sum(generators.front().poly.nvars());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += generators[i].poly * multipliers[i];
  return sum;
}

bool MembershipWitness::certifies(const Poly& target, std::span<const SpanGenerator> generators) const {
  if (generators.size() != multipliers.size()) return false;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (multipliers[i].degree() > Degree(generators[i].shift_cap)) return false;
  }
  if (generators.empty()) return target.is_zero();
  return reconstruct(generators) == target;
}

std::optional<MembershipWitness> span_membership(const Poly& target, std::span<const SpanGenerator> generators,
                                                 Execution exec) {
  const std::size_t n = target.nvars();
  // Unknowns: one per (generator, shift) pair.
  struct Unknown {
    std::size_t generator;
    Exponent shift;
  };
  std::vector<Unknown> unknowns;
  int top = target.degree().value_or(0);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].poly.nvars() != n) throw DimensionMismatch("span_membership: generator nvars differ");
    if (generators[g].poly.is_zero()) continue;
    for (const auto& s : monomials_up_to(n, generators[g].shift_cap)) unknowns.push_back({g, s});
    top = std::max(top, generators[g].poly.degree().value() + generators[g].shift_cap);
  }
  MembershipWitness witness;
  witness.multipliers.assign(generators.size(), Poly(n));
  if (target.is_zero()) return witness;
  if (unknowns.empty()) return std::nullopt;

  // Rows: only monomials that occur in some product or in the target.
  MonomialIndex all(n, top);
  std::vector<int> row_of(all.size(), -1);
  std::vector<std::size_t> used;
  auto touch = [&](const Exponent& e) {
    std::size_t idx = *all.find(e);
    if (row_of[idx] < 0) {
      row_of[idx] = 0;
      used.push_back(idx);
    }
    return idx;
  };
  for (const auto& u : unknowns) {
    for (const auto& [e, c] : generators[u.generator].poly.terms()) touch(e + u.shift);
  }
  for (const auto& [e, c] : target.terms()) touch(e);
  std::sort(used.begin(), used.end());
  for (std::size_t r = 0; r < used.size(); ++r) row_of[used[r]] = static_cast<int>(r);

  RationalMatrix a(used.size(), unknowns.size());
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    for (const auto& [e, c] : generators[u.generator].poly.terms()) {
      a(static_cast<std::size_t>(row_of[*all.find(e + u.shift)]), col) = c;
    }
  }
  std::vector<Rational> b(used.size());
  for (const auto& [e, c] : target.terms()) b[static_cast<std::size_t>(row_of[*all.find(e)])] = c;

  auto x = solve_first(a, b, exec);
  if (!x) return std::nullopt;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    if ((*x)[col] != 0) witness.multipliers[unknowns[col].generator].add_term(unknowns[col].shift, (*x)[col]);
  }
  return witness;
}

std::vector<SpanGenerator> system_span_generators(const SystemProfile& f, int d) {
  std::vector<SpanGenerator> gens;
  for (const auto& p : f.polys()) gens.push_back({p, d - p.degree().value()});
  return gens;
}

std::optional<MembershipWitness> membership(const Poly& target, const SystemProfile& f, int d, Execution exec) {
  if (target.nvars() != f.nvars()) throw DimensionMismatch("membership: nvars mismatch");
  if (target.degree() > Degree(d)) {
    throw PreconditionViolation("membership: polynomial of degree " + target.degree().to_string() +
                                " queried at truncation degree " + std::to_string(d));
  }
  auto gens = system_span_generators(f, d);
  return span_membership(target, gens, exec);
}

BoundedRootBasis root_functional_basis(const SystemProfile& f, int D, std::uint64_t column_cap, Execution exec) {
  if (D < 0) throw PreconditionViolation("root_functional_basis: degree must be >= 0");
  MacaulayMatrix m = macaulay_matrix(f, D, column_cap);
  BoundedRootBasis out;
  out.degree = D;
  out.macaulay_rank = matrix_rank(m.entries, exec);
  for (const auto& v : kernel_basis(m.entries, exec)) {
    Functional::Coeffs coeffs;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) coeffs.emplace(m.columns[j], v[j]);
    }
    out.basis.emplace_back(f.nvars(), D, std::move(coeffs));
  }
  return out;
}

std::optional<TruncatedGenerator> first_unannihilated(const Functional& l, const SystemProfile& f, int d) {
  if (l.nvars() != f.nvars()) throw DimensionMismatch("annihilates: nvars mismatch");
  if (d > l.bound()) {
    throw DegreeOverflow("annihilation degree " + std::to_string(d) + " exceeds functional bound " +
                         std::to_string(l.bound()));
  }
  for (auto& g : truncated_generators(f, d)) {
    if (l.apply(g.product) != 0) return g;
  }
  return std::nullopt;
}

bool annihilates(const Functional& l, const SystemProfile& f, int d) {
  return !first_unannihilated(l, f, d).has_value();
}

}  // namespace brf
