#include "brf/diff_deriv.hpp"

#include <algorithm>
#include <string>

#include "brf/errors.hpp"

namespace brf {

CovectorXY CovectorXY::zero(std::size_t nvars) {
  return CovectorXY{nvars, std::vector<PolyXY>(nvars, PolyXY(nvars))};
}

Degree CovectorXY::degree() const {
  Degree best = Degree::minus_infinity();
  for (const auto& c : comps) best = std::max(best, c.degree());
  return best;
}

PolyXY CovectorXY::contract_with_difference() const {
  PolyXY sum(nvars);
  for (std::size_t k = 0; k < comps.size(); ++k) sum += PolyXY::x_minus_y(nvars, k) * comps[k];
  return sum;
}

bool is_difference_derivative(const CovectorXY& d, const Poly& f) {
  if (d.nvars != f.nvars() || d.comps.size() != f.nvars()) return false;
  return d.contract_with_difference() == embed_x(f) - embed_y(f);
}

namespace {

// Sends x_j -> y_j for j < k in the x-block.
Poly substitute_leading_x(const Poly& joint, std::size_t n, std::size_t k) {
  std::vector<std::size_t> map(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) map[i] = i;
  for (std::size_t j = 0; j < k; ++j) map[j] = n + j;
  return joint.remap(2 * n, map);
}

// Exact quotient of `numer` by (x_k - y_k), treating numer as univariate in x_k.
Poly divide_by_x_minus_y(const Poly& numer, std::size_t n, std::size_t k) {
  const std::size_t xk = k;
  const std::size_t yk = n + k;
  // Coefficient polynomials c_j of x_k^j, with the x_k exponent stripped.
  std::map<unsigned, Poly> by_power;
  for (const auto& [e, c] : numer.terms()) {
    Exponent stripped = e;
    stripped.set(xk, 0);
    auto [it, inserted] = by_power.try_emplace(e[xk], Poly(2 * n));
    it->second.add_term(stripped, c);
  }
  Poly quotient(2 * n);
  if (by_power.empty()) return quotient;
  unsigned top = by_power.rbegin()->first;
  Exponent yk_exp(2 * n);
  yk_exp.set(yk, 1);
  // Synthetic division by the root x_k = y_k: q_{j-1} = c_j + y_k q_j.
  Poly carry(2 * n);
  for (unsigned j = top; j >= 1; --j) {
    Poly qj = carry;
    if (auto it = by_power.find(j); it != by_power.end()) qj += it->second;
    Exponent xpow(2 * n);
    xpow.set(xk, j - 1);
    quotient += qj.shifted(xpow);
    carry = qj.shifted(yk_exp);
  }
  Poly remainder = carry;
  if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
  if (!remainder.is_zero()) {
    throw std::logic_error("divided difference: nonzero remainder in exact division");
  }
  return quotient;
}

}  // namespace

PolyXY divided_difference(const PolyXY& p, std::size_t k) {
  const std::size_t n = p.nvars();
  if (k >= n) throw DimensionMismatch("divided difference index out of range");
  Poly upper = substitute_leading_x(p.joint(), n, k);
  std::vector<std::size_t> map(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) map[i] = i;
  map[k] = n + k;
  Poly lower = upper.remap(2 * n, map);
  return PolyXY(n, divide_by_x_minus_y(upper - lower, n, k));
}

CovectorXY nabla(const Poly& f) {
  const std::size_t n = f.nvars();
  PolyXY fx = embed_x(f);
  CovectorXY out{n, {}};
  out.comps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.comps.push_back(divided_difference(fx, k));
  return out;
}

CovectorXY nabla_swapped(const CovectorXY& d) {
  CovectorXY out{d.nvars, {}};
  out.comps.reserve(d.comps.size());
  for (const auto& c : d.comps) out.comps.push_back(c.swapped());
  return out;
}

CovectorXY nabla_product(const Poly& f, const Poly& g, const CovectorXY& df, const CovectorXY& dg) {
  if (f.nvars() != g.nvars() || df.nvars != f.nvars() || dg.nvars != g.nvars() ||
      df.comps.size() != dg.comps.size()) {
    throw DimensionMismatch("nabla_product: nvars mismatch");
  }
  PolyXY gy = embed_y(g);
  PolyXY fx = embed_x(f);
  CovectorXY out{f.nvars(), {}};
  for (std::size_t k = 0; k < df.comps.size(); ++k) {
    out.comps.push_back(df.comps[k] * gy + fx * dg.comps[k]);
  }
  return out;
}

PolyXY DiscrepancyDecomposition::reconstruct(std::size_t m) const {
  PolyXY sum(nvars);
  for (const auto& [kl, t] : t_table) {
    auto [k, l] = kl;
    if (l == m) sum += PolyXY::x_minus_y(nvars, k) * t;
    if (k == m) sum -= PolyXY::x_minus_y(nvars, l) * t;
  }
  return sum;
}

DiscrepancyDecomposition decompose_difference(const CovectorXY& d1, const CovectorXY& d2, int d) {
  const std::size_t n = d1.nvars;
  if (d2.nvars != n || d1.comps.size() != n || d2.comps.size() != n) {
    throw DimensionMismatch("decompose_difference: covector shapes differ");
  }
  if (d1.degree() > Degree(d - 1) || d2.degree() > Degree(d - 1)) {
    throw PreconditionViolation("decompose_difference: derivative degree exceeds d - 1 = " +
                                std::to_string(d - 1));
  }
  CovectorXY w{n, {}};
  for (std::size_t m = 0; m < n; ++m) w.comps.push_back(d1.comps[m] - d2.comps[m]);
  if (!w.contract_with_difference().is_zero()) {
    throw PreconditionViolation(
        "decompose_difference: covectors are not derivatives of the same polynomial");
  }
  DiscrepancyDecomposition out{n, d, {}};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      PolyXY t = divided_difference(w.comps[l], k);
      if (!t.is_zero()) out.t_table.emplace(std::make_pair(k, l), std::move(t));
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (out.reconstruct(m) != w.comps[m]) {
      throw std::logic_error("decompose_difference: reconstruction failed for component " +
                             std::to_string(m + 1));
    }
  }
  return out;
}

}  // namespace brf
