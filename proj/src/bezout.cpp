#include "brf/bezout.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>
#include <unordered_map>

#include "brf/errors.hpp"
#include "brf/monomial_basis.hpp"
#include "brf/poly_io.hpp"

namespace brf {

const DerivativeChoice& BezoutConfig::for_system(std::size_t i) const {
  static const DerivativeChoice kCanonical{};
  if (system.empty()) return kCanonical;
  if (i >= system.size()) throw DimensionMismatch("BezoutConfig: fewer derivative choices than equations");
  return system[i];
}

CovectorXY resolve_derivative(const Poly& p, const DerivativeChoice& choice, int degree_cap) {
  switch (choice.kind) {
    case DerivativeChoice::Kind::Canonical:
      return nabla(p);
    case DerivativeChoice::Kind::Swapped:
      return nabla_swapped(nabla(p));
    case DerivativeChoice::Kind::Supplied:
      break;
  }
  const CovectorXY& d = choice.supplied;
  if (d.nvars != p.nvars() || d.comps.size() != p.nvars()) {
    throw PreconditionViolation("supplied derivative has the wrong shape");
  }
  if (!is_difference_derivative(d, p)) {
    throw PreconditionViolation("supplied covector is not a difference derivative of " + to_string(p));
  }
  if (d.degree() > Degree(degree_cap)) {
    throw PreconditionViolation("supplied derivative of " + to_string(p) + " has degree " +
                                d.degree().to_string() + " > " + std::to_string(degree_cap));
  }
  return d;
}

PolyXY determinant(const PolyXYMatrix& m) {
  const std::size_t size = m.size();
  for (const auto& row : m) {
    if (row.size() != size) throw DimensionMismatch("determinant: matrix is not square");
  }
  if (size == 0) throw DimensionMismatch("determinant: empty matrix");
  if (size > 16) throw DimensionMismatch("determinant: matrix too large for cofactor expansion");
  const std::size_t n = m[0][0].nvars();

  // minor(mask) = det of rows [0, popcount(mask)) restricted to the columns in mask.
  std::unordered_map<std::uint32_t, PolyXY> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> PolyXY {
    if (mask == 0) return PolyXY(n, Poly::constant(2 * n, 1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
    PolyXY sum(n);
    std::size_t position = 0;
    for (std::size_t col = 0; col < size; ++col) {
      if (!(mask & (1u << col))) continue;
      const PolyXY& entry = m[row][col];
      if (!entry.is_zero()) {
        PolyXY term = entry * self(self, mask & ~(1u << col));
        if ((row + position) % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return minor(minor, static_cast<std::uint32_t>((1u << size) - 1));
}

namespace {

int resolve_budget(const Poly& target, std::optional<int> budget) {
  int d = budget.value_or(target.degree().value_or(0));
  if (target.degree() > Degree(d)) {
    throw PreconditionViolation("degree budget " + std::to_string(d) + " below deg F = " +
                                target.degree().to_string());
  }
  return d;
}

std::vector<CovectorXY> system_derivatives(const SystemProfile& f, const BezoutConfig& cfg) {
  std::vector<CovectorXY> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    out.push_back(resolve_derivative(f[i], cfg.for_system(i), f[i].degree().value() - 1));
  }
  return out;
}

PolyXYMatrix assemble(const SystemProfile& f, const std::vector<CovectorXY>& df, const Poly& target,
                      const CovectorXY& dtarget, bool bottom_in_y) {
  const std::size_t n = f.nvars();
  PolyXYMatrix m(n + 1, std::vector<PolyXY>(n + 1, PolyXY(n)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[k][i] = df[i].comps[k];
    m[k][n] = dtarget.comps[k];
  }
  for (std::size_t i = 0; i < n; ++i) m[n][i] = bottom_in_y ? embed_y(f[i]) : embed_x(f[i]);
  m[n][n] = bottom_in_y ? embed_y(target) : embed_x(target);
  return m;
}

}  // namespace

PolyXYMatrix bordered_matrix(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg, int budget,
                             bool bottom_in_y) {
  if (target.nvars() != f.nvars()) throw DimensionMismatch("bezout: target nvars differs from system");
  int d = resolve_budget(target, budget);
  auto df = system_derivatives(f, cfg);
  auto dt = resolve_derivative(target, cfg.target, d - 1);
  return assemble(f, df, target, dt, bottom_in_y);
}

BezoutForms bezout_forms(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg, int budget) {
  if (target.nvars() != f.nvars()) throw DimensionMismatch("bezout: target nvars differs from system");
  int d = resolve_budget(target, budget);
  auto df = system_derivatives(f, cfg);
  auto dt = resolve_derivative(target, cfg.target, d - 1);
  return {determinant(assemble(f, df, target, dt, false)), determinant(assemble(f, df, target, dt, true))};
}

PolyXY bezout_poly(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg, std::optional<int> budget) {
  int d = resolve_budget(target, budget);
  BezoutForms forms = bezout_forms(f, target, cfg, d);
  if (forms.x_form != forms.y_form) {
    throw std::logic_error("bezout_poly: the f(x) and f(y) determinant forms differ");
  }
  if (forms.x_form.degree() > Degree(f.delta_f() + d)) {
    throw std::logic_error("bezout_poly: degree " + forms.x_form.degree().to_string() + " exceeds delta_f + d = " +
                           std::to_string(f.delta_f() + d));
  }
  return std::move(forms.x_form);
}

std::vector<SpanGenerator> antisymmetric_pair_generators(const SystemProfile& f, int total_cap) {
  const std::size_t n = f.nvars();
  std::vector<SpanGenerator> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyXY g = embed_x(f[i]) * embed_y(f[j]) - embed_y(f[i]) * embed_x(f[j]);
      out.push_back({g.joint(), total_cap - f[i].degree().value() - f[j].degree().value()});
    }
  }
  return out;
}

UniquenessCertificate target_choice_certificate(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg_a,
                                                const BezoutConfig& cfg_b, std::optional<int> budget,
                                                Execution exec) {
  int d = resolve_budget(target, budget);
  UniquenessCertificate cert;
  cert.difference = bezout_poly(f, target, cfg_a, d) - bezout_poly(f, target, cfg_b, d);
  cert.generators = antisymmetric_pair_generators(f, f.delta_f() + d);
  cert.witness = span_membership(cert.difference.joint(), cert.generators, exec);
  return cert;
}

UniquenessCertificate system_choice_certificate(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg_a,
                                                const BezoutConfig& cfg_b, std::optional<int> budget,
                                                Execution exec) {
  int d = resolve_budget(target, budget);
  UniquenessCertificate cert;
  cert.difference = bezout_poly(f, target, cfg_a, d) - bezout_poly(f, target, cfg_b, d);
  cert.generators = antisymmetric_pair_generators(f, f.delta_f() + d);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    PolyXY g = embed_x(f[i]) * embed_y(target) - embed_y(f[i]) * embed_x(target);
    cert.generators.push_back({g.joint(), f.delta_f() - f[i].degree().value()});
  }
  cert.witness = span_membership(cert.difference.joint(), cert.generators, exec);
  return cert;
}

namespace {

void require_annihilating(const Functional& l, int delta, const SystemProfile& f, const char* name) {
  if (l.nvars() != f.nvars()) throw DimensionMismatch(std::string(name) + ": nvars differs from system");
  if (delta < 0) throw PreconditionViolation(std::string(name) + ": extension degree must be >= 0");
  const int need = f.delta_f() + delta;
  if (l.bound() < need) {
    throw PreconditionViolation(std::string(name) + ": functional bound " + std::to_string(l.bound()) +
                                " below delta_f + delta = " + std::to_string(need));
  }
  if (auto g = first_unannihilated(l, f, need)) {
    throw NotAnnihilating(std::string(name) + ": functional does not annul " + to_string(Poly::monomial(g->shift)) +
                          " * f" + std::to_string(g->index + 1) + " at degree " + std::to_string(need));
  }
}

}  // namespace

Poly extend_step(const Functional& l, int delta, const SystemProfile& f, const Poly& target, const BezoutConfig& cfg,
                 std::optional<int> budget) {
  require_annihilating(l, delta, f, "extend_step");
  PolyXY r = bezout_poly(f, target, cfg, budget);
  if (r.y_degree() > Degree(l.bound())) {
    throw DegreeOverflow("extend_step: y-degree of the Bezoutian " + r.y_degree().to_string() +
                         " exceeds functional bound " + std::to_string(l.bound()));
  }
  return apply_in_y(l, r);
}

BezoutExpansion::BezoutExpansion(const SystemProfile& f, const BezoutConfig& cfg) : nvars_(f.nvars()) {
  const std::size_t n = nvars_;
  auto df = system_derivatives(f, cfg);
  // Only the first n columns matter for last-column cofactors.
  PolyXYMatrix m = assemble(f, df, Poly(n), CovectorXY::zero(n), false);
  for (std::size_t r = 0; r <= n; ++r) {
    PolyXYMatrix minor;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == r) continue;
      minor.emplace_back(m[k].begin(), m[k].begin() + static_cast<std::ptrdiff_t>(n));
    }
    PolyXY c = determinant(minor);
    if ((r + n) % 2 == 1) c = -c;
    cofactors_.push_back(std::move(c));
  }
}

PolyXY BezoutExpansion::evaluate(const Poly& target, const CovectorXY& dt) const {
  if (target.nvars() != nvars_ || dt.nvars != nvars_) throw DimensionMismatch("BezoutExpansion: nvars mismatch");
  PolyXY r = embed_x(target) * cofactors_[nvars_];
  for (std::size_t k = 0; k < nvars_; ++k) r += dt.comps[k] * cofactors_[k];
  return r;
}

namespace {

CovectorXY target_derivative(const Poly& p, const DerivativeChoice& choice) {
  switch (choice.kind) {
    case DerivativeChoice::Kind::Canonical:
      return nabla(p);
    case DerivativeChoice::Kind::Swapped:
      return nabla_swapped(nabla(p));
    case DerivativeChoice::Kind::Supplied:
      break;
  }
  throw PreconditionViolation("product_functional needs a derivative operator, not a supplied covector");
}

// Dense table of a functional's values over the monomials of degree <= bound.
class DenseValues {
 public:
  DenseValues(const Functional& l, int bound) : index_(l.nvars(), bound), values_(index_.size()) {
    for (const auto& [e, v] : l.coeffs()) values_[*index_.find(e)] = v;
  }

  const Rational* find(const Exponent& e) const {
    auto i = index_.find(e);
    if (!i) throw DegreeOverflow("monomial outside tabulated functional bound");
    return values_[*i] == 0 ? nullptr : &values_[*i];
  }

 private:
  MonomialIndex index_;
  std::vector<Rational> values_;
};

// Adds L(y).(a · b) to h without forming the product a · b.
void accumulate_pairing(const PolyXY& a, const PolyXY& b, const DenseValues& ly, Poly& h) {
  const std::size_t n = a.nvars();
  Rational scratch;
  for (const auto& [ea, ca] : a.joint().terms()) {
    for (const auto& [eb, cb] : b.joint().terms()) {
      Exponent e = ea + eb;
      const Rational* v = ly.find(e.slice(n, n));
      if (!v) continue;
      scratch = ca * cb;
      scratch *= *v;
      h.add_term(e.slice(0, n), scratch);
    }
  }
}

}  // namespace

Functional product_functional(const Functional& l1, int delta1, const Functional& l2, int delta2,
                              const SystemProfile& f, const BezoutConfig& cfg, Execution exec) {
  require_annihilating(l1, delta1, f, "product_functional (L1)");
  require_annihilating(l2, delta2, f, "product_functional (L2)");
  if (cfg.target.kind == DerivativeChoice::Kind::Supplied) {
    throw PreconditionViolation("product_functional needs a derivative operator, not a supplied covector");
  }
  const std::size_t n = f.nvars();
  const int bound = f.delta_f() + delta1 + delta2 + 1;
  const int y_bound = std::max(l2.bound(), f.delta_f() + bound);
  const Functional l2_ext = l2.zero_extended(y_bound);
  const std::vector<Exponent> monomials = monomials_up_to(n, bound);
  std::vector<Rational> values(monomials.size());

  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      Poly target = Poly::monomial(monomials[i]);
      PolyXY r = bezout_poly(f, target, cfg, bound);
      values[i] = l1.apply(apply_in_y(l2_ext, r));
    }
  } else {
    const BezoutExpansion expansion(f, cfg);
    const DenseValues l2_values(l2_ext, y_bound);
    std::exception_ptr failure;
    const auto count = static_cast<long>(monomials.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        const auto ui = static_cast<std::size_t>(i);
        Poly target = Poly::monomial(monomials[ui]);
        CovectorXY dt = target_derivative(target, cfg.target);
        Poly h(n);
        for (std::size_t k = 0; k < n; ++k) accumulate_pairing(dt.comps[k], expansion.cofactors()[k], l2_values, h);
        accumulate_pairing(embed_x(target), expansion.cofactors()[n], l2_values, h);
        values[ui] = l1.apply(h);
      } catch (...) {
#pragma omp critical(brf_product_functional_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  Functional::Coeffs coeffs;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (values[i] != 0) coeffs.emplace_hint(coeffs.end(), monomials[i], values[i]);
  }
  return Functional(n, bound, std::move(coeffs));
}

CommutativityReport verify_commutativity(const Functional& l1, int delta1, const Functional& l2, int delta2,
                                         const SystemProfile& f, const BezoutConfig& cfg, Execution exec) {
  CommutativityReport report;
  report.forward = product_functional(l1, delta1, l2, delta2, f, cfg, exec);
  report.backward = product_functional(l2, delta2, l1, delta1, f, cfg, exec);
  auto cmp = compare_functionals(report.forward, report.backward);
  report.holds = cmp.equal && !cmp.partial;
  report.first_difference = cmp.first_difference;
  return report;
}

}  // namespace brf
