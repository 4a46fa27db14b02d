#include "brf/functional.hpp"

#include <algorithm>
#include <string>

#include "brf/errors.hpp"

namespace brf {

Functional::Functional(std::size_t nvars, int bound) : nvars_(nvars), bound_(bound) {
  if (bound < 0) throw PreconditionViolation("functional bound must be >= 0");
}

Functional::Functional(std::size_t nvars, int bound, Coeffs coeffs) : Functional(nvars, bound) {
  for (auto& [e, c] : coeffs) {
    if (e.size() != nvars) throw DimensionMismatch("functional exponent length does not match nvars");
    if (static_cast<int>(e.total()) > bound) {
      throw PreconditionViolation("functional coefficient above its bound " + std::to_string(bound));
    }
    if (c != 0) coeffs_.emplace_hint(coeffs_.end(), e, std::move(c));
  }
}

Functional Functional::dual_monomial(const Exponent& e, int bound) {
  Coeffs c;
  c.emplace(e, 1);
  return Functional(e.size(), bound, std::move(c));
}

Rational Functional::at(const Exponent& e) const {
  if (static_cast<int>(e.total()) > bound_) {
    throw DegreeOverflow("monomial of degree " + std::to_string(e.total()) +
                         " outside functional bound " + std::to_string(bound_));
  }
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Functional::apply(const Poly& f) const {
  if (f.nvars() != nvars_) throw DimensionMismatch("functional and polynomial nvars differ");
  if (f.degree() > Degree(bound_)) {
    throw DegreeOverflow("polynomial of degree " + f.degree().to_string() +
                         " outside functional bound " + std::to_string(bound_));
  }
  Rational sum = 0;
  for (const auto& [e, c] : f.terms()) {
    auto it = coeffs_.find(e);
    if (it != coeffs_.end()) sum += c * it->second;
  }
  return sum;
}

Functional Functional::zero_extended(int new_bound) const {
  if (new_bound < bound_) throw PreconditionViolation("zero_extended: new bound below current bound");
  Functional out = *this;
  out.bound_ = new_bound;
  return out;
}

Functional Functional::restricted(int new_bound) const {
  if (new_bound < 0) throw PreconditionViolation("restricted: negative bound");
  Coeffs kept;
  for (const auto& [e, c] : coeffs_) {
    if (static_cast<int>(e.total()) <= new_bound) kept.emplace_hint(kept.end(), e, c);
  }
  return Functional(nvars_, new_bound, std::move(kept));
}

FunctionalComparison compare_functionals(const Functional& a, const Functional& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("compare_functionals: nvars differ");
  FunctionalComparison out;
  int common = std::min(a.bound(), b.bound());
  out.partial = a.bound() != b.bound();
  Functional ra = a.restricted(common);
  Functional rb = b.restricted(common);
  auto ia = ra.coeffs().begin();
  auto ib = rb.coeffs().begin();
  GrlexLess less;
  while (ia != ra.coeffs().end() || ib != rb.coeffs().end()) {
    if (ib == rb.coeffs().end() || (ia != ra.coeffs().end() && less(ia->first, ib->first))) {
      out.first_difference = ia->first;
      return out;
    }
    if (ia == ra.coeffs().end() || less(ib->first, ia->first)) {
      out.first_difference = ib->first;
      return out;
    }
    if (ia->second != ib->second) {
      out.first_difference = ia->first;
      return out;
    }
    ++ia;
    ++ib;
  }
  out.equal = true;
  return out;
}

Functional eval_functional(std::span<const Rational> point, int bound) {
  if (point.empty()) throw DimensionMismatch("evaluation point must have at least one coordinate");
  if (bound < 0) throw PreconditionViolation("eval_functional: bound must be >= 0");
  const std::size_t n = point.size();
  Functional::Coeffs coeffs;
  // Build monomial values layer by layer: x^(a + e_i) = x^a * point_i.
  std::vector<std::pair<Exponent, Rational>> layer{{Exponent(n), Rational(1)}};
  coeffs.emplace(Exponent(n), 1);
  for (int t = 1; t <= bound; ++t) {
    std::vector<std::pair<Exponent, Rational>> next;
    for (const auto& [e, v] : layer) {
      // Extend only along variables at or after the last nonzero slot so each
      // monomial is produced exactly once.
      std::size_t first = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] != 0) first = i;
      }
      for (std::size_t i = first; i < n; ++i) {
        Exponent up = e;
        up.set(i, e[i] + 1);
        next.emplace_back(up, v * point[i]);
      }
    }
    for (const auto& [e, v] : next) {
      if (v != 0) coeffs.emplace(e, v);
    }
    layer = std::move(next);
  }
  return Functional(n, bound, std::move(coeffs));
}

Poly apply_in_y(const Functional& l, const PolyXY& q) {
  const std::size_t n = q.nvars();
  if (l.nvars() != n) throw DimensionMismatch("apply_in_y: functional and polynomial nvars differ");
  if (q.y_degree() > Degree(l.bound())) {
    throw DegreeOverflow("y-degree " + q.y_degree().to_string() + " exceeds functional bound " +
                         std::to_string(l.bound()));
  }
  Poly out(n);
  for (const auto& [e, c] : q.joint().terms()) {
    Rational v = l.at(e.slice(n, n));
    if (v == 0) continue;
    out.add_term(e.slice(0, n), c * v);
  }
  return out;
}

Functional functional_lincomb(std::span<const std::pair<Rational, Functional>> terms) {
  if (terms.empty()) throw PreconditionViolation("functional_lincomb: empty input");
  const std::size_t n = terms.front().second.nvars();
  int bound = terms.front().second.bound();
  for (const auto& [c, l] : terms) {
    if (l.nvars() != n) throw DimensionMismatch("functional_lincomb: nvars differ");
    bound = std::min(bound, l.bound());
  }
  Functional::Coeffs acc;
  for (const auto& [c, l] : terms) {
    if (c == 0) continue;
    for (const auto& [e, v] : l.coeffs()) {
      if (static_cast<int>(e.total()) > bound) continue;
      auto [it, inserted] = acc.try_emplace(e, c * v);
      if (!inserted) it->second += c * v;
    }
  }
  return Functional(n, bound, std::move(acc));
}

nlohmann::json to_json(const Functional& l) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, v] : l.coeffs()) {
    coeffs.push_back({{"exp", e.to_vector()}, {"val", v.get_str()}});
  }
  return {{"nvars", l.nvars()}, {"bound", l.bound()}, {"coeffs", std::move(coeffs)}};
}

Functional functional_from_json(const nlohmann::json& j) {
  try {
    auto n = j.at("nvars").get<std::size_t>();
    int bound = j.at("bound").get<int>();
    Functional::Coeffs coeffs;
    for (const auto& entry : j.at("coeffs")) {
      auto exp = entry.at("exp").get<std::vector<unsigned>>();
      if (exp.size() != n) throw DimensionMismatch("functional JSON: exponent length != nvars");
      Exponent e(exp);
      Rational v = parse_rational(entry.at("val").get<std::string>());
      auto [it, inserted] = coeffs.try_emplace(e, v);
      if (!inserted) throw Error("functional JSON: duplicate exponent");
    }
    return Functional(n, bound, std::move(coeffs));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("functional JSON: ") + ex.what());
  }
}

}  // namespace brf
