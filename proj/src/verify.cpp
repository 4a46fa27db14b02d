#include "brf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>

#include "brf/bezout.hpp"
#include "brf/diff_deriv.hpp"
#include "brf/errors.hpp"
#include "brf/ideal.hpp"
#include "brf/poly_io.hpp"
#include "brf/random_inputs.hpp"

namespace brf {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::kLemma1, "lemma1"}, {Suite::kLemma2, "lemma2"}, {Suite::kThm1, "thm1"},
    {Suite::kThm1Unique, "thm1-unique"}, {Suite::kThm2, "thm2"}, {Suite::kThm3, "thm3"},
    {Suite::kThm4, "thm4"},
};

nlohmann::json system_json(const SystemProfile& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : f.polys()) out.push_back(to_string(p));
  return out;
}

// Collects failed checks for one case.
class Checks {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  const std::string& failure() const { return first_failure_; }

 private:
  std::string first_failure_;
};

std::size_t draw_nvars(CaseRng& rng, const VerifyOptions& opts, std::size_t min_n) {
  const int hi = static_cast<int>(std::max<std::size_t>(opts.nmax, 1));
  const int lo = std::min(static_cast<int>(min_n), hi);
  return static_cast<std::size_t>(rng.uniform(lo, hi));
}

CovectorXY derivative_under_test(const Poly& f, const VerifyOptions& opts) {
  CovectorXY d = nabla(f);
  if (opts.corrupt_derivative) d.comps[0] += PolyXY(f.nvars(), Poly::constant(2 * f.nvars(), 1));
  return d;
}

// Membership in (f)^{<=d}, treating degree overflow as non-membership.
bool in_truncated_ideal(const Poly& p, const SystemProfile& f, int d, Execution exec) {
  if (p.degree() > Degree(d)) return false;
  auto w = membership(p, f, d, exec);
  return w && w->certifies(p, system_span_generators(f, d));
}

BezoutConfig swapped_system(std::size_t n) {
  BezoutConfig cfg;
  cfg.system.assign(n, DerivativeChoice::swapped());
  return cfg;
}

BezoutConfig swapped_target() {
  BezoutConfig cfg;
  cfg.target = DerivativeChoice::swapped();
  return cfg;
}

void case_lemma1(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  const std::size_t n = draw_nvars(rng, opts, 1);
  Poly f = random_poly(rng, n, rng.uniform(0, opts.degmax), 6);
  Poly g = random_poly(rng, n, rng.uniform(0, opts.degmax), 6);
  Rational a = rng.small_rational();
  Rational b = rng.small_rational();
  inputs = {{"nvars", n}, {"F", to_string(f)}, {"G", to_string(g)}, {"a", a.get_str()}, {"b", b.get_str()}};

  CovectorXY df = derivative_under_test(f, opts);
  checks.expect(is_difference_derivative(df, f), "telescoping identity fails for F");
  checks.expect(df.degree() <= f.degree() - 1, "derivative of F is not monotonous");
  CovectorXY combined = nabla(a * f + b * g);
  CovectorXY dg = nabla(g);
  for (std::size_t k = 0; k < n; ++k) {
    checks.expect(combined.comps[k] == df.comps[k] * a + dg.comps[k] * b,
                  "linearity fails in component " + std::to_string(k + 1));
  }
}

void case_lemma2(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  const std::size_t n = draw_nvars(rng, opts, 2);
  const int deg = rng.uniform(1, std::max(1, opts.degmax));
  Poly f = random_poly(rng, n, deg, 6);
  Poly g = random_poly(rng, n, rng.uniform(0, std::max(1, opts.degmax)), 4);
  const int d = deg + rng.uniform(0, 1);
  inputs = {{"nvars", n}, {"F", to_string(f)}, {"G", to_string(g)}, {"d", d}};

  CovectorXY d1 = derivative_under_test(f, opts);
  CovectorXY d2 = nabla_swapped(d1);
  checks.expect(is_difference_derivative(d2, f), "swapped derivative fails the telescoping identity");
  DiscrepancyDecomposition dec = decompose_difference(d1, d2, d);
  for (std::size_t m = 0; m < n; ++m) {
    checks.expect(dec.reconstruct(m) == d1.comps[m] - d2.comps[m],
                  "discrepancy reconstruction fails in component " + std::to_string(m + 1));
  }
  for (const auto& [kl, t] : dec.t_table) {
    checks.expect(t.degree() <= Degree(d - 2), "T^{" + std::to_string(kl.first + 1) + std::to_string(kl.second + 1) +
                                                    "} exceeds degree d - 2");
  }
  CovectorXY dp = nabla_product(f, g, nabla(f), nabla(g));
  Poly fg = f * g;
  checks.expect(is_difference_derivative(dp, fg), "product rule derivative fails the telescoping identity");
  checks.expect(dp.degree() <= f.degree() + g.degree() - 1, "product rule derivative exceeds deg F + deg G - 1");
}

void case_thm1(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  const std::size_t n = draw_nvars(rng, opts, 1);
  SystemProfile f = random_system(rng, n, opts.degmax);
  Poly target = random_poly(rng, n, rng.uniform(0, opts.degmax), 4);
  const int d = target.degree().value() + rng.uniform(0, 1);
  inputs = {{"system", system_json(f)}, {"F", to_string(target)}, {"d", d}};

  BezoutForms forms = bezout_forms(f, target, {}, d);
  checks.expect(forms.x_form == forms.y_form, "determinant forms differ (canonical derivatives)");
  checks.expect(forms.x_form.degree() <= Degree(f.delta_f() + d), "deg R exceeds delta_f + d");
  BezoutForms swapped = bezout_forms(f, target, swapped_system(n), d);
  checks.expect(swapped.x_form == swapped.y_form, "determinant forms differ (swapped system derivatives)");
  checks.expect(swapped.x_form.degree() <= Degree(f.delta_f() + d), "deg R exceeds delta_f + d (swapped)");
  BezoutExpansion expansion(f, {});
  checks.expect(expansion.evaluate(target, nabla(target)) == forms.x_form,
                "last-column cofactor expansion disagrees with the determinant");
}

void case_thm1_unique(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  const std::size_t n = draw_nvars(rng, opts, 2);
  SystemProfile f = random_system(rng, n, opts.degmax);
  Poly target = random_poly(rng, n, rng.uniform(0, opts.degmax), 4);
  const int d = target.degree().value();
  inputs = {{"system", system_json(f)}, {"F", to_string(target)}, {"d", d}};

  auto by_target = target_choice_certificate(f, target, {}, swapped_target(), d, opts.exec);
  checks.expect(by_target.witness.has_value(), "no antisymmetric-pair witness for a change of the F derivative");
  if (by_target.witness) {
    checks.expect(by_target.witness->certifies(by_target.difference.joint(), by_target.generators),
                  "F-derivative witness does not reconstruct the difference");
  }
  auto by_system = system_choice_certificate(f, target, {}, swapped_system(n), d, opts.exec);
  checks.expect(by_system.witness.has_value(), "no witness for a change of the system derivatives");
  if (by_system.witness) {
    checks.expect(by_system.witness->certifies(by_system.difference.joint(), by_system.generators),
                  "system-derivative witness does not reconstruct the difference");
  }
}

void case_thm2(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  const std::size_t n = draw_nvars(rng, opts, 1);
  SystemProfile f = random_system(rng, n, opts.degmax);
  const int delta = rng.uniform(0, 1);
  const int lbound = f.delta_f() + delta;
  Functional l = random_root_functional(rng, f, lbound);
  const int d = rng.uniform(0, f.delta_f() + delta + 2);
  Functional lext = l.zero_extended(std::max(lbound, f.delta_f() + d));
  Poly target = random_poly(rng, n, rng.uniform(0, d), 4);
  Poly member = random_member(rng, f, d);
  Functional tail = random_tail(rng, n, lbound, lext.bound());
  inputs = {{"system", system_json(f)}, {"delta", delta}, {"d", d}, {"L", to_json(l)}, {"F", to_string(target)},
            {"member", to_string(member)}, {"tail", to_json(tail)}};

  const int low = d - delta - 1;
  const int high = std::max(f.delta_f(), low);
  Poly h = extend_step(lext, delta, f, target, {}, d);
  checks.expect(h.degree() <= Degree(high), "deg H exceeds max(delta_f, d - delta - 1)");

  Poly hm = extend_step(lext, delta, f, member, {}, d);
  checks.expect(in_truncated_ideal(hm, f, low, opts.exec), "H of an ideal member is not in (f)^{<= d - delta - 1}");

  Poly ht = extend_step(lext, delta, f, target, swapped_target(), d);
  checks.expect(in_truncated_ideal(h - ht, f, low, opts.exec),
                "changing the F derivative moves H outside (f)^{<= d - delta - 1}");
  Poly hs = extend_step(lext, delta, f, target, swapped_system(n), d);
  checks.expect(in_truncated_ideal(h - hs, f, high, opts.exec),
                "changing the system derivatives moves H outside (f)^{<= max(delta_f, d - delta - 1)}");

  std::pair<Rational, Functional> parts[] = {{Rational(1), lext}, {Rational(1), tail}};
  Functional lalt = functional_lincomb(parts);
  Poly hl = extend_step(lalt, delta, f, target, {}, d);
  checks.expect(in_truncated_ideal(h - hl, f, low, opts.exec),
                "changing L above delta_f + delta moves H outside (f)^{<= d - delta - 1}");
}

struct ProductInputs {
  SystemProfile f;
  int delta1;
  int delta2;
  Functional l1;
  Functional l2;
};

ProductInputs draw_product_inputs(CaseRng& rng, const VerifyOptions& opts) {
  const std::size_t n = draw_nvars(rng, opts, 1);
  SystemProfile f = random_system(rng, n, opts.degmax);
  const int delta1 = rng.uniform(0, 1);
  const int delta2 = rng.uniform(0, 1);
  Functional l1 = random_root_functional(rng, f, f.delta_f() + delta1);
  Functional l2 = random_root_functional(rng, f, f.delta_f() + delta2);
  return {std::move(f), delta1, delta2, std::move(l1), std::move(l2)};
}

nlohmann::json product_inputs_json(const ProductInputs& in) {
  return {{"system", system_json(in.f)}, {"delta1", in.delta1}, {"delta2", in.delta2}, {"L1", to_json(in.l1)},
          {"L2", to_json(in.l2)}};
}

void case_thm3(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  ProductInputs in = draw_product_inputs(rng, opts);
  const std::size_t n = in.f.nvars();
  const int df = in.f.delta_f();
  Functional tail1 = random_tail(rng, n, df + in.delta1, df + in.delta1 + 1);
  Functional tail2 = random_tail(rng, n, df + in.delta2, df + in.delta2 + 1);
  inputs = product_inputs_json(in);
  inputs["tail1"] = to_json(tail1);
  inputs["tail2"] = to_json(tail2);

  const int bound = df + in.delta1 + in.delta2 + 1;
  Functional p = product_functional(in.l1, in.delta1, in.l2, in.delta2, in.f, {}, opts.exec);
  checks.expect(p.bound() == bound, "product functional has the wrong bound");
  if (auto g = first_unannihilated(p, in.f, bound)) {
    checks.expect(false, "product functional does not annul " + to_string(Poly::monomial(g->shift)) + " * f" +
                             std::to_string(g->index + 1));
  }
  checks.expect(product_functional(in.l1, in.delta1, in.l2, in.delta2, in.f, swapped_target(), opts.exec) == p,
                "product functional depends on the derivative operator");
  checks.expect(product_functional(in.l1, in.delta1, in.l2, in.delta2, in.f, swapped_system(n), opts.exec) == p,
                "product functional depends on the system derivatives");
  std::pair<Rational, Functional> p1[] = {{Rational(1), in.l1.zero_extended(tail1.bound())}, {Rational(1), tail1}};
  std::pair<Rational, Functional> p2[] = {{Rational(1), in.l2.zero_extended(tail2.bound())}, {Rational(1), tail2}};
  checks.expect(
      product_functional(functional_lincomb(p1), in.delta1, functional_lincomb(p2), in.delta2, in.f, {}, opts.exec) == p,
      "product functional depends on L1, L2 above their determination degrees");
  const int low = df + std::min(in.delta1, in.delta2);
  checks.expect(annihilates(p.restricted(low), in.f, low), "restricted product functional fails to annul (f)^{<=low}");
}

void case_thm4(CaseRng& rng, const VerifyOptions& opts, Checks& checks, nlohmann::json& inputs) {
  ProductInputs in = draw_product_inputs(rng, opts);
  inputs = product_inputs_json(in);
  auto report = verify_commutativity(in.l1, in.delta1, in.l2, in.delta2, in.f, {}, opts.exec);
  std::string where = report.first_difference ? to_string(Poly::monomial(*report.first_difference)) : "?";
  checks.expect(report.holds, "L1.L2 and L2.L1 products differ at monomial " + where);
}

std::string replay_command(Suite suite, std::size_t index, const VerifyOptions& opts) {
  std::ostringstream os;
  os << "brf verify --suite " << suite_name(suite) << " --seed " << opts.seed << " --first-case " << index
     << " --cases 1 --nmax " << opts.nmax << " --degmax " << opts.degmax;
  if (opts.corrupt_derivative) os << " --corrupt-derivative";
  return os.str();
}

}  // namespace

std::string_view suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  return std::nullopt;
}

std::vector<Suite> expand_suites(std::string_view name) {
  if (name == "all") {
    std::vector<Suite> out;
    for (const auto& [suite, n] : kSuiteNames) out.push_back(suite);
    return out;
  }
  if (auto s = parse_suite(name)) return {*s};
  return {};
}

CaseOutcome run_case(Suite suite, std::size_t case_index, const VerifyOptions& opts) {
  CaseOutcome out;
  // Distinct streams per suite so "all" and a single suite draw the same cases.
  CaseRng rng(opts.seed, (static_cast<std::uint64_t>(suite) << 48) ^ case_index);
  Checks checks;
  try {
    switch (suite) {
      case Suite::kLemma1: case_lemma1(rng, opts, checks, out.inputs); break;
      case Suite::kLemma2: case_lemma2(rng, opts, checks, out.inputs); break;
      case Suite::kThm1: case_thm1(rng, opts, checks, out.inputs); break;
      case Suite::kThm1Unique: case_thm1_unique(rng, opts, checks, out.inputs); break;
      case Suite::kThm2: case_thm2(rng, opts, checks, out.inputs); break;
      case Suite::kThm3: case_thm3(rng, opts, checks, out.inputs); break;
      case Suite::kThm4: case_thm4(rng, opts, checks, out.inputs); break;
    }
  } catch (const std::exception& ex) {
    checks.expect(false, std::string("exception: ") + ex.what());
  }
  out.passed = checks.ok();
  out.detail = checks.failure();
  return out;
}

std::size_t RunReport::total_cases() const {
  std::size_t sum = 0;
  for (const auto& s : suites) sum += s.cases;
  return sum;
}

std::size_t RunReport::total_passed() const {
  std::size_t sum = 0;
  for (const auto& s : suites) sum += s.passed;
  return sum;
}

nlohmann::json RunReport::to_json(bool include_duration) const {
  nlohmann::json suites_json = nlohmann::json::array();
  std::optional<nlohmann::json> first;
  for (const auto& s : suites) {
    nlohmann::json entry = {{"suite", std::string(suite_name(s.suite))},
                            {"cases", s.cases},
                            {"passed", s.passed},
                            {"failed", s.cases - s.passed}};
    if (s.counterexample) {
      entry["counterexample"] = *s.counterexample;
      if (!first) first = s.counterexample;
    }
    suites_json.push_back(std::move(entry));
  }
  nlohmann::json out = {{"command", command},
                        {"seed", options.seed},
                        {"first_case", options.first_case},
                        {"nmax", options.nmax},
                        {"degmax", options.degmax},
                        {"cases", total_cases()},
                        {"passed", total_passed()},
                        {"failed", total_cases() - total_passed()},
                        {"suites", std::move(suites_json)},
                        {"counterexample", first ? *first : nlohmann::json(nullptr)}};
  if (include_duration) out["duration_seconds"] = duration_seconds;
  return out;
}

RunReport run_verification(const std::vector<Suite>& suites, const VerifyOptions& opts, std::string command) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = std::move(command);
  report.options = opts;
  for (Suite suite : suites) {
    std::vector<CaseOutcome> outcomes(opts.cases);
    const auto count = static_cast<long>(opts.cases);
    // Cases are independent; results are gathered by index.
#pragma omp parallel for schedule(dynamic) if (opts.exec == Execution::Parallel)
    for (long i = 0; i < count; ++i) {
      auto ui = static_cast<std::size_t>(i);
      outcomes[ui] = run_case(suite, opts.first_case + ui, opts);
    }
    SuiteReport sr;
    sr.suite = suite;
    sr.cases = opts.cases;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].passed) {
        ++sr.passed;
      } else if (!sr.counterexample) {
        const std::size_t index = opts.first_case + i;
        sr.counterexample = nlohmann::json{{"suite", std::string(suite_name(suite))},
                                           {"seed", opts.seed},
                                           {"case_index", index},
                                           {"detail", outcomes[i].detail},
                                           {"inputs", outcomes[i].inputs},
                                           {"replay", replay_command(suite, index, opts)}};
      }
    }
    report.suites.push_back(std::move(sr));
  }
  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace brf
