#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "brf/diff_deriv.hpp"
#include "brf/execution.hpp"
#include "brf/functional.hpp"
#include "brf/ideal.hpp"
#include "brf/poly.hpp"
#include "brf/poly_xy.hpp"

namespace brf {

/// Which difference derivative to use for one polynomial.
struct DerivativeChoice {
  enum class Kind { Canonical, Swapped, Supplied };

  Kind kind = Kind::Canonical;
  CovectorXY supplied;

  static DerivativeChoice canonical() { return {}; }
  static DerivativeChoice swapped() { return {Kind::Swapped, {}}; }
  static DerivativeChoice supply(CovectorXY d) { return {Kind::Supplied, std::move(d)}; }
};

struct BezoutConfig {
  /// One choice per f_i; empty means canonical for all.
  std::vector<DerivativeChoice> system;
  DerivativeChoice target;

  const DerivativeChoice& for_system(std::size_t i) const;
};

/// The derivative selected by `choice`. A supplied covector must be a
/// difference derivative of `p` of degree <= degree_cap; otherwise
/// PreconditionViolation.
CovectorXY resolve_derivative(const Poly& p, const DerivativeChoice& choice, int degree_cap);

using PolyXYMatrix = std::vector<std::vector<PolyXY>>;

/// Determinant over the polynomial ring by cofactor expansion along the last
/// row, memoizing minors by their column set. Square input of size <= 16.
PolyXY determinant(const PolyXYMatrix& m);

/// The bordered matrix with column i = (grad f_i ; f_i(.)), last column
/// (grad F ; F(.)), bottom row evaluated at x (`bottom_in_y` false) or y.
PolyXYMatrix bordered_matrix(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg, int budget,
                             bool bottom_in_y);

struct BezoutForms {
  PolyXY x_form;
  PolyXY y_form;
};

/// Both determinant forms. `budget` is the degree budget d >= deg F; the target
/// derivative may have degree up to d - 1.
BezoutForms bezout_forms(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg, int budget);

/// Bezoutian determinant R(x, y). Checks that both forms agree and that
/// deg R <= delta_f + budget; a failure there is a std::logic_error.
/// `budget` defaults to max(deg F, 0).
PolyXY bezout_poly(const SystemProfile& f, const Poly& target, const BezoutConfig& cfg = {},
                   std::optional<int> budget = std::nullopt);

/// f_i(x) f_j(y) - f_i(y) f_j(x), i < j, with multiplier cap
/// total_cap - deg f_i - deg f_j, over the doubled variables. Pairs whose cap
/// is negative are kept with an empty multiplier range.
std::vector<SpanGenerator> antisymmetric_pair_generators(const SystemProfile& f, int total_cap);

/// Membership certificate for the difference of two Bezoutians.
struct UniquenessCertificate {
  std::vector<SpanGenerator> generators;
  PolyXY difference;
  std::optional<MembershipWitness> witness;
};

/// R(cfg_a) - R(cfg_b) for configurations differing only in the target
/// derivative, tested against the pair generators with cap delta_f + budget.
UniquenessCertificate target_choice_certificate(const SystemProfile& f, const Poly& target,
                                                const BezoutConfig& cfg_a, const BezoutConfig& cfg_b,
                                                std::optional<int> budget = std::nullopt,
                                                Execution exec = Execution::Parallel);

/// R(cfg_a) - R(cfg_b) for configurations differing in the system derivatives,
/// tested against the pair generators (cap delta_f + budget) and
/// f_i(x) F(y) - f_i(y) F(x) (multiplier cap delta_f - deg f_i).
UniquenessCertificate system_choice_certificate(const SystemProfile& f, const Poly& target,
                                                const BezoutConfig& cfg_a, const BezoutConfig& cfg_b,
                                                std::optional<int> budget = std::nullopt,
                                                Execution exec = Execution::Parallel);

/// H(x) = L(y).R(x, y). Requires delta >= 0, L.bound >= delta_f + delta, L
/// annulling (f)^{<= delta_f + delta} (NotAnnihilating otherwise) and
/// y-degree of R <= L.bound (DegreeOverflow otherwise).
Poly extend_step(const Functional& l, int delta, const SystemProfile& f, const Poly& target,
                 const BezoutConfig& cfg = {}, std::optional<int> budget = std::nullopt);

/// Cofactors of the last column of the bordered matrix, so that for any F and
/// difference derivative DF:  R = sum_k DF_k · C_k + F(x) · C_n.
class BezoutExpansion {
 public:
  BezoutExpansion(const SystemProfile& f, const BezoutConfig& cfg);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<PolyXY>& cofactors() const noexcept { return cofactors_; }

  PolyXY evaluate(const Poly& target, const CovectorXY& target_derivative) const;

 private:
  std::size_t nvars_;
  std::vector<PolyXY> cofactors_;
};

/// L(x) = L1(x).L2(y).R for F = x^g, tabulated on every monomial of degree
/// <= delta_f + delta1 + delta2 + 1. The target derivative follows
/// cfg.target (Canonical or Swapped; Supplied is rejected).
/// L2 is extended by zero above its bound where R needs it.
Functional product_functional(const Functional& l1, int delta1, const Functional& l2, int delta2,
                              const SystemProfile& f, const BezoutConfig& cfg = {},
                              Execution exec = Execution::Parallel);

struct CommutativityReport {
  bool holds = false;
  std::optional<Exponent> first_difference;
  Functional forward;
  Functional backward;
};

CommutativityReport verify_commutativity(const Functional& l1, int delta1, const Functional& l2, int delta2,
                                         const SystemProfile& f, const BezoutConfig& cfg = {},
                                         Execution exec = Execution::Parallel);

}  // namespace brf
