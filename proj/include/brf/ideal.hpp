#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "brf/execution.hpp"
#include "brf/exponent.hpp"
#include "brf/functional.hpp"
#include "brf/linalg.hpp"
#include "brf/poly.hpp"

namespace brf {

/// Square system f_1..f_n in n variables, every f_i of degree >= 1.
class SystemProfile {
 public:
  /// Throws PreconditionViolation for a non-square system or a constant entry,
  /// DimensionMismatch for inconsistent nvars.
  explicit SystemProfile(std::vector<Poly> polys);

  std::size_t nvars() const noexcept { return polys_.size(); }
  const std::vector<Poly>& polys() const noexcept { return polys_; }
  const Poly& operator[](std::size_t i) const { return polys_[i]; }
  /// sum_i (deg f_i - 1).
  int delta_f() const noexcept { return delta_f_; }
  int min_degree() const noexcept;

 private:
  std::vector<Poly> polys_;
  int delta_f_ = 0;
};

/// Default refusal threshold for the size of a truncated monomial basis.
inline constexpr std::uint64_t kDefaultColumnCap = 10'000;

/// A generator product x^shift · f_index of a truncated ideal piece.
struct TruncatedGenerator {
  std::size_t index = 0;
  Exponent shift;
  Poly product;
};

/// {x^a f_i : |a| + deg f_i <= d}, ordered by i then ascending graded-lex shift.
/// Empty when d < min deg f_i.
std::vector<TruncatedGenerator> truncated_generators(const SystemProfile& f, int d);

/// Coefficient matrix of the truncated generators over the ascending graded-lex
/// monomial basis of degree <= d.
struct MacaulayMatrix {
  int degree = 0;
  std::vector<TruncatedGenerator> generators;
  std::vector<Exponent> columns;
  RationalMatrix entries;
};

/// Throws CapExceeded when C(n + d, n) exceeds `column_cap`.
MacaulayMatrix macaulay_matrix(const SystemProfile& f, int d, std::uint64_t column_cap = kDefaultColumnCap);

/// A polynomial together with the largest total degree its multiplier may take.
struct SpanGenerator {
  Poly poly;
  int shift_cap = 0;
};

/// Multipliers g^i with F = sum_i generator_i · g^i.
struct MembershipWitness {
  std::vector<Poly> multipliers;

  Poly reconstruct(std::span<const SpanGenerator> generators) const;
  /// Exact reconstruction and deg g^i <= shift_cap_i for every i.
  bool certifies(const Poly& target, std::span<const SpanGenerator> generators) const;
};

/// Membership of `target` in the span of {x^a · g : |a| <= g.shift_cap}. The
/// witness is the solution with every free unknown set to zero, unknowns ordered
/// by generator then ascending graded-lex shift.
std::optional<MembershipWitness> span_membership(const Poly& target, std::span<const SpanGenerator> generators,
                                                 Execution exec = Execution::Parallel);

/// The generators f_i with shift caps d - deg f_i.
std::vector<SpanGenerator> system_span_generators(const SystemProfile& f, int d);

/// Membership of F in the truncated ideal piece (f)^{<=d}. Throws
/// PreconditionViolation when deg F > d.
std::optional<MembershipWitness> membership(const Poly& target, const SystemProfile& f, int d,
                                            Execution exec = Execution::Parallel);

/// Basis of the functionals on degree <= D that annul (f)^{<=D}.
struct BoundedRootBasis {
  int degree = 0;
  std::size_t macaulay_rank = 0;
  std::vector<Functional> basis;
};

BoundedRootBasis root_functional_basis(const SystemProfile& f, int D,
                                       std::uint64_t column_cap = kDefaultColumnCap,
                                       Execution exec = Execution::Parallel);

/// First truncated generator at degree d on which L is nonzero.
std::optional<TruncatedGenerator> first_unannihilated(const Functional& l, const SystemProfile& f, int d);

/// True iff L vanishes on every truncated generator at degree d. Throws
/// DegreeOverflow when d exceeds L's bound.
bool annihilates(const Functional& l, const SystemProfile& f, int d);

}  // namespace brf
