#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "brf/poly.hpp"
#include "brf/poly_xy.hpp"

namespace brf {

/// A covector (c_1, ..., c_n) of polynomials in (x, y). A difference derivative
/// of F is one with sum_k (x_k - y_k) c_k = F(x) - F(y).
struct CovectorXY {
  std::size_t nvars = 0;
  std::vector<PolyXY> comps;

  static CovectorXY zero(std::size_t nvars);

  /// Maximum total degree over the components.
  Degree degree() const;

  /// sum_k (x_k - y_k) comps_k.
  PolyXY contract_with_difference() const;

  bool operator==(const CovectorXY&) const = default;
};

/// True iff `d` is a difference derivative of `f`.
bool is_difference_derivative(const CovectorXY& d, const Poly& f);

/// Divided difference of `p` in its x-block variable k (0-based):
/// [p(y_<k, x_k, x_>k, y) - p(y_<k, y_k, x_>k, y)] / (x_k - y_k).
/// Applied to an x-only polynomial this is the k-th telescoping derivative
/// component; applied to a mixed polynomial the y-block is a parameter.
PolyXY divided_difference(const PolyXY& p, std::size_t k);

/// Telescoping difference derivative of F. Every component has degree at most
/// deg F - 1.
CovectorXY nabla(const Poly& f);

/// D(x, y) -> D(y, x), componentwise. Maps a difference derivative of F to
/// another difference derivative of F.
CovectorXY nabla_swapped(const CovectorXY& d);

/// Product rule: DF(x,y)·G(y) + F(x)·DG(x,y) is a difference derivative of F·G.
/// The result may exceed deg(F·G) - 1 when the product degree drops.
CovectorXY nabla_product(const Poly& f, const Poly& g, const CovectorXY& df, const CovectorXY& dg);

/// Antisymmetric decomposition of the discrepancy between two difference
/// derivatives of the same polynomial:
///   d1_m - d2_m = sum_{k<m} (x_k - y_k) T^{km} - sum_{l>m} (x_l - y_l) T^{ml}.
struct DiscrepancyDecomposition {
  std::size_t nvars = 0;
  int degree_bound = 0;
  std::map<std::pair<std::size_t, std::size_t>, PolyXY> t_table;

  /// Right-hand side of the identity for component m.
  PolyXY reconstruct(std::size_t m) const;
};

/// Throws PreconditionViolation if d1 and d2 are not derivatives of a common
/// polynomial or exceed degree d - 1.
DiscrepancyDecomposition decompose_difference(const CovectorXY& d1, const CovectorXY& d2, int d);

}  // namespace brf
