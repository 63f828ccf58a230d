#pragma once

#include <string>
#include <vector>

#include "k3mcg/novikov.hpp"
#include "k3mcg/polynomial.hpp"
#include "k3mcg/polytope.hpp"
#include "k3mcg/quadratic.hpp"

namespace k3mcg {

using Cell = std::vector<std::size_t>;  // sorted point indices

/// Cells of the lower convex hull of {(p_i, h_i)}, each a sorted index list,
/// the list sorted. Heights must share one quadratic field.
std::vector<Cell> lower_hull_cells(const std::vector<IntVector>& points, const std::vector<QN>& heights);

/// Regular subdivision of pdual induced by lambda on Xi_0.
///
/// points = Xi_0 followed by the origin (index points.size() - 1). The cells
/// are the domains of linearity of psi_lambda, the concave support function
/// with psi(0) = 0 and psi(kappa) = -lambda_kappa at every vertex it uses;
/// equivalently the lower hull of (kappa, lambda_kappa) together with (0, 0).
struct RegularSubdivision {
  std::vector<IntVector> points;
  std::vector<QN> heights;
  std::vector<Cell> cells;
  std::size_t origin() const { return points.size() - 1; }
  /// Indices that are vertices of some cell.
  std::vector<std::size_t> used_points() const;
};

RegularSubdivision support_subdivision(const LatticePolytope& pdual, const std::vector<QN>& lambda);

/// Sum of cell volumes via random-height triangulation of each cell.
Rational subdivision_volume(const RegularSubdivision& s);
/// Volume of a polytope via a triangulation of its vertices.
Rational polytope_volume(const LatticePolytope& p);

struct StarVerdict {
  bool pass = false;
  std::string reason;  // empty on pass
  std::size_t cells = 0;
};

/// Condition (*) for delta and lambda on Xi_0(polar_dual(delta)). Throws
/// DomainError unless every weight is strictly positive.
StarVerdict check_condition_star(const LatticePolytope& delta, const std::vector<QN>& lambda);
StarVerdict check_condition_star(const RegularSubdivision& s, const LatticePolytope& pdual);

bool same_secondary_cone(const LatticePolytope& delta, const std::vector<QN>& lambda1, const std::vector<QN>& lambda2);

/// -x^0 + sum d_kappa x^kappa over Xi_0(pdual).
MonomialPolynomial<NovikovSeries> mirror_equation(const LatticePolytope& pdual, const std::vector<NovikovSeries>& d);

}  // namespace k3mcg
