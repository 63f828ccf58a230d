#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3mcg/matrix.hpp"

namespace k3mcg {

/// <normal, x> >= -offset, normal primitive.
struct Facet {
  IntVector normal;
  Integer offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  }
};

/// Full-dimensional lattice polytope in dimension 2 or 3, given as the convex
/// hull of a point list. Non-extreme input points are dropped.
class LatticePolytope {
 public:
  explicit LatticePolytope(const std::vector<IntVector>& points);

  std::size_t dim() const { return dim_; }
  /// Extreme points, sorted lexicographically.
  const std::vector<IntVector>& vertices() const { return vertices_; }
  /// Sorted by normal.
  const std::vector<Facet>& facets() const { return facets_; }
  bool is_reflexive() const;
  bool contains(const IntVector& x) const;
  /// Indices of facets with <normal, x> == -offset.
  std::vector<std::size_t> tight_facets(const IntVector& x) const;
  /// All lattice points, sorted lexicographically.
  std::vector<IntVector> lattice_points() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

/// Dimension of the smallest face containing x (dim() for interior points).
std::size_t smallest_face_dim(const LatticePolytope& p, const IntVector& x);

struct PointClassification {
  std::vector<IntVector> interior;
  std::vector<IntVector> facet_interior;  // relative interior of 2-faces (dimension 3 only)
  std::vector<IntVector> edge_interior;
  std::vector<IntVector> vertices;
  std::size_t total() const { return interior.size() + facet_interior.size() + edge_interior.size() + vertices.size(); }
};

PointClassification lattice_points_by_face(const LatticePolytope& p);

/// {y : <y, x> >= -1 for all x in P}; throws DomainError unless P is reflexive.
LatticePolytope polar_dual(const LatticePolytope& p);

/// Boundary lattice points off the relative interiors of 2-faces: vertices
/// and edge points, sorted lexicographically.
std::vector<IntVector> xi0(const LatticePolytope& pdual);

/// Combinatorial h^{1,1} of the K3 hypersurface family attached to the
/// reflexive 3-polytope delta.
long batyrev_picard_rank(const LatticePolytope& delta);

/// |det(p1 - p0, ..., pd - p0)| / d!.
Rational simplex_volume(const std::vector<IntVector>& simplex);

std::string to_string(const IntVector& v);

}  // namespace k3mcg
