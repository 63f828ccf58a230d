#include "k3mcg/polytope.hpp"

#include <algorithm>
#include <set>

namespace k3mcg {

namespace {

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// A primitive vector orthogonal to the d - 1 given difference vectors, or zero.
IntVector normal_of(const std::vector<IntVector>& diffs, std::size_t d) {
  IntVector n(d);
  if (d == 2) {
    n = {-diffs[0][1], diffs[0][0]};
  } else {
    const IntVector& u = diffs[0];
    const IntVector& v = diffs[1];
    n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  }
  Integer g = 0;
  for (const auto& x : n) g = gcd(g, x);
  if (g == 0) return n;
  for (auto& x : n) x /= g;
  return n;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

LatticePolytope::LatticePolytope(const std::vector<IntVector>& points) {
  if (points.empty()) throw DomainError("polytope needs at least one point");
  dim_ = points.front().size();
  if (dim_ != 2 && dim_ != 3) throw DomainError("polytopes must have dimension 2 or 3");
  for (const auto& p : points)
    if (p.size() != dim_) throw DomainError("polytope points have inconsistent dimensions");

  std::vector<IntVector> pts(points);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::set<Facet> found;
  for_each_subset(pts.size(), dim_, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    IntVector n = normal_of(diffs, dim_);
    if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) return;
    const Integer base = dot(n, pts[idx[0]]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      const Integer v = dot(n, p) - base;
      above = above || v > 0;
      below = below || v < 0;
      if (above && below) return;
    }
    if (!above && !below) return;  // all points on one hyperplane
    if (below) {
      for (auto& x : n) x = -x;
      found.insert({n, base});
    } else {
      found.insert({n, -base});
    }
  });
  if (found.empty()) throw DomainError("polytope is not full-dimensional");
  facets_.assign(found.begin(), found.end());

  for (const auto& p : pts) {
    std::vector<IntVector> normals;
    for (std::size_t f : tight_facets(p)) normals.push_back(facets_[f].normal);
    if (normals.size() >= dim_ && rank(to_rational(IntMatrix::from_rows(normals))) == dim_) vertices_.push_back(p);
  }
}

bool LatticePolytope::is_reflexive() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset == 1; });
}

bool LatticePolytope::contains(const IntVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&x](const Facet& f) { return dot(f.normal, x) + f.offset >= 0; });
}

std::vector<std::size_t> LatticePolytope::tight_facets(const IntVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (dot(facets_[i].normal, x) + facets_[i].offset == 0) out.push_back(i);
  return out;
}

std::vector<IntVector> LatticePolytope::lattice_points() const {
  IntVector lo = vertices_.front(), hi = vertices_.front();
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (contains(x)) out.push_back(x);
    std::size_t i = dim_;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < dim_; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

std::size_t smallest_face_dim(const LatticePolytope& p, const IntVector& x) {
  std::vector<IntVector> normals;
  for (std::size_t f : p.tight_facets(x)) normals.push_back(p.facets()[f].normal);
  if (normals.empty()) return p.dim();
  return p.dim() - rank(to_rational(IntMatrix::from_rows(normals)));
}

PointClassification lattice_points_by_face(const LatticePolytope& p) {
  PointClassification out;
  for (const auto& x : p.lattice_points()) {
    const std::size_t d = smallest_face_dim(p, x);
    if (d == p.dim())
      out.interior.push_back(x);
    else if (d == 2)
      out.facet_interior.push_back(x);
    else if (d == 1)
      out.edge_interior.push_back(x);
    else
      out.vertices.push_back(x);
  }
  return out;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
  if (!p.is_reflexive()) throw DomainError("polar dual requires a reflexive polytope");
  std::vector<IntVector> normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  LatticePolytope out(normals);
  if (!out.is_reflexive()) throw DomainError("polar dual is not reflexive");
  return out;
}

std::vector<IntVector> xi0(const LatticePolytope& pdual) {
  if (!pdual.is_reflexive()) throw DomainError("xi0 requires a reflexive polytope");
  std::vector<IntVector> out;
  for (const auto& x : pdual.lattice_points())
    if (smallest_face_dim(pdual, x) <= 1) out.push_back(x);
  return out;
}

long batyrev_picard_rank(const LatticePolytope& delta) {
  if (delta.dim() != 3) throw DomainError("Picard rank formula needs a 3-polytope");
  const LatticePolytope dual = polar_dual(delta);
  const auto points = dual.lattice_points();
  long total = static_cast<long>(points.size()) - 4;

  // Points of the dual grouped by their tight facet set.
  std::map<std::vector<std::size_t>, long> by_tight;
  for (const auto& x : points) ++by_tight[dual.tight_facets(x)];
  for (const auto& [tight, count] : by_tight)
    if (tight.size() == 1) total -= count;

  const auto& facets = dual.facets();
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      long common = 0;
      for (const auto& v : dual.vertices()) {
        const auto t = dual.tight_facets(v);
        if (std::binary_search(t.begin(), t.end(), a) && std::binary_search(t.begin(), t.end(), b)) ++common;
      }
      if (common < 2) continue;  // not an edge
      const auto it = by_tight.find({a, b});
      const long interior_dual_edge = it == by_tight.end() ? 0 : it->second;
      // Facet normals of the dual are the vertices of delta; the dual edge joins them.
      Integer g = 0;
      for (std::size_t i = 0; i < 3; ++i) g = gcd(g, facets[a].normal[i] - facets[b].normal[i]);
      total += interior_dual_edge * (to_int64(g) - 1);
    }
  return total;
}

Rational simplex_volume(const std::vector<IntVector>& simplex) {
  const std::size_t d = simplex.size() - 1;
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = simplex[i + 1][j] - simplex[0][j];
  Integer fact = 1;
  for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<long>(k);
  return make_rational(abs(determinant(m)), fact);
}

}  // namespace k3mcg
