#include "k3mcg/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace k3mcg {

namespace {

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

bool subset_of(const std::vector<std::size_t>& small, const Cell& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Rational triangulated_volume(const std::vector<IntVector>& pts) {
  const std::size_t d = pts.front().size();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(0, 1 << 20);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<QN> heights;
    for (std::size_t i = 0; i < pts.size(); ++i) heights.emplace_back(dist(rng));
    const auto cells = lower_hull_cells(pts, heights);
    if (!std::all_of(cells.begin(), cells.end(), [d](const Cell& c) { return c.size() == d + 1; })) continue;
    Rational vol = 0;
    for (const Cell& c : cells) {
      std::vector<IntVector> simplex;
      for (std::size_t i : c) simplex.push_back(pts[i]);
      vol += simplex_volume(simplex);
    }
    return vol;
  }
  throw DomainError("could not find a generic triangulation");
}

}  // namespace

namespace {

// Heights a_i + b_i sqrt(s) scaled to a common integer denominator.
struct ScaledHeights {
  std::vector<Integer> a;
  std::vector<Integer> b;
  Integer field = 1;
  std::vector<double> approx;
};

ScaledHeights scale_heights(const std::vector<QN>& heights) {
  ScaledHeights out;
  Integer lcm = 1;
  for (const QN& h : heights) {
    if (!h.is_rational()) {
      if (out.field != 1 && out.field != h.field()) throw DomainError("heights must share one quadratic field");
      out.field = h.field();
    }
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), h.rational_part().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), h.irrational_part().get_den_mpz_t());
  }
  for (const QN& h : heights) {
    out.a.push_back(Rational(h.rational_part() * lcm).get_num());
    out.b.push_back(Rational(h.irrational_part() * lcm).get_num());
    out.approx.push_back(h.approx());
  }
  return out;
}

// sign(a + b sqrt(s)), s > 1 square-free or b == 0.
int sign_quadratic(const Integer& a, const Integer& b, const Integer& s) {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = a * a, rhs = b * b * s;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

template <class Z>
Z det3(const Z m[3][3]) {
  Z out = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  out -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  out += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return out;
}

template <class Z>
Z det_small(const std::vector<std::vector<Z>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return Z(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  if (n == 3) {
    const Z a[3][3] = {{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]}};
    return det3(a);
  }
  Z out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Z>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Z> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const Z t = m[0][c] * det_small(minor);
    if (c % 2)
      out -= t;
    else
      out += t;
  }
  return out;
}

Integer to_integer(const Integer& x) { return x; }
Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
double to_double(const Integer& x) { return x.get_d(); }
double to_double(std::int64_t x) { return static_cast<double>(x); }

template <class Z>
std::vector<Cell> lower_hull_impl(const std::vector<std::vector<Z>>& points, const ScaledHeights& h) {
  const std::size_t d = points.front().size();
  const std::size_t k = d + 1;
  std::vector<Cell> cells;

  std::vector<std::vector<Z>> m(k, std::vector<Z>(k));
  std::vector<std::vector<Z>> adj(k, std::vector<Z>(k));
  std::vector<std::vector<Z>> minor(d, std::vector<Z>(d));
  std::vector<Z> w(k);
  std::vector<Integer> wz(k);
  for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& idx) {
    for (const Cell& c : cells)
      if (subset_of(idx, c)) return;
    // Columns (p_c; 1).
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t r = 0; r < d; ++r) m[r][c] = points[idx[c]][r];
      m[d][c] = 1;
    }
    const Z det = det_small(m);
    if (det == 0) return;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0, mi = 0; i < k; ++i) {
          if (i == c) continue;
          for (std::size_t j = 0, mj = 0; j < k; ++j)
            if (j != r) minor[mi][mj++] = m[i][j];
          ++mi;
        }
        const Z cof = det_small(minor);
        adj[r][c] = cof;
        if ((r + c) % 2) adj[r][c] = -adj[r][c];
      }
    const int det_sign = det > 0 ? 1 : -1;
    const double dd = to_double(det);
    const Integer detz = to_integer(det);

    Cell cell;
    for (std::size_t q = 0; q < points.size(); ++q) {
      // det * (barycentric coordinates of q); the residual is det * (h_q - h(q)).
      double residual = dd * h.approx[q];
      double scale = std::abs(residual);
      for (std::size_t r = 0; r < k; ++r) {
        w[r] = adj[r][d];
        for (std::size_t c = 0; c < d; ++c) w[r] += adj[r][c] * points[q][c];
        const double t = to_double(w[r]) * h.approx[idx[r]];
        residual -= t;
        scale += std::abs(t);
      }
      int s;
      if (std::abs(residual) > 1e-9 * scale) {
        s = residual > 0 ? 1 : -1;
      } else {
        Integer ra = detz * h.a[q], rb = detz * h.b[q];
        for (std::size_t r = 0; r < k; ++r) {
          wz[r] = to_integer(w[r]);
          ra -= wz[r] * h.a[idx[r]];
          rb -= wz[r] * h.b[idx[r]];
        }
        s = sign_quadratic(ra, rb, h.field);
      }
      s *= det_sign;
      if (s < 0) return;
      if (s == 0) cell.push_back(q);
    }
    cells.push_back(std::move(cell));
  });
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

std::vector<Cell> lower_hull_cells(const std::vector<IntVector>& points, const std::vector<QN>& heights) {
  if (points.size() != heights.size()) throw DomainError("one height per point is required");
  if (points.empty()) return {};
  const ScaledHeights h = scale_heights(heights);
  // Cofactors of a 4x4 matrix with entries below 2^10 stay far inside 64 bits.
  const bool small = std::all_of(points.begin(), points.end(), [](const IntVector& p) {
    return std::all_of(p.begin(), p.end(), [](const Integer& x) { return abs(x) < 1024; });
  });
  if (small) {
    std::vector<std::vector<std::int64_t>> pts;
    for (const auto& p : points) {
      std::vector<std::int64_t> row;
      for (const auto& x : p) row.push_back(to_int64(x));
      pts.push_back(std::move(row));
    }
    return lower_hull_impl(pts, h);
  }
  return lower_hull_impl(points, h);
}

std::vector<std::size_t> RegularSubdivision::used_points() const {
  std::set<std::size_t> used;
  for (const Cell& c : cells) {
    std::vector<IntVector> pts;
    for (std::size_t i : c) pts.push_back(points[i]);
    const LatticePolytope hull(pts);
    for (std::size_t i : c)
      if (std::binary_search(hull.vertices().begin(), hull.vertices().end(), points[i])) used.insert(i);
  }
  return {used.begin(), used.end()};
}

RegularSubdivision support_subdivision(const LatticePolytope& pdual, const std::vector<QN>& lambda) {
  RegularSubdivision s;
  s.points = xi0(pdual);
  if (lambda.size() != s.points.size())
    throw DomainError("weight vector has " + std::to_string(lambda.size()) + " entries, Xi_0 has " +
                      std::to_string(s.points.size()));
  for (const QN& l : lambda)
    if (l.sign() < 0) throw DomainError("weights must be non-negative");
  s.heights = lambda;
  s.points.push_back(IntVector(pdual.dim(), 0));
  s.heights.emplace_back(0);
  s.cells = lower_hull_cells(s.points, s.heights);
  return s;
}

Rational subdivision_volume(const RegularSubdivision& s) {
  Rational vol = 0;
  for (const Cell& c : s.cells) {
    std::vector<IntVector> pts;
    for (std::size_t i : c) pts.push_back(s.points[i]);
    vol += pts.size() == s.points.front().size() + 1 ? simplex_volume(pts) : triangulated_volume(pts);
  }
  return vol;
}

Rational polytope_volume(const LatticePolytope& p) { return triangulated_volume(p.vertices()); }

StarVerdict check_condition_star(const RegularSubdivision& s, const LatticePolytope& pdual) {
  for (std::size_t i = 0; i < s.origin(); ++i)
    if (s.heights[i].sign() <= 0) throw DomainError("Kahler weights must be strictly positive");
  StarVerdict v;
  v.cells = s.cells.size();
  const std::size_t d = pdual.dim();
  for (const Cell& c : s.cells) {
    if (!std::binary_search(c.begin(), c.end(), s.origin())) {
      v.reason = "cell without the origin: domains of linearity are not cones";
      return v;
    }
    if (c.size() != d + 1) {
      v.reason = "non-simplicial cell with " + std::to_string(c.size()) + " points";
      return v;
    }
  }
  const auto used = s.used_points();
  for (std::size_t i = 0; i < s.origin(); ++i)
    if (!std::binary_search(used.begin(), used.end(), i)) {
      v.reason = "ray " + to_string(s.points[i]) + " missing";
      return v;
    }
  for (const Cell& c : s.cells) {
    std::vector<std::size_t> common;
    bool first = true;
    for (std::size_t i : c) {
      if (i == s.origin()) continue;
      const auto t = pdual.tight_facets(s.points[i]);
      if (first) {
        common = t;
        first = false;
      } else {
        std::vector<std::size_t> both;
        std::set_intersection(common.begin(), common.end(), t.begin(), t.end(), std::back_inserter(both));
        common = std::move(both);
      }
    }
    if (common.empty()) {
      v.reason = "cone does not lie in a cone of the normal fan";
      return v;
    }
  }
  v.pass = true;
  return v;
}

StarVerdict check_condition_star(const LatticePolytope& delta, const std::vector<QN>& lambda) {
  const LatticePolytope pdual = polar_dual(delta);
  return check_condition_star(support_subdivision(pdual, lambda), pdual);
}

bool same_secondary_cone(const LatticePolytope& delta, const std::vector<QN>& lambda1, const std::vector<QN>& lambda2) {
  const LatticePolytope pdual = polar_dual(delta);
  return support_subdivision(pdual, lambda1).cells == support_subdivision(pdual, lambda2).cells;
}

MonomialPolynomial<NovikovSeries> mirror_equation(const LatticePolytope& pdual, const std::vector<NovikovSeries>& d) {
  const auto points = xi0(pdual);
  if (d.size() != points.size())
    throw DomainError("coefficient list has " + std::to_string(d.size()) + " entries, Xi_0 has " +
                      std::to_string(points.size()));
  MonomialPolynomial<NovikovSeries> f(pdual.dim());
  f.add_term(Exponent(pdual.dim(), 0), NovikovSeries::constant(-1));
  for (std::size_t i = 0; i < points.size(); ++i) {
    Exponent e;
    for (const auto& x : points[i]) e.push_back(to_int64(x));
    f.add_term(e, d[i]);
  }
  return f;
}

}  // namespace k3mcg
