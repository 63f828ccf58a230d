#pragma once
// Reference computations that share no code paths with the library: every
// routine here works from first principles on plain vectors.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using ZMat = std::vector<std::vector<Z>>;
using QMat = std::vector<std::vector<Q>>;

// Fraction-free (Bareiss) determinant.
inline Z det(ZMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Z prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return s * a[n - 1][n - 1];
}

inline std::size_t rank(QMat a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Characteristic polynomial by Faddeev-LeVerrier; coefficients c[0..n] of
// x^n + c1 x^{n-1} + ... + cn, with c[0] = 1.
inline std::vector<Q> charpoly(const ZMat& a) {
  const std::size_t n = a.size();
  QMat A(n, std::vector<Q>(n)), M(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j];
  std::vector<Q> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, starting from M_0 = 0.
    QMat next(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q s = 0;
        for (std::size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        next[i][j] = s + (i == j ? c[k - 1] : Q(0));
      }
    M = std::move(next);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[k] = -tr / Q(static_cast<long>(k));
  }
  return c;
}

// Signature of a nondegenerate symmetric matrix: all eigenvalues are real, so
// Descartes' rule of signs is exact for the positive roots of charpoly(x) and
// of charpoly(-x).
inline std::pair<std::size_t, std::size_t> signature(const ZMat& a) {
  const auto c = charpoly(a);
  const std::size_t n = a.size();
  auto changes = [&](bool negate) {
    std::size_t count = 0;
    int last = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      // coefficient of x^{n-k}; substituting -x flips odd powers
      int s = sgn(c[k]);
      if (negate && (n - k) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return {changes(false), changes(true)};
}

// Invariant factors of an integer matrix from determinantal divisors
// d_k = gcd of k x k minors (small matrices only).
inline std::vector<Z> invariant_factors(const ZMat& a) {
  const std::size_t n = a.size();
  std::vector<Z> d{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Z g = 0;
    std::vector<bool> rsel(n), csel(n);
    std::fill(rsel.end() - k, rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - k, csel.end(), true);
      do {
        ZMat m;
        for (std::size_t i = 0; i < n; ++i) {
          if (!rsel[i]) continue;
          std::vector<Z> row;
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) row.push_back(a[i][j]);
          m.push_back(row);
        }
        const Z x = det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Z> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

// Lattice points of the dual {x : <x, v> >= -t for every vertex v} of a
// simplex around the origin, counted by box scan.
struct Census {
  std::size_t total = 0, interior = 0, facet_interior = 0, edge_interior = 0, vertices = 0;
  std::vector<std::vector<long>> boundary_low_dim;  // face dimension <= 1
};

inline Census dual_census(const std::vector<std::vector<long>>& delta, long t = 1) {
  Census out;
  const long box = 8 * t;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long z = -box; z <= box; ++z) {
        QMat tight;
        bool inside = true;
        for (const auto& v : delta) {
          const long p = x * v[0] + y * v[1] + z * v[2];
          if (p < -t) inside = false;
          if (p == -t) tight.push_back({Q(v[0]), Q(v[1]), Q(v[2])});
        }
        if (!inside) continue;
        ++out.total;
        const std::size_t r = rank(tight);
        if (r == 0) ++out.interior;
        if (r == 1) ++out.facet_interior;
        if (r == 2) ++out.edge_interior;
        if (r == 3) ++out.vertices;
        if (r >= 2) out.boundary_low_dim.push_back({x, y, z});
      }
  return out;
}

// Volume of a 3-dimensional lattice polytope from its Ehrhart polynomial
// L(t) = a t^3 + b t^2 + c t + 1, using L(1), L(2) and L(-1) = -#interior.
inline Q ehrhart_volume(long l1, long l2, long interior) {
  const Q lm1 = -interior;
  const Q b = (Q(l1) + lm1) / 2 - 1;
  const Q a_plus_c = Q(l1) - 1 - b;
  return (Q(l2) - 1 - 4 * b - 2 * a_plus_c) / 6;
}

// Exhaustive search for x with 3x = (first, second) in Z x Z/p.
inline bool has_cube_root(long first, long second, long p, long range = 50) {
  for (long a = -range; a <= range; ++a)
    for (long b = 0; b < p; ++b)
      if (3 * a == first && (3 * b - second) % p == 0) return true;
  return false;
}

}  // namespace oracle
