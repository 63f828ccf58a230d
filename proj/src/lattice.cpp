#include "k3mcg/lattice.hpp"

#include <algorithm>

#include "k3mcg/smith.hpp"

namespace k3mcg {

namespace {

void require_same(const Lattice& a, const Lattice& b) {
  if (!(a == b)) throw DomainError("vectors belong to different lattices");
}

IntMatrix rows_of(std::span<const LatticeVector> vectors, const Lattice& lattice) {
  IntMatrix m(vectors.size(), lattice.rank());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_same(vectors[i].lattice(), lattice);
    for (std::size_t j = 0; j < lattice.rank(); ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

}  // namespace

Lattice::Lattice(IntMatrix gram) {
  if (gram.rows() == 0 || !gram.square()) throw DomainError("Gram matrix must be square and nonempty");
  if (!(gram == gram.transpose())) throw DomainError("Gram matrix must be symmetric");
  Integer d = determinant(gram);
  if (d == 0) throw DomainError("Gram matrix is degenerate");
  data_ = std::make_shared<const Data>(Data{std::move(gram), std::move(d)});
}

Integer Lattice::pair(std::span<const Integer> v, std::span<const Integer> w) const {
  const std::size_t n = rank();
  if (v.size() != n || w.size() != n) throw DomainError("coordinate length does not match lattice rank");
  const IntMatrix& g = gram();
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0 && g(i, j) != 0) row += g(i, j) * w[j];
    total += v[i] * row;
  }
  return total;
}

LatticeVector::LatticeVector(Lattice lattice, IntVector coords) : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_.rank()) throw DomainError("coordinate length does not match lattice rank");
}

LatticeVector LatticeVector::operator-() const {
  IntVector c = coords_;
  for (auto& x : c) x = -x;
  return {lattice_, std::move(c)};
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same(a.lattice_, b.lattice_);
  IntVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return {a.lattice_, std::move(c)};
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  IntVector c = v.coords_;
  for (auto& x : c) x *= k;
  return {v.lattice_, std::move(c)};
}

Lattice make_standard(StandardKind kind, long n) {
  switch (kind) {
    case StandardKind::U:
      return Lattice(IntMatrix{{0, 1}, {1, 0}});
    case StandardKind::E8neg: {
      // Negative of the E8 Cartan matrix: chain 0-1-2-3-4-5-6 with node 7 on node 2.
      IntMatrix g(8, 8);
      for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
      auto link = [&g](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = 1; };
      for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
      link(2, 7);
      return Lattice(std::move(g));
    }
    case StandardKind::TwoN:
      if (n < 1) throw DomainError("<2n> requires n >= 1");
      return Lattice(IntMatrix{{Integer(2 * n)}});
    case StandardKind::K3: {
      const Lattice u = make_standard(StandardKind::U);
      const Lattice e8 = make_standard(StandardKind::E8neg);
      return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8)), e8);
    }
  }
  throw DomainError("unknown standard lattice");
}

Integer pair(const LatticeVector& v, const LatticeVector& w) {
  require_same(v.lattice(), w.lattice());
  return v.lattice().pair(v.coords(), w.coords());
}

Lattice negate(const Lattice& lattice) { return Lattice(-lattice.gram()); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

Signature signature(const Lattice& lattice) {
  // Congruence diagonalization over Q. A zero pivot is repaired either by a
  // symmetric swap with a nonzero diagonal entry or by adding a row/column with
  // a nonzero off-diagonal entry (which makes the pivot 2*a_ij).
  RatMatrix a = to_rational(lattice.gram());
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.swap_rows(k, j);
        a.swap_cols(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw DomainError("degenerate form in signature computation");
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const Rational pivot = a(k, k);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= factor * a(r, k);
    }
  }
  return sig;
}

std::vector<Integer> discriminant_group(const Lattice& lattice) {
  std::vector<Integer> out;
  for (const Integer& d : smith_normal_form(lattice.gram()).invariant_factors())
    if (d > 1) out.push_back(d);
  return out;
}

bool is_isometry(const Lattice& lattice, const IntMatrix& g) {
  const std::size_t n = lattice.rank();
  if (g.rows() != n || g.cols() != n) throw DomainError("isometry candidate has the wrong shape");
  if (!(g.transpose() * lattice.gram() * g == lattice.gram())) return false;
  const Integer d = determinant(g);
  return d == 1 || d == -1;
}

bool acts_trivially_on_discriminant(const Lattice& lattice, const IntMatrix& g) {
  if (!is_isometry(lattice, g)) throw DomainError("matrix is not an isometry of the lattice");
  const RatMatrix shift = to_rational(g - IntMatrix::identity(lattice.rank()));
  return is_integral(shift * inverse(to_rational(lattice.gram())));
}

bool is_sign_canonical(std::span<const Integer> coords) {
  for (const Integer& x : coords)
    if (x != 0) return x > 0;
  return true;
}

IntVector sign_canonical(IntVector coords) {
  if (!is_sign_canonical(coords))
    for (auto& x : coords) x = -x;
  return coords;
}

std::vector<LatticeVector> enumerate_roots(const Lattice& lattice, const RootQuery& query) {
  if (query.height < 0) throw DomainError("height must be nonnegative");
  const std::size_t n = lattice.rank();
  const long h = query.height;
  std::vector<LatticeVector> roots;
  std::vector<long> odometer(n, -h);
  IntVector v(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = odometer[i];
    if (lattice.pair(v, v) == -2 && (!query.modulo_sign || is_sign_canonical(v))) roots.emplace_back(lattice, v);
    std::size_t i = n;
    while (i > 0 && odometer[i - 1] == h) {
      odometer[i - 1] = -h;
      --i;
    }
    if (i == 0) break;
    ++odometer[i - 1];
  }
  return roots;
}

Sublattice make_sublattice(const Lattice& lattice, IntMatrix basis) {
  if (basis.cols() != lattice.rank()) throw DomainError("sublattice basis has the wrong width");
  IntMatrix gram = basis * lattice.gram() * basis.transpose();
  return {std::move(basis), std::move(gram)};
}

Sublattice orthogonal_complement(const Lattice& lattice, std::span<const LatticeVector> vectors) {
  const IntMatrix constraints = rows_of(vectors, lattice) * lattice.gram();
  return make_sublattice(lattice, integer_kernel(constraints));
}

IntMatrix primitive_closure(const Lattice& lattice, std::span<const LatticeVector> vectors) {
  return saturate_rows(rows_of(vectors, lattice));
}

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  return pair(v.divisor, w.divisor) - v.r * w.s - w.r * v.s;
}

Integer euler_form_fukaya(const LatticeVector& a, const LatticeVector& b) { return -pair(a, b); }

}  // namespace k3mcg
