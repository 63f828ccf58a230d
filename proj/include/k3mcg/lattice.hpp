#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k3mcg/matrix.hpp"

namespace k3mcg {

/// Free Z-module of finite rank with a nondegenerate integral symmetric form.
///
/// Copies share the Gram matrix; two lattices are "the same" when their Gram
/// matrices agree entrywise.
class Lattice {
 public:
  /// Throws DomainError unless gram is square, nonempty, symmetric and nondegenerate.
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const { return data_->gram.rows(); }
  const IntMatrix& gram() const { return data_->gram; }
  const Integer& det() const { return data_->det; }

  /// coords^T * gram * other
  Integer pair(std::span<const Integer> v, std::span<const Integer> w) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.data_ == b.data_ || a.gram() == b.gram();
  }

 private:
  struct Data {
    IntMatrix gram;
    Integer det;
  };
  std::shared_ptr<const Data> data_;
};

class LatticeVector {
 public:
  LatticeVector(Lattice lattice, IntVector coords);

  const Lattice& lattice() const { return lattice_; }
  const IntVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
  }

 private:
  Lattice lattice_;
  IntVector coords_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class StandardKind { U, E8neg, TwoN, K3 };

/// U, negative-definite E8, <2n> (n >= 1), and U^3 + E8neg^2.
Lattice make_standard(StandardKind kind, long n = 1);

Integer pair(const LatticeVector& v, const LatticeVector& w);
Lattice negate(const Lattice& lattice);
Lattice direct_sum(const Lattice& a, const Lattice& b);
Signature signature(const Lattice& lattice);

/// Invariant factors > 1 of the discriminant group N^* / N.
std::vector<Integer> discriminant_group(const Lattice& lattice);

/// g acts on coordinate columns, v -> g v.
bool is_isometry(const Lattice& lattice, const IntMatrix& g);
bool acts_trivially_on_discriminant(const Lattice& lattice, const IntMatrix& g);

struct RootQuery {
  long height = 1;
  /// Keep one representative per {v, -v}: the one whose first nonzero coordinate is positive.
  bool modulo_sign = false;
};

/// All v with max|v_i| <= height and (v,v) = -2, lexicographically ordered.
std::vector<LatticeVector> enumerate_roots(const Lattice& lattice, const RootQuery& query);

/// True when the first nonzero coordinate is positive.
bool is_sign_canonical(std::span<const Integer> coords);
IntVector sign_canonical(IntVector coords);

/// Sublattice given by a row basis, together with the induced form.
struct Sublattice {
  IntMatrix basis;
  IntMatrix gram;
  std::size_t rank() const { return basis.rows(); }
};

Sublattice orthogonal_complement(const Lattice& lattice, std::span<const LatticeVector> vectors);
IntMatrix primitive_closure(const Lattice& lattice, std::span<const LatticeVector> vectors);
Sublattice make_sublattice(const Lattice& lattice, IntMatrix basis);

/// Mukai vector (r, D, s) with D in a designated Picard lattice.
struct MukaiVector {
  Integer r;
  LatticeVector divisor;
  Integer s;
};

/// D1.D2 - r1 s2 - r2 s1
Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w);

/// chi(a, b) = -(a, b) on the numerical lattice of the Fukaya category.
Integer euler_form_fukaya(const LatticeVector& a, const LatticeVector& b);

}  // namespace k3mcg
