#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3mcg/lattice.hpp"
#include "k3mcg/quadratic.hpp"

namespace k3mcg {

/// x + i y with exact real quadratic components.
struct ComplexQN {
  QN re;
  QN im;

  ComplexQN conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexQN operator+(const ComplexQN& a, const ComplexQN& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexQN operator-(const ComplexQN& a, const ComplexQN& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexQN operator*(const ComplexQN& a, const ComplexQN& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexQN operator/(const ComplexQN& a, const ComplexQN& b);
  friend bool operator==(const ComplexQN& a, const ComplexQN& b) { return a.re == b.re && a.im == b.im; }
};

/// sqrt(n) for a positive integer n, as an exact quadratic number.
QN sqrt_integer(const Integer& n);
/// sqrt(q) for a positive rational q.
QN sqrt_rational(const Rational& q);

/// Point z = x + i y of the upper half plane.
class HPoint {
 public:
  HPoint(QN x, QN y);
  const QN& x() const { return x_; }
  const QN& y() const { return y_; }
  ComplexQN z() const { return {x_, y_}; }
  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  QN x_;
  QN y_;
};

/// Omega = re + i im in N tensor C.
struct PeriodVector {
  Lattice lattice;
  std::vector<QN> re;
  std::vector<QN> im;

  PeriodVector(Lattice l, std::vector<QN> real, std::vector<QN> imag);
  PeriodVector conjugate() const { return {lattice, re, negated(im)}; }
  friend bool operator==(const PeriodVector& a, const PeriodVector& b) {
    return a.lattice == b.lattice && a.re == b.re && a.im == b.im;
  }

 private:
  static std::vector<QN> negated(std::vector<QN> v);
};

/// Bilinear form on real quadratic coordinates.
QN pair_qn(const Lattice& lattice, const std::vector<QN>& v, const std::vector<QN>& w);
/// Complex-bilinear (Omega, Omega').
ComplexQN pair_complex(const PeriodVector& v, const PeriodVector& w);
/// (Omega, conj Omega) = (Re)^2 + (Im)^2.
QN hermitian_norm(const PeriodVector& v);

/// U + <2n>, the lattice of the rank-one Picard case.
Lattice hyperbolic_plus_2n(long n);

/// z -> [-n z^2 : 1 : z] in (U + <2n>)_C.
PeriodVector param(long n, const HPoint& z);

bool is_in_Q(const PeriodVector& v);
bool is_in_P(const PeriodVector& v);

/// Conformal frame with the same oriented plane. The true imaginary part is
/// sqrt(im_scale_squared) * frame.im; `exact` holds it when that root lives in
/// the coordinates' quadratic field.
struct Conformalized {
  PeriodVector frame;
  QN im_scale_squared;
  std::optional<PeriodVector> exact;
};

Conformalized conformalize(const PeriodVector& v);
bool is_in_Q(const Conformalized& c);

/// Removed point c/b + i/(b sqrt(n)) of the punctured half plane.
struct Puncture {
  long n = 1;
  Integer b;
  Integer c;

  HPoint point() const;
  friend bool operator==(const Puncture&, const Puncture&) = default;
  friend auto operator<=>(const Puncture& p, const Puncture& q) {
    if (p.n != q.n) return p.n <=> q.n;
    if (int s = cmp(p.b, q.b); s != 0) return s <=> 0;
    return cmp(p.c, q.c) <=> 0;
  }
};

/// Throws DomainError unless b > 0 and b | n c^2 + 1.
Puncture make_puncture(long n, const Integer& b, const Integer& c);

std::vector<Puncture> punctures_in_box(long n, long bmax, long cmax);

/// Thrown by puncture_from_root for roots with vanishing second coordinate.
class DegenerateRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

Puncture puncture_from_root(long n, const LatticeVector& delta);
/// (-(n c^2 + 1)/b, b, c)
LatticeVector root_from_puncture(const Puncture& p);

struct BijectionReport {
  std::size_t roots_checked = 0;
  std::size_t degenerate_roots = 0;
  std::size_t punctures_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

BijectionReport roots_punctures_bijection_check(long n, long height, long bmax, long cmax);

/// Orientation agreement of two positive-definite frames of a (2,t) lattice.
/// Throws DomainError when the frame projection degenerates.
bool same_component(const PeriodVector& v, const PeriodVector& w);
/// Omega^+ is by convention the component of param(n, i).
bool in_positive_component(long n, const PeriodVector& v);

struct Retraction {
  PeriodVector in_sublattice;  // coordinates in the given sublattice basis
  PeriodVector ambient;        // the same vector in the ambient coordinates
};

/// Linear projection onto span(sublattice) along span(complement).
Retraction retract_to_sublattice(const PeriodVector& v, const IntMatrix& sublattice, const IntMatrix& complement);

struct K0Verdict {
  bool passes = true;
  long height = 0;
  std::optional<LatticeVector> witness;
};

/// Bounded membership in the complement of all delta-perp x delta-perp: looks
/// for roots of sup-norm <= height orthogonal to both Omega and kappa. The
/// witness, when present, is the lexicographically least such root.
K0Verdict is_in_K0_bounded(const PeriodVector& omega, const LatticeVector& kappa, long height);

}  // namespace k3mcg
