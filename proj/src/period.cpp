#include "k3mcg/period.hpp"

#include <algorithm>
#include <map>

#include "k3mcg/reduction.hpp"
#include "k3mcg/smith.hpp"

namespace k3mcg {

ComplexQN operator/(const ComplexQN& a, const ComplexQN& b) {
  const QN denom = b.re * b.re + b.im * b.im;
  if (denom.is_zero()) throw DomainError("complex division by zero");
  const ComplexQN num = a * b.conj();
  return {num.re / denom, num.im / denom};
}

QN sqrt_integer(const Integer& n) { return sqrt_rational(Rational(n)); }

QN sqrt_rational(const Rational& q) {
  if (q < 0) throw DomainError("square root of a negative rational");
  // sqrt(p/r) = sqrt(p r) / r, and p r = f^2 s with s square-free.
  const Integer pr = q.get_num() * q.get_den();
  Integer square = 1, rest = pr;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  const Rational coeff = make_rational(square, q.get_den());
  if (rest == 1) return QN(coeff);
  return QN(Rational(0), coeff, rest);
}

HPoint::HPoint(QN x, QN y) : x_(std::move(x)), y_(std::move(y)) {
  if (y_.sign() <= 0) throw DomainError("point is not in the upper half plane");
}

PeriodVector::PeriodVector(Lattice l, std::vector<QN> real, std::vector<QN> imag)
    : lattice(std::move(l)), re(std::move(real)), im(std::move(imag)) {
  if (re.size() != lattice.rank() || im.size() != lattice.rank())
    throw DomainError("period vector length does not match lattice rank");
}

std::vector<QN> PeriodVector::negated(std::vector<QN> v) {
  for (auto& x : v) x = -x;
  return v;
}

QN pair_qn(const Lattice& lattice, const std::vector<QN>& v, const std::vector<QN>& w) {
  const std::size_t n = lattice.rank();
  if (v.size() != n || w.size() != n) throw DomainError("vector length does not match lattice rank");
  QN total;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    QN row;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& g = lattice.gram()(i, j);
      if (g != 0 && !w[j].is_zero()) row += QN(g) * w[j];
    }
    total += v[i] * row;
  }
  return total;
}

ComplexQN pair_complex(const PeriodVector& v, const PeriodVector& w) {
  if (!(v.lattice == w.lattice)) throw DomainError("period vectors belong to different lattices");
  const Lattice& l = v.lattice;
  return {pair_qn(l, v.re, w.re) - pair_qn(l, v.im, w.im), pair_qn(l, v.re, w.im) + pair_qn(l, v.im, w.re)};
}

QN hermitian_norm(const PeriodVector& v) { return pair_qn(v.lattice, v.re, v.re) + pair_qn(v.lattice, v.im, v.im); }

Lattice hyperbolic_plus_2n(long n) {
  return direct_sum(make_standard(StandardKind::U), make_standard(StandardKind::TwoN, n));
}

PeriodVector param(long n, const HPoint& z) {
  const ComplexQN w = z.z();
  const ComplexQN z2 = w * w;
  const QN minus_n(-n);
  return {hyperbolic_plus_2n(n), {minus_n * z2.re, QN(1), w.re}, {minus_n * z2.im, QN(0), w.im}};
}

bool is_in_Q(const PeriodVector& v) {
  return pair_complex(v, v).is_zero() && hermitian_norm(v).sign() > 0;
}

bool is_in_P(const PeriodVector& v) {
  const QN rr = pair_qn(v.lattice, v.re, v.re);
  const QN ii = pair_qn(v.lattice, v.im, v.im);
  const QN ri = pair_qn(v.lattice, v.re, v.im);
  return rr.sign() > 0 && (rr * ii - ri * ri).sign() > 0;
}

Conformalized conformalize(const PeriodVector& v) {
  if (!is_in_P(v)) throw DomainError("vector does not span a positive-definite two-plane");
  const Lattice& l = v.lattice;
  const QN rr = pair_qn(l, v.re, v.re);
  const QN mu = pair_qn(l, v.re, v.im) / rr;
  std::vector<QN> im = v.im;
  for (std::size_t i = 0; i < im.size(); ++i) im[i] -= mu * v.re[i];
  const QN ii = pair_qn(l, im, im);
  Conformalized out{PeriodVector(l, v.re, im), rr / ii, std::nullopt};

  if (out.im_scale_squared.is_rational()) {
    const QN scale = sqrt_rational(out.im_scale_squared.rational_part());
    try {
      std::vector<QN> scaled = im;
      for (auto& x : scaled) x *= scale;
      out.exact = PeriodVector(l, v.re, std::move(scaled));
    } catch (const DomainError&) {
      // The root lies outside the coordinates' field; keep the symbolic scale.
    }
  }
  return out;
}

bool is_in_Q(const Conformalized& c) {
  const Lattice& l = c.frame.lattice;
  const QN rr = pair_qn(l, c.frame.re, c.frame.re);
  const QN ii = pair_qn(l, c.frame.im, c.frame.im);
  return rr.sign() > 0 && c.im_scale_squared.sign() > 0 && pair_qn(l, c.frame.re, c.frame.im).is_zero() &&
         rr == c.im_scale_squared * ii;
}

HPoint Puncture::point() const {
  const QN y = sqrt_rational(make_rational(Integer(1), b * b * n));
  return {QN(make_rational(c, b)), y};
}

Puncture make_puncture(long n, const Integer& b, const Integer& c) {
  if (n < 1) throw DomainError("n must be positive");
  if (b <= 0) throw DomainError("puncture denominator b must be positive");
  if ((Integer(n) * c * c + 1) % b != 0) throw DomainError("b does not divide n c^2 + 1");
  return {n, b, c};
}

std::vector<Puncture> punctures_in_box(long n, long bmax, long cmax) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<Puncture> out;
  for (long b = 1; b <= bmax; ++b)
    for (long c = -cmax; c <= cmax; ++c)
      if ((Integer(n) * c * c + 1) % b == 0) out.push_back({n, Integer(b), Integer(c)});
  return out;
}

Puncture puncture_from_root(long n, const LatticeVector& delta) {
  if (!(delta.lattice() == hyperbolic_plus_2n(n))) throw DomainError("root does not lie in U + <2n>");
  if (pair(delta, delta) != -2) throw DomainError("vector is not a (-2)-class");
  Integer a = delta[0], b = delta[1], c = delta[2];
  if (b == 0) throw DegenerateRoot("root has b = 0; its orthogonal locus misses the upper half plane");
  if (b < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (a * b != -(Integer(n) * c * c + 1)) throw DomainError("root fails a b = -(n c^2 + 1)");
  return make_puncture(n, b, c);
}

LatticeVector root_from_puncture(const Puncture& p) {
  const Integer a = -(Integer(p.n) * p.c * p.c + 1) / p.b;
  return {hyperbolic_plus_2n(p.n), {a, p.b, p.c}};
}

namespace {

ComplexQN pair_with_integral(const PeriodVector& v, const IntVector& w) {
  std::vector<QN> wq(w.begin(), w.end());
  return {pair_qn(v.lattice, v.re, wq), pair_qn(v.lattice, v.im, wq)};
}

std::string describe(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

BijectionReport roots_punctures_bijection_check(long n, long height, long bmax, long cmax) {
  BijectionReport report;
  const Lattice l = hyperbolic_plus_2n(n);
  for (const LatticeVector& delta : enumerate_roots(l, {height, false})) {
    ++report.roots_checked;
    try {
      const Puncture p = puncture_from_root(n, delta);
      if (!pair_with_integral(param(n, p.point()), delta.coords()).is_zero())
        report.failures.push_back("root " + describe(delta.coords()) + " is not orthogonal to its puncture");
    } catch (const DegenerateRoot&) {
      ++report.degenerate_roots;
    } catch (const DomainError& e) {
      report.failures.push_back("root " + describe(delta.coords()) + ": " + e.what());
    }
  }
  for (const Puncture& p : punctures_in_box(n, bmax, cmax)) {
    ++report.punctures_checked;
    const LatticeVector delta = root_from_puncture(p);
    const std::string where = "puncture (b=" + p.b.get_str() + ", c=" + p.c.get_str() + ")";
    if (pair(delta, delta) != -2) {
      report.failures.push_back(where + " yields a non-root");
      continue;
    }
    if (!(puncture_from_root(n, delta) == p) || !(puncture_from_root(n, -delta) == p))
      report.failures.push_back(where + " does not round-trip through its root");
    if (!pair_with_integral(param(n, p.point()), delta.coords()).is_zero())
      report.failures.push_back(where + " is not on the orthogonal locus of its root");
  }
  return report;
}

bool same_component(const PeriodVector& v, const PeriodVector& w) {
  if (!(v.lattice == w.lattice)) throw DomainError("period vectors belong to different lattices");
  if (!is_in_P(v) || !is_in_P(w)) throw DomainError("same_component needs vectors spanning positive two-planes");
  const Lattice& l = v.lattice;
  // Projection of w's frame onto v's plane; det(Gram(v)) > 0 so the sign of
  // this determinant is the relative orientation.
  const QN det = pair_qn(l, w.re, v.re) * pair_qn(l, w.im, v.im) - pair_qn(l, w.re, v.im) * pair_qn(l, w.im, v.re);
  if (det.is_zero()) throw DomainError("degenerate projection onto the reference plane; perturb the input");
  return det.sign() > 0;
}

bool in_positive_component(long n, const PeriodVector& v) {
  return same_component(param(n, HPoint(QN(0), QN(1))), v);
}

Retraction retract_to_sublattice(const PeriodVector& v, const IntMatrix& sublattice, const IntMatrix& complement) {
  const Lattice& l = v.lattice;
  if (sublattice.cols() != l.rank() || complement.cols() != l.rank())
    throw DomainError("basis width does not match lattice rank");
  if (sublattice.rows() == 0) throw DomainError("sublattice basis is empty");
  const IntMatrix cross = sublattice * l.gram() * complement.transpose();
  for (std::size_t i = 0; i < cross.rows(); ++i)
    for (std::size_t j = 0; j < cross.cols(); ++j)
      if (cross(i, j) != 0) throw DomainError("sublattice and complement bases are not orthogonal");
  const Sublattice sub = make_sublattice(l, sublattice);
  const Sublattice rest = make_sublattice(l, complement);
  if (rest.rank() > 0 && !is_positive_definite(to_rational(-rest.gram)))
    throw DomainError("complement is not negative definite");

  const RatMatrix sub_inverse = inverse(to_rational(sub.gram));
  auto coefficients = [&](const std::vector<QN>& x, const IntMatrix& basis, const RatMatrix& inv) {
    std::vector<QN> pairings(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      const auto row = basis.row(i);
      pairings[i] = pair_qn(l, std::vector<QN>(row.begin(), row.end()), x);
    }
    std::vector<QN> out(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < basis.rows(); ++j) out[i] += QN(inv(i, j)) * pairings[j];
    return out;
  };
  auto combine = [&](const std::vector<QN>& coeffs, const IntMatrix& basis) {
    std::vector<QN> out(l.rank());
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t c = 0; c < l.rank(); ++c)
        if (basis(i, c) != 0) out[c] += coeffs[i] * QN(basis(i, c));
    return out;
  };

  const std::vector<QN> a_re = coefficients(v.re, sublattice, sub_inverse);
  const std::vector<QN> a_im = coefficients(v.im, sublattice, sub_inverse);
  std::vector<QN> u_re = combine(a_re, sublattice);
  std::vector<QN> u_im = combine(a_im, sublattice);

  // The remainder must lie in the span of the complement.
  {
    std::vector<QN> r_re = v.re, r_im = v.im;
    for (std::size_t c = 0; c < l.rank(); ++c) {
      r_re[c] -= u_re[c];
      r_im[c] -= u_im[c];
    }
    std::vector<QN> w_re(l.rank()), w_im(l.rank());
    if (rest.rank() > 0) {
      const RatMatrix rest_inverse = inverse(to_rational(rest.gram));
      w_re = combine(coefficients(r_re, complement, rest_inverse), complement);
      w_im = combine(coefficients(r_im, complement, rest_inverse), complement);
    }
    if (!(w_re == r_re) || !(w_im == r_im))
      throw DomainError("vector is not in the span of the sublattice and complement bases");
  }

  return {PeriodVector(Lattice(sub.gram), a_re, a_im), PeriodVector(l, std::move(u_re), std::move(u_im))};
}

K0Verdict is_in_K0_bounded(const PeriodVector& omega, const LatticeVector& kappa, long height) {
  const Lattice& l = omega.lattice;
  if (!(kappa.lattice() == l)) throw DomainError("kappa and Omega belong to different lattices");
  if (pair(kappa, kappa) <= 0) throw DomainError("kappa must have positive square");
  if (height < 0) throw DomainError("height must be nonnegative");
  if (!is_in_Q(omega)) throw DomainError("Omega is not in Q(N)");
  const std::vector<QN> kq(kappa.coords().begin(), kappa.coords().end());
  if (!pair_qn(l, omega.re, kq).is_zero() || !pair_qn(l, omega.im, kq).is_zero())
    throw DomainError("Omega is not orthogonal to kappa");

  K0Verdict verdict{true, height, std::nullopt};
  if (height == 0) return verdict;

  // delta is orthogonal to Omega and kappa iff it pairs to zero with kappa and
  // with every rational component of Re and Im (1 and the square roots are
  // linearly independent over Q).
  std::vector<RatVector> parts{RatVector(kappa.coords().begin(), kappa.coords().end())};
  for (const std::vector<QN>* comp : {&omega.re, &omega.im}) {
    RatVector rational(l.rank());
    std::map<Integer, RatVector> irrational;
    for (std::size_t i = 0; i < l.rank(); ++i) {
      const QN& x = (*comp)[i];
      rational[i] = x.rational_part();
      if (!x.is_rational()) {
        auto [it, fresh] = irrational.try_emplace(x.field(), RatVector(l.rank()));
        it->second[i] = x.irrational_part();
      }
    }
    parts.push_back(std::move(rational));
    for (auto& [s, vec] : irrational) parts.push_back(std::move(vec));
  }
  const RatMatrix g = to_rational(l.gram());
  IntMatrix constraints(parts.size(), l.rank());
  for (std::size_t r = 0; r < parts.size(); ++r) {
    RatVector row(l.rank());
    for (std::size_t c = 0; c < l.rank(); ++c)
      for (std::size_t k = 0; k < l.rank(); ++k) row[c] += parts[r][k] * g(k, c);
    Integer den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < l.rank(); ++c) constraints(r, c) = Rational(row[c] * den).get_num();
  }
  const IntMatrix basis = integer_kernel(constraints);
  if (basis.rows() == 0) return verdict;
  const Sublattice m = make_sublattice(l, basis);
  const IntMatrix positive = -m.gram;
  if (!is_positive_definite(to_rational(positive)))
    throw DomainError("lattice vectors orthogonal to Omega and kappa do not form a negative-definite lattice");

  const IntMatrix bt = basis.transpose();
  std::optional<IntVector> best;
  for (const IntVector& x : vectors_of_norm(positive, Integer(2))) {
    IntVector delta = bt.apply(x);
    const bool inside = std::all_of(delta.begin(), delta.end(), [height](const Integer& c) { return abs(c) <= height; });
    if (inside && (!best || delta < *best)) best = std::move(delta);
  }
  if (best) {
    verdict.passes = false;
    verdict.witness = LatticeVector(l, *best);
  }
  return verdict;
}

}  // namespace k3mcg
