#include "k3mcg/fricke.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace k3mcg {

namespace {

Mat2 multiply(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// W_1 = ((0,-1),(1,0)) exactly.
const Mat2 kInversion{0, -1, 1, 0};

}  // namespace

FrickeElement::FrickeElement(long n, Mat2 m, bool fricke) : n_(n), m_(std::move(m)), fricke_(fricke) {
  if (n_ < 1) throw DomainError("Fricke level must be positive");
  if (m_[0] * m_[3] - m_[1] * m_[2] != 1) throw DomainError("Fricke matrix must have determinant 1");
  if (m_[2] % n_ != 0) throw DomainError("lower-left entry must be divisible by the level");
  normalize();
}

void FrickeElement::normalize() {
  if (n_ == 1 && fricke_) {
    m_ = multiply(m_, kInversion);
    fricke_ = false;
  }
  for (const Integer& x : m_) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : m_) y = -y;
    break;
  }
}

Mat2 fricke_conjugate(long n, const Mat2& m) {
  const Integer& a = m[0];
  const Integer& b = m[1];
  const Integer& c = m[2];
  const Integer& d = m[3];
  if (c % n != 0) throw DomainError("lower-left entry must be divisible by the level");
  return {d, -c / n, -Integer(n) * b, a};
}

FrickeElement fricke_compose(const FrickeElement& g, const FrickeElement& h) {
  if (g.level() != h.level()) throw DomainError("Fricke elements of different levels");
  const long n = g.level();
  // (m1 W^e1)(m2 W^e2) = m1 (W^e1 m2 W^-e1) W^(e1+e2), and W^2 = -1.
  const Mat2 inner = g.fricke() ? fricke_conjugate(n, h.matrix()) : h.matrix();
  return {n, multiply(g.matrix(), inner), g.fricke() != h.fricke()};
}

FrickeElement FrickeElement::inverse() const {
  const Mat2 inv{m_[3], -m_[1], -m_[2], m_[0]};
  if (!fricke_) return {n_, inv};
  // (m W)^{-1} = W^{-1} m^{-1} = -(W m^{-1} W^{-1}) W.
  return {n_, fricke_conjugate(n_, inv), true};
}

std::string FrickeElement::to_string() const {
  std::string s = "((" + m_[0].get_str() + "," + m_[1].get_str() + "),(" + m_[2].get_str() + "," + m_[3].get_str() + "))";
  if (fricke_) s += "*W" + std::to_string(n_);
  return s;
}

HPoint fricke_act(const FrickeElement& g, const HPoint& z) {
  ComplexQN w = z.z();
  if (g.fricke()) w = ComplexQN{QN(-1), QN(0)} / (ComplexQN{QN(g.level()), QN(0)} * w);
  const Mat2& m = g.matrix();
  const ComplexQN num = ComplexQN{QN(m[0]), QN(0)} * w + ComplexQN{QN(m[1]), QN(0)};
  const ComplexQN den = ComplexQN{QN(m[2]), QN(0)} * w + ComplexQN{QN(m[3]), QN(0)};
  const ComplexQN out = num / den;
  return {out.re, out.im};
}

IntMatrix fricke_to_isometry(const FrickeElement& g) {
  const long n = g.level();
  const Mat2& m = g.matrix();
  const Integer& a = m[0];
  const Integer& b = m[1];
  const Integer& c = m[2];
  const Integer& d = m[3];
  const Integer nn(n);
  // (p, q, r) = (-n z^2, 1, z) scaled by (c z + d)^2.
  IntMatrix out{{a * a, -nn * b * b, -2 * nn * a * b},
                {-(c * c) / nn, d * d, 2 * c * d},
                {-(a * c) / nn, b * d, a * d + b * c}};
  if (g.fricke()) out.swap_cols(0, 1);
  return out;
}

std::vector<FrickeElement> default_generators(long n) {
  if (n == 1) return {FrickeElement::translation(1), FrickeElement::inversion()};
  return {FrickeElement::translation(n), FrickeElement::involution(n)};
}

OrbitReport orbit_transitivity_check(long n, const std::vector<FrickeElement>& generators, long height, long slack) {
  if (generators.empty()) throw DomainError("empty generator list");
  if (slack < 1) throw DomainError("slack must be at least 1");
  OrbitReport report{n, height, slack, 0, 0, {}, 0};
  const Lattice l = hyperbolic_plus_2n(n);

  std::vector<IntMatrix> moves;
  for (const FrickeElement& g : generators) {
    if (g.level() != n) throw DomainError("generator level does not match n");
    moves.push_back(fricke_to_isometry(g));
    moves.push_back(fricke_to_isometry(g.inverse()));
  }

  const Integer bound = Integer(slack) * height;
  auto inside = [](const IntVector& v, const Integer& h) {
    return std::all_of(v.begin(), v.end(), [&h](const Integer& x) { return abs(x) <= h; });
  };

  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  const IntVector base = sign_canonical({-1, 1, 0});
  if (inside(base, bound)) {
    seen.insert(base);
    queue.push_back(base);
  }
  while (!queue.empty()) {
    const IntVector v = std::move(queue.front());
    queue.pop_front();
    for (const IntMatrix& g : moves) {
      IntVector w = sign_canonical(g.apply(v));
      if (!inside(w, bound) || seen.count(w)) continue;
      seen.insert(w);
      queue.push_back(std::move(w));
    }
  }
  report.explored = seen.size();

  for (const LatticeVector& root : enumerate_roots(l, {height, true})) {
    ++report.classes;
    if (seen.count(root.coords()))
      ++report.reached;
    else
      report.unreached.push_back(root.coords());
  }
  return report;
}

}  // namespace k3mcg
