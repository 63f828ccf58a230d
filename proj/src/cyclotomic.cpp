#include "k3mcg/cyclotomic.hpp"

#include <sstream>

namespace k3mcg {

namespace {

std::array<Rational, 8> reduce(std::array<Rational, 15> p) {
  // z^8 = z^4 - 1
  for (int d = 14; d >= 8; --d) {
    if (sgn(p[d]) == 0) continue;
    p[d - 4] += p[d];
    p[d - 8] -= p[d];
    p[d] = 0;
  }
  std::array<Rational, 8> out;
  for (int d = 0; d < 8; ++d) out[d] = p[d];
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic(const Gaussian& g) {
  coeffs_[0] = g.re;
  *this = *this + Cyclotomic(g.im) * i();
}

Cyclotomic Cyclotomic::root_of_unity(long k, long order) {
  if (order < 1 || kConductor % order != 0)
    throw DomainError("roots of unity of order " + std::to_string(order) + " exceed conductor 24");
  long e = (k % order + order) % order * (kConductor / order);
  // z^12 = -1
  Rational sign = 1;
  if (e >= 12) {
    e -= 12;
    sign = -1;
  }
  std::array<Rational, 15> p{};
  p[e] = sign;
  return Cyclotomic(reduce(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) throw DomainError("negative powers are not supported");
  Cyclotomic out(1);
  Cyclotomic base = *this;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d < 8; ++d) {
    if (sgn(coeffs_[d]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << k3mcg::to_string(coeffs_[d]);
    if (d) os << "*z^" << d;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  std::array<Rational, 8> out;
  for (int d = 0; d < 8; ++d) out[d] = x.coeffs_[d] + y.coeffs_[d];
  return Cyclotomic(out);
}

Cyclotomic operator-(const Cyclotomic& x) {
  std::array<Rational, 8> out;
  for (int d = 0; d < 8; ++d) out[d] = -x.coeffs_[d];
  return Cyclotomic(out);
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  std::array<Rational, 15> p{};
  for (int a = 0; a < 8; ++a) {
    if (sgn(x.coeffs_[a]) == 0) continue;
    for (int b = 0; b < 8; ++b) p[a + b] += x.coeffs_[a] * y.coeffs_[b];
  }
  return Cyclotomic(reduce(p));
}

}  // namespace k3mcg
