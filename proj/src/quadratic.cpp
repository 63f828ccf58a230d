#include "k3mcg/quadratic.hpp"

#include <cmath>
#include <sstream>

namespace k3mcg {

QuadraticNumber::QuadraticNumber(Rational a, Rational b, const Integer& s) : a_(std::move(a)), b_(std::move(b)), s_(s) {
  if (s_ <= 0 || !is_square_free(s_)) throw DomainError("quadratic field parameter must be a positive square-free integer");
  normalize();
}

void QuadraticNumber::normalize() {
  if (s_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) s_ = 1;
}

Integer QuadraticNumber::common_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.s_ == 1) return y.s_;
  if (y.s_ == 1 || x.s_ == y.s_) return x.s_;
  throw DomainError("arithmetic across different quadratic fields Q(sqrt(" + x.s_.get_str() + ")) and Q(sqrt(" +
                    y.s_.get_str() + "))");
}

int QuadraticNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with s b^2.
  const Rational a2 = a_ * a_;
  const Rational sb2 = b_ * b_ * Rational(s_);
  const int c = cmp(a2, sb2);
  return c > 0 ? sa : c < 0 ? sb : 0;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational QuadraticNumber::norm() const { return a_ * a_ - Rational(s_) * b_ * b_; }

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero quadratic number");
  const Rational n = norm();
  QuadraticNumber out = conjugate();
  out.a_ /= n;
  out.b_ /= n;
  return out;
}

double QuadraticNumber::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(s_.get_d()); }

std::string QuadraticNumber::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::ostringstream os;
  if (a_ != 0) os << a_.get_str() << (b_ > 0 ? "+" : "");
  os << b_.get_str() << "*sqrt(" << s_.get_str() << ")";
  return os.str();
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  s_ = common_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  s_ = common_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  const Integer s = common_field(*this, o);
  const Rational a = a_ * o.a_ + Rational(s) * b_ * o.b_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  s_ = s;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

}  // namespace k3mcg
