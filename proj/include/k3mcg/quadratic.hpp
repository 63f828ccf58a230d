#pragma once

#include <compare>
#include <string>

#include "k3mcg/numeric.hpp"

namespace k3mcg {

/// Exact element a + b*sqrt(s) of the real quadratic field Q(sqrt(s)), s square-free.
///
/// A number with b == 0 is "rational" and may be combined with numbers of any
/// field; combining two irrational numbers of different fields is a DomainError.
/// s == 1 is accepted and folded into the rational part.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Integer& value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational b, const Integer& s);

  /// sqrt(s) itself.
  static QuadraticNumber root(const Integer& s) { return {Rational(0), Rational(1), s}; }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// Field parameter; 1 for rational values.
  const Integer& field() const { return s_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  QuadraticNumber conjugate() const;
  /// a^2 - s b^2
  Rational norm() const;
  QuadraticNumber inverse() const;

  /// Decimal approximation for display only.
  double approx() const;
  std::string to_string() const;

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  QuadraticNumber operator-() const;

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).is_zero(); }
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  void normalize();
  static Integer common_field(const QuadraticNumber& x, const QuadraticNumber& y);

  Rational a_ = 0;
  Rational b_ = 0;
  Integer s_ = 1;
};

using QN = QuadraticNumber;

}  // namespace k3mcg
