#pragma once

#include <array>
#include <string>

#include "k3mcg/novikov.hpp"

namespace k3mcg {

/// Element of Q(zeta_24), stored as coefficients of 1, z, ..., z^7 modulo
/// Phi_24(z) = z^8 - z^4 + 1. Contains all 2nd, 3rd, 4th, 6th, 8th, 12th and
/// 24th roots of unity, and Q(i) via i = z^6.
class Cyclotomic {
 public:
  static constexpr long kConductor = 24;

  Cyclotomic() = default;
  Cyclotomic(long c) { coeffs_[0] = c; }
  Cyclotomic(const Rational& c) { coeffs_[0] = c; }
  Cyclotomic(const Gaussian& g);
  explicit Cyclotomic(std::array<Rational, 8> coeffs) : coeffs_(std::move(coeffs)) {}

  /// exp(2 pi i k / order); order must divide 24.
  static Cyclotomic root_of_unity(long k, long order);
  static Cyclotomic i() { return root_of_unity(1, 4); }

  const std::array<Rational, 8>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  Cyclotomic pow(long k) const;
  std::string to_string() const;

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) { return x.coeffs_ == y.coeffs_; }

 private:
  std::array<Rational, 8> coeffs_{};
};

}  // namespace k3mcg
