#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3mcg/matrix.hpp"
#include "k3mcg/quadratic.hpp"

namespace k3mcg {

/// Element of Q(i).
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(long r) : re(r) {}
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Gaussian inverse() const;
  std::string to_string() const;

  friend Gaussian operator+(const Gaussian& x, const Gaussian& y) { return {x.re + y.re, x.im + y.im}; }
  friend Gaussian operator-(const Gaussian& x, const Gaussian& y) { return {x.re - y.re, x.im - y.im}; }
  friend Gaussian operator-(const Gaussian& x) { return {-x.re, -x.im}; }
  friend Gaussian operator*(const Gaussian& x, const Gaussian& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const Gaussian& x, const Gaussian& y) { return x.re == y.re && x.im == y.im; }
};

/// Valuation of a truncated series: a number, +infinity (exact zero), or
/// only a lower bound when every known coefficient vanishes below trunc.
struct Valuation {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Infinite;
  Rational value{0};  // the valuation, or the lower bound when Unknown

  static Valuation finite(Rational v) { return {Kind::Finite, std::move(v)}; }
  static Valuation infinite() { return {Kind::Infinite, 0}; }
  static Valuation unknown(Rational bound) { return {Kind::Unknown, std::move(bound)}; }
  bool known() const { return kind != Kind::Unknown; }
  std::string to_string() const;
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.kind == b.kind && (a.kind == Kind::Infinite || a.value == b.value);
  }
};

/// sum c_j q^{e_j}, known strictly below trunc (nullopt = +infinity).
class NovikovSeries {
 public:
  using Term = std::pair<Rational, Gaussian>;

  /// Exact zero.
  NovikovSeries() = default;
  NovikovSeries(std::vector<Term> terms, std::optional<Rational> trunc = std::nullopt);

  static NovikovSeries monomial(Rational exponent, Gaussian coeff = 1, std::optional<Rational> trunc = std::nullopt);
  static NovikovSeries constant(Gaussian c) { return monomial(0, std::move(c)); }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_; }
  /// Exact zero (no terms, nothing unknown).
  bool is_zero() const { return terms_.empty() && !trunc_; }

  /// Same known terms and same truncation.
  friend bool operator==(const NovikovSeries&, const NovikovSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  std::optional<Rational> trunc_;
};

Valuation nov_val(const NovikovSeries& x);
NovikovSeries nov_add(const NovikovSeries& x, const NovikovSeries& y);
NovikovSeries nov_neg(const NovikovSeries& x);
NovikovSeries nov_mul(const NovikovSeries& x, const NovikovSeries& y);
NovikovSeries nov_scale_exponents(const Rational& a, const NovikovSeries& x);
/// Restricts to exponents < t (the truncation only shrinks).
NovikovSeries nov_truncate(const NovikovSeries& x, const Rational& t);
/// Equal below the common truncation.
bool nov_agree(const NovikovSeries& x, const NovikovSeries& y);

inline NovikovSeries operator+(const NovikovSeries& x, const NovikovSeries& y) { return nov_add(x, y); }
inline NovikovSeries operator-(const NovikovSeries& x) { return nov_neg(x); }
inline NovikovSeries operator-(const NovikovSeries& x, const NovikovSeries& y) { return nov_add(x, nov_neg(y)); }
inline NovikovSeries operator*(const NovikovSeries& x, const NovikovSeries& y) { return nov_mul(x, y); }

/// Entrywise valuation; throws DomainError on an infinite or unknown entry.
RatVector valuation_vector(const std::vector<NovikovSeries>& d);

/// <h, lam> != 0 for every h, decided exactly. Coordinates of lam may live in
/// different quadratic fields; the square roots of distinct square-free
/// integers are linearly independent over Q.
bool avoids_rational_hyperplanes(const std::vector<QN>& lam, const std::vector<RatVector>& hyperplanes);

}  // namespace k3mcg
