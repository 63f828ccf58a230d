#include "k3mcg/novikov.hpp"

#include <algorithm>
#include <sstream>

namespace k3mcg {

Gaussian Gaussian::inverse() const {
  const Rational n = re * re + im * im;
  if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
  return {re / n, -im / n};
}

std::string Gaussian::to_string() const {
  if (sgn(im) == 0) return k3mcg::to_string(re);
  if (sgn(re) == 0) return k3mcg::to_string(im) + "i";
  return k3mcg::to_string(re) + (sgn(im) > 0 ? "+" : "") + k3mcg::to_string(im) + "i";
}

std::string Valuation::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return k3mcg::to_string(value);
    case Kind::Infinite:
      return "inf";
    case Kind::Unknown:
      return ">=" + k3mcg::to_string(value);
  }
  return {};
}

NovikovSeries::NovikovSeries(std::vector<Term> terms, std::optional<Rational> trunc) : trunc_(std::move(trunc)) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (trunc_ && t.first >= *trunc_) continue;
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second = terms_.back().second + t.second;
      if (terms_.back().second.is_zero()) terms_.pop_back();
    } else if (!t.second.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

NovikovSeries NovikovSeries::monomial(Rational exponent, Gaussian coeff, std::optional<Rational> trunc) {
  return {{{std::move(exponent), std::move(coeff)}}, std::move(trunc)};
}

std::string NovikovSeries::to_string() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].second.to_string() << ")q^" << k3mcg::to_string(terms_[i].first);
  }
  if (trunc_) os << " + O(q^" << k3mcg::to_string(*trunc_) << ")";
  return os.str();
}

namespace {

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Lower bound for the valuation; nullopt for exact zero.
std::optional<Rational> val_bound(const NovikovSeries& x) {
  if (!x.terms().empty()) return x.terms().front().first;
  return x.trunc();
}

}  // namespace

Valuation nov_val(const NovikovSeries& x) {
  if (!x.terms().empty()) return Valuation::finite(x.terms().front().first);
  if (!x.trunc()) return Valuation::infinite();
  return Valuation::unknown(*x.trunc());
}

NovikovSeries nov_add(const NovikovSeries& x, const NovikovSeries& y) {
  std::vector<NovikovSeries::Term> terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return {std::move(terms), min_trunc(x.trunc(), y.trunc())};
}

NovikovSeries nov_neg(const NovikovSeries& x) {
  std::vector<NovikovSeries::Term> terms = x.terms();
  for (auto& t : terms) t.second = -t.second;
  return {std::move(terms), x.trunc()};
}

NovikovSeries nov_mul(const NovikovSeries& x, const NovikovSeries& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const auto vx = val_bound(x);
  const auto vy = val_bound(y);
  std::optional<Rational> trunc;
  if (y.trunc()) trunc = min_trunc(trunc, Rational(*vx + *y.trunc()));
  if (x.trunc()) trunc = min_trunc(trunc, Rational(*vy + *x.trunc()));
  std::vector<NovikovSeries::Term> terms;
  terms.reserve(x.terms().size() * y.terms().size());
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) terms.emplace_back(ex + ey, cx * cy);
  return {std::move(terms), std::move(trunc)};
}

NovikovSeries nov_scale_exponents(const Rational& a, const NovikovSeries& x) {
  if (sgn(a) <= 0) throw DomainError("exponent scaling factor must be positive");
  std::vector<NovikovSeries::Term> terms = x.terms();
  for (auto& t : terms) t.first *= a;
  std::optional<Rational> trunc;
  if (x.trunc()) trunc = Rational(*x.trunc() * a);
  return {std::move(terms), std::move(trunc)};
}

NovikovSeries nov_truncate(const NovikovSeries& x, const Rational& t) {
  return {x.terms(), min_trunc(x.trunc(), t)};
}

bool nov_agree(const NovikovSeries& x, const NovikovSeries& y) {
  const auto t = min_trunc(x.trunc(), y.trunc());
  if (!t) return x == y;
  return nov_truncate(x, *t).terms() == nov_truncate(y, *t).terms();
}

RatVector valuation_vector(const std::vector<NovikovSeries>& d) {
  RatVector out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Valuation v = nov_val(d[i]);
    if (v.kind != Valuation::Kind::Finite)
      throw DomainError("entry " + std::to_string(i) + " has valuation " + v.to_string());
    out.push_back(v.value);
  }
  return out;
}

bool avoids_rational_hyperplanes(const std::vector<QN>& lam, const std::vector<RatVector>& hyperplanes) {
  for (const RatVector& h : hyperplanes) {
    if (h.size() != lam.size()) throw DomainError("hyperplane normal has the wrong length");
    Rational rational_part = 0;
    std::map<Integer, Rational> irrational;  // field -> coefficient of sqrt(field)
    for (std::size_t i = 0; i < h.size(); ++i) {
      rational_part += h[i] * lam[i].rational_part();
      if (!lam[i].is_rational()) irrational[lam[i].field()] += h[i] * lam[i].irrational_part();
    }
    bool zero = sgn(rational_part) == 0;
    for (const auto& [s, c] : irrational) zero = zero && sgn(c) == 0;
    if (zero) return false;
  }
  return true;
}

}  // namespace k3mcg
