#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "k3mcg/numeric.hpp"

namespace k3mcg {

using Exponent = std::vector<long>;

/// Sparse Laurent polynomial sum c_e x^e; zero coefficients are never stored.
/// Coeff needs +, *, is_zero() and, for derivatives, construction from long.
template <class Coeff>
class MonomialPolynomial {
 public:
  explicit MonomialPolynomial(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != nvars_) throw DomainError("exponent vector has the wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Distinct weighted degrees of the monomials.
  std::set<long> weighted_degrees(const std::vector<long>& weights) const {
    if (weights.size() != nvars_) throw DomainError("weight vector has the wrong length");
    std::set<long> out;
    for (const auto& [e, c] : terms_) {
      long d = 0;
      for (std::size_t j = 0; j < nvars_; ++j) d += weights[j] * e[j];
      out.insert(d);
    }
    return out;
  }

  bool is_homogeneous(const std::vector<long>& weights) const { return weighted_degrees(weights).size() <= 1; }

  MonomialPolynomial derivative(std::size_t var) const {
    if (var >= nvars_) throw DomainError("variable index out of range");
    MonomialPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      out.add_term(f, c * Coeff(e[var]));
    }
    return out;
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (point.size() != nvars_) throw DomainError("point has the wrong number of coordinates");
    Coeff out(0);
    for (const auto& [e, c] : terms_) {
      Coeff m = c;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (e[j] < 0) throw DomainError("evaluation of negative exponents is not supported");
        for (long k = 0; k < e[j]; ++k) m = m * point[j];
      }
      out = out + m;
    }
    return out;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, Coeff> terms_;
};

}  // namespace k3mcg
