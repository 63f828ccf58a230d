#include "k3mcg/mirror.hpp"

#include <algorithm>

namespace k3mcg {

CyclotomicPolynomial dwork_quartic(const Cyclotomic& lambda) {
  CyclotomicPolynomial f(4);
  f.add_term({4, 0, 0, 0}, 1);
  f.add_term({0, 4, 0, 0}, 1);
  f.add_term({0, 0, 4, 0}, 1);
  f.add_term({0, 0, 0, 4}, 1);
  f.add_term({1, 1, 1, 1}, Cyclotomic(4) * lambda);
  return f;
}

CyclotomicPolynomial double_plane_sextic(const Cyclotomic& lambda) {
  CyclotomicPolynomial f(4);
  f.add_term({6, 0, 0, 0}, 1);
  f.add_term({0, 6, 0, 0}, 1);
  f.add_term({0, 0, 6, 0}, 1);
  f.add_term({0, 0, 0, 2}, 1);
  f.add_term({1, 1, 1, 1}, lambda);
  return f;
}

bool diagonal_invariance_check(const CyclotomicPolynomial& f, const std::vector<long>& weights,
                               const std::vector<DiagonalElement>& elements) {
  if (!f.is_homogeneous(weights)) throw DomainError("polynomial is not homogeneous for the declared weights");
  for (const DiagonalElement& g : elements) {
    if (g.exponents.size() != f.nvars()) throw DomainError("group element has the wrong number of exponents");
    if (g.order < 1) throw DomainError("group element order must be positive");
    bool first = true;
    long character = 0;
    for (const auto& [e, c] : f.terms()) {
      long s = 0;
      for (std::size_t j = 0; j < e.size(); ++j) s += g.exponents[j] * e[j];
      s = ((s % g.order) + g.order) % g.order;
      if (first) {
        character = s;
        first = false;
      } else if (s != character) {
        return false;
      }
    }
  }
  return true;
}

std::vector<DiagonalElement> quartic_symmetry_group() {
  std::vector<DiagonalElement> out;
  for (long a0 = 0; a0 < 4; ++a0)
    for (long a1 = 0; a1 < 4; ++a1) out.push_back({{a0, a1, (8 - a0 - a1) % 4, 0}, 4});
  return out;
}

std::vector<DiagonalElement> double_plane_symmetry_generators() { return {{{1, 5, 0, 0}, 6}, {{3, 0, 0, 3}, 6}}; }

bool is_singular_at(const CyclotomicPolynomial& f, const std::vector<Cyclotomic>& point) {
  if (std::all_of(point.begin(), point.end(), [](const Cyclotomic& x) { return x.is_zero(); }))
    throw DomainError("the zero vector is not a projective point");
  if (!f.evaluate(point).is_zero()) return false;
  for (std::size_t j = 0; j < f.nvars(); ++j)
    if (!f.derivative(j).evaluate(point).is_zero()) return false;
  return true;
}

}  // namespace k3mcg
