#pragma once

#include <vector>

#include "k3mcg/cyclotomic.hpp"
#include "k3mcg/polynomial.hpp"

namespace k3mcg {

using CyclotomicPolynomial = MonomialPolynomial<Cyclotomic>;

/// x0^4 + x1^4 + x2^4 + x3^4 + 4 lambda x0 x1 x2 x3.
CyclotomicPolynomial dwork_quartic(const Cyclotomic& lambda);
/// x0^6 + x1^6 + x2^6 + x3^2 + lambda x0 x1 x2 x3 in P(1,1,1,3).
CyclotomicPolynomial double_plane_sextic(const Cyclotomic& lambda);

/// Diagonal action x_j -> zeta_m^{a_j} x_j.
struct DiagonalElement {
  std::vector<long> exponents;
  long order;
};

/// True iff each element scales every monomial of f by the same root of
/// unity. f must be homogeneous for the given weights (DomainError otherwise).
bool diagonal_invariance_check(const CyclotomicPolynomial& f, const std::vector<long>& weights,
                               const std::vector<DiagonalElement>& elements);

/// Pi = {(a_j) mod 4 : a_3 = 0, sum = 0 mod 4}, all 16 elements.
std::vector<DiagonalElement> quartic_symmetry_group();
/// Generators (1,5,0,0) and (3,0,0,3) mod 6 of Pi' = Z/6 x Z/2.
std::vector<DiagonalElement> double_plane_symmetry_generators();

/// f and all partial derivatives vanish at the point; the point must be nonzero.
bool is_singular_at(const CyclotomicPolynomial& f, const std::vector<Cyclotomic>& point);

}  // namespace k3mcg
