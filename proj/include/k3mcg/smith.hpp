#pragma once

#include "k3mcg/matrix.hpp"

namespace k3mcg {

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries d_0 | d_1 | ... positive.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& input);

/// Saturated basis (as rows) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as rows) of the saturation of the row span of `rows` in Z^n.
IntMatrix saturate_rows(const IntMatrix& rows);

}  // namespace k3mcg
