#pragma once

#include "k3mcg/matrix.hpp"

namespace k3mcg {

/// LLL-reduces a positive definite integral Gram matrix. Returns a unimodular
/// transform T (rows = new basis in old coordinates); T * gram * T^T is reduced.
/// Floating point only steers the reduction; T is always exactly unimodular.
IntMatrix lll_transform(const IntMatrix& gram);

/// Every x in Z^n with x^T gram x == norm, for a positive definite integral
/// gram. Exact: bounds are decided with rational arithmetic. Output is sorted
/// lexicographically.
std::vector<IntVector> vectors_of_norm(const IntMatrix& gram, const Integer& norm);

/// True iff the symmetric rational matrix is positive definite (exact LDL).
bool is_positive_definite(const RatMatrix& m);

}  // namespace k3mcg
