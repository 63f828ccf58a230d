#include "k3mcg/smith.hpp"

#include <utility>

namespace k3mcg {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Row op: row_i -= q * row_j, mirrored into the left transform.
void row_axpy(SmithForm& f, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < f.diagonal.cols(); ++c) f.diagonal(i, c) -= q * f.diagonal(j, c);
  for (std::size_t c = 0; c < f.left.cols(); ++c) f.left(i, c) -= q * f.left(j, c);
}

// Column op: col_i -= q * col_j. right gets the same column op; right_inverse
// gets the inverse row op (row_j += q * row_i).
void col_axpy(SmithForm& f, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < f.diagonal.rows(); ++r) f.diagonal(r, i) -= q * f.diagonal(r, j);
  for (std::size_t r = 0; r < f.right.rows(); ++r) f.right(r, i) -= q * f.right(r, j);
  for (std::size_t c = 0; c < f.right_inverse.cols(); ++c) f.right_inverse(j, c) += q * f.right_inverse(i, c);
}

void swap_rows(SmithForm& f, std::size_t a, std::size_t b) {
  f.diagonal.swap_rows(a, b);
  f.left.swap_rows(a, b);
}

void swap_cols(SmithForm& f, std::size_t a, std::size_t b) {
  f.diagonal.swap_cols(a, b);
  f.right.swap_cols(a, b);
  f.right_inverse.swap_rows(a, b);
}

void negate_row(SmithForm& f, std::size_t r) {
  for (std::size_t c = 0; c < f.diagonal.cols(); ++c) f.diagonal(r, c) = -f.diagonal(r, c);
  for (std::size_t c = 0; c < f.left.cols(); ++c) f.left(r, c) = -f.left(r, c);
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm f;
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  f.diagonal = input;
  f.left = IntMatrix::identity(m);
  f.right = IntMatrix::identity(n);
  f.right_inverse = IntMatrix::identity(n);

  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c) {
        const Integer& x = f.diagonal(r, c);
        if (x == 0) continue;
        if (!found || abs_value(x) < best) {
          found = true;
          best = abs_value(x);
          pr = r;
          pc = c;
        }
      }
    if (!found) break;
    swap_rows(f, t, pr);
    swap_cols(f, t, pc);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (f.diagonal(r, t) == 0) continue;
        row_axpy(f, r, t, floor_div(f.diagonal(r, t), f.diagonal(t, t)));
        if (f.diagonal(r, t) != 0) {
          swap_rows(f, t, r);
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (f.diagonal(t, c) == 0) continue;
        col_axpy(f, c, t, floor_div(f.diagonal(t, c), f.diagonal(t, t)));
        if (f.diagonal(t, c) != 0) {
          swap_cols(f, t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility of the trailing block by the pivot.
      for (std::size_t r = t + 1; r < m && !dirty; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (f.diagonal(r, c) % f.diagonal(t, t) != 0) {
            row_axpy(f, t, r, Integer(-1));
            dirty = true;
            break;
          }
    }
    if (f.diagonal(t, t) < 0) negate_row(f, t);
    ++t;
  }
  f.rank = t;
  return f;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix basis(n - f.rank, n);
  for (std::size_t j = f.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(j - f.rank, i) = f.right(i, j);
  return basis;
}

IntMatrix saturate_rows(const IntMatrix& rows) {
  const SmithForm f = smith_normal_form(rows);
  IntMatrix basis(f.rank, rows.cols());
  for (std::size_t i = 0; i < f.rank; ++i)
    for (std::size_t c = 0; c < rows.cols(); ++c) basis(i, c) = f.right_inverse(i, c);
  return basis;
}

}  // namespace k3mcg
