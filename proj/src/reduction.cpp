#include "k3mcg/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace k3mcg {

namespace {

// Row op on the basis: b_k -= q b_j, keeping the exact Gram in step.
void reduce_row(IntMatrix& t, IntMatrix& g, std::size_t k, std::size_t j, const Integer& q) {
  const std::size_t n = g.rows();
  for (std::size_t c = 0; c < t.cols(); ++c) t(k, c) -= q * t(j, c);
  const Integer gkk = g(k, k) - 2 * q * g(k, j) + q * q * g(j, j);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    g(k, i) -= q * g(j, i);
    g(i, k) = g(k, i);
  }
  g(k, k) = gkk;
}

void swap_basis(IntMatrix& t, IntMatrix& g, std::size_t a, std::size_t b) {
  t.swap_rows(a, b);
  g.swap_rows(a, b);
  g.swap_cols(a, b);
}

}  // namespace

IntMatrix lll_transform(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix t = IntMatrix::identity(n);
  IntMatrix g = gram;
  if (n < 2) return t;
  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
  std::vector<double> bstar(n, 0.0);

  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = g(k, j).get_d();
      for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[k][l] * bstar[l];
      mu[k][j] = s / bstar[j];
    }
    double s = g(k, k).get_d();
    for (std::size_t l = 0; l < k; ++l) s -= mu[k][l] * mu[k][l] * bstar[l];
    bstar[k] = s;
  };

  gso_row(0);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n && guard++ < 100000) {
    gso_row(k);
    for (std::size_t j = k; j-- > 0;) {
      const double q = std::nearbyint(mu[k][j]);
      if (q == 0.0) continue;
      reduce_row(t, g, k, j, Integer(static_cast<long>(q)));
      gso_row(k);
    }
    if (bstar[k] < (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      swap_basis(t, g, k, k - 1);
      gso_row(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return t;
}

bool is_positive_definite(const RatMatrix& input) {
  RatMatrix a = input;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

std::vector<IntVector> vectors_of_norm(const IntMatrix& gram, const Integer& norm) {
  const std::size_t n = gram.rows();
  if (!is_positive_definite(to_rational(gram))) throw DomainError("form is not positive definite");
  if (norm < 0) return {};
  const IntMatrix t = lll_transform(gram);
  const IntMatrix reduced = t * gram * t.transpose();

  // Q(y) = sum_i d_i (y_i + sum_{j>i} m_ij y_j)^2, enumerated from the last coordinate down.
  RatMatrix a = to_rational(reduced);
  std::vector<Rational> d(n);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = a(i, j) / d[i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c) a(r, c) -= m(i, r) * d[i] * m(i, c);
  }

  std::vector<IntVector> found;
  IntVector y(n, Integer(0));
  const Rational target(norm);

  auto recurse = [&](auto&& self, std::size_t i, const Rational& used) -> void {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center += m(i, j) * y[j];
    const Rational budget = target - used;
    auto cost = [&](const Integer& x) -> Rational {
      const Rational u = Rational(x) + center;
      return d[i] * u * u;
    };
    const Integer start = floor_div(-center.get_num(), center.get_den());
    auto visit = [&](const Integer& x) {
      y[i] = x;
      const Rational total = used + cost(x);
      if (i == 0) {
        if (total == target) found.push_back(y);
      } else {
        self(self, i - 1, total);
      }
    };
    for (Integer x = start; cost(x) <= budget; --x) visit(x);
    for (Integer x = start + 1; cost(x) <= budget; ++x) visit(x);
    y[i] = 0;
  };
  if (n > 0) recurse(recurse, n - 1, Rational(0));

  // Back to the caller's coordinates: x = T^T y.
  const IntMatrix tt = t.transpose();
  std::vector<IntVector> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(tt.apply(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3mcg
