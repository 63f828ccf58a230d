#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3mcg/lattice.hpp"
#include "k3mcg/period.hpp"

namespace k3mcg {

using Mat2 = std::array<Integer, 4>;  // (a, b, c, d) row-major

/// Element of the Fricke group Gamma_0^+(n) in PSL(2, R).
///
/// Represents m when fricke is false and m * W_n when true, where
/// W_n = ((0, -1), (n, 0)) / sqrt(n). Always det m = 1 and n | c. The matrix is
/// sign-normalized (first nonzero entry positive); for n = 1 the involution is
/// absorbed into m, so equality of elements is equality of representations.
class FrickeElement {
 public:
  FrickeElement(long n, Mat2 m, bool fricke = false);

  static FrickeElement identity(long n) { return {n, {1, 0, 0, 1}}; }
  /// z -> z + 1
  static FrickeElement translation(long n) { return {n, {1, 1, 0, 1}}; }
  /// z -> -1/(n z)
  static FrickeElement involution(long n) { return {n, {1, 0, 0, 1}, true}; }
  /// ((0,-1),(1,0)); level 1 only.
  static FrickeElement inversion() { return {1, {0, -1, 1, 0}}; }

  long level() const { return n_; }
  const Mat2& matrix() const { return m_; }
  bool fricke() const { return fricke_; }

  FrickeElement inverse() const;
  std::string to_string() const;

  friend bool operator==(const FrickeElement&, const FrickeElement&) = default;

 private:
  void normalize();

  long n_;
  Mat2 m_;
  bool fricke_;
};

/// Conjugation by the Fricke involution: W m W^{-1} = ((d, -c/n), (-n b, a)).
Mat2 fricke_conjugate(long n, const Mat2& m);

FrickeElement fricke_compose(const FrickeElement& g, const FrickeElement& h);
HPoint fricke_act(const FrickeElement& g, const HPoint& z);

/// Integral isometry of U + <2n> intertwining the Mobius action with param.
IntMatrix fricke_to_isometry(const FrickeElement& g);

/// Default generators: {T, S} for n = 1, {T, W_n} otherwise.
std::vector<FrickeElement> default_generators(long n);

struct OrbitReport {
  long n = 0;
  long height = 0;
  long slack = 4;
  std::size_t classes = 0;
  std::size_t reached = 0;
  std::vector<IntVector> unreached;
  std::size_t explored = 0;
  bool transitive() const { return unreached.empty(); }
};

/// Breadth-first search from the class of (-1, 1, 0) over root classes of
/// U + <2n>; intermediate roots may reach sup-norm slack * height.
OrbitReport orbit_transitivity_check(long n, const std::vector<FrickeElement>& generators, long height, long slack = 4);

}  // namespace k3mcg
