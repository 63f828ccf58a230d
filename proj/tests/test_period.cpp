#include <gtest/gtest.h>

#include <random>

#include "k3mcg/period.hpp"

using namespace k3mcg;

namespace {

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> d(lo * den, hi * den);
  return make_rational(d(rng), den);
}

// x rational, y = r * sqrt(s) for a few square-free s.
HPoint random_point(std::mt19937_64& rng) {
  static const long fields[] = {1, 2, 3, 5};
  const Rational x = random_rational(rng, -3, 3, 7);
  Rational r = random_rational(rng, 1, 3, 5);
  const long s = fields[rng() % 4];
  return {QN(x), s == 1 ? QN(r) : QN(Rational(0), r, Integer(s))};
}

}  // namespace

TEST(Period, ParamIsIsotropicWithNorm4ny2) {
  std::mt19937_64 rng(1);
  for (long n : {1, 2, 3}) {
    for (int i = 0; i < 100; ++i) {
      const HPoint z = random_point(rng);
      const PeriodVector v = param(n, z);
      ASSERT_TRUE(pair_complex(v, v).is_zero());
      const ComplexQN h = pair_complex(v, v.conjugate());
      ASSERT_EQ(h.re, QN(4 * n) * z.y() * z.y());
      ASSERT_TRUE(h.im.is_zero());
      ASSERT_TRUE(is_in_Q(v));
      ASSERT_TRUE(is_in_P(v));
    }
  }
}

TEST(Period, UpperHalfPlaneIsEnforced) {
  EXPECT_THROW(HPoint(QN(0), QN(0)), DomainError);
  EXPECT_THROW(HPoint(QN(0), QN(Rational(0), Rational(-1), Integer(2))), DomainError);
}

TEST(Period, PuncturesMatchDivisibilityScan) {
  for (long n : {1, 2}) {
    const auto ps = punctures_in_box(n, 10, 10);
    std::size_t expect = 0;
    for (long b = 1; b <= 10; ++b)
      for (long c = -10; c <= 10; ++c) expect += (n * c * c + 1) % b == 0;
    EXPECT_EQ(ps.size(), expect);
    for (const auto& p : ps) {
      const LatticeVector delta = root_from_puncture(p);
      EXPECT_EQ(pair(delta, delta), -2);
      EXPECT_EQ(puncture_from_root(n, delta), p);
      EXPECT_EQ(puncture_from_root(n, -delta), p);
    }
  }
  EXPECT_THROW(make_puncture(1, 3, 1), DomainError);  // 3 does not divide 2
  EXPECT_EQ(make_puncture(1, 2, 1).point().x(), QN(Rational(1, 2)));
  EXPECT_EQ(make_puncture(2, 1, 0).point().y(), sqrt_rational(Rational(1, 2)));
}

TEST(Period, DegenerateRootsAreReported) {
  const Lattice l = hyperbolic_plus_2n(1);
  EXPECT_THROW(puncture_from_root(1, LatticeVector(l, {1, 0, 0})), DomainError);  // not a root
  // b = 0 forces 2n c^2 = -2, impossible; a rank-3 root with b = 0 does not exist,
  // so every root in the box maps to a puncture.
  const BijectionReport r = roots_punctures_bijection_check(1, 10, 10, 10);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.degenerate_roots, 0u);
  EXPECT_GT(r.roots_checked, 0u);
  EXPECT_TRUE(roots_punctures_bijection_check(2, 10, 10, 10).ok());
}

TEST(Period, ConformalizeLandsInQ) {
  std::mt19937_64 rng(2);
  const Lattice l = hyperbolic_plus_2n(1);
  int tested = 0;
  for (int i = 0; i < 300 && tested < 100; ++i) {
    std::vector<QN> re, im;
    for (int k = 0; k < 3; ++k) {
      re.emplace_back(random_rational(rng, -4, 4, 3));
      im.emplace_back(random_rational(rng, -4, 4, 3));
    }
    const PeriodVector v(l, re, im);
    if (!is_in_P(v)) continue;
    ++tested;
    const Conformalized c = conformalize(v);
    ASSERT_TRUE(is_in_Q(c));
    ASSERT_EQ(c.frame.re, v.re);
    if (c.exact) ASSERT_TRUE(is_in_Q(*c.exact));
  }
  EXPECT_GT(tested, 20);
}

TEST(Period, ComponentsAreSeparatedByConjugation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const PeriodVector v = param(2, random_point(rng));
    EXPECT_TRUE(in_positive_component(2, v));
    EXPECT_FALSE(in_positive_component(2, v.conjugate()));
  }
}

TEST(Period, RetractionIsIdempotentAndKeepsPositivePlanes) {
  std::mt19937_64 rng(4);
  const Lattice l = direct_sum(hyperbolic_plus_2n(1), Lattice(IntMatrix{{-2}}));
  const IntMatrix sub{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  const IntMatrix comp{{0, 0, 0, 1}};
  int positive = 0;
  for (int i = 0; i < 500; ++i) {
    const PeriodVector p = param(1, random_point(rng));
    std::vector<QN> re = p.re, im = p.im;
    re.emplace_back(random_rational(rng, -1, 1, 4));
    im.emplace_back(random_rational(rng, -1, 1, 4));
    const PeriodVector v(l, re, im);
    const Retraction r = retract_to_sublattice(v, sub, comp);
    const Retraction again = retract_to_sublattice(r.ambient, sub, comp);
    ASSERT_EQ(again.ambient, r.ambient);
    const std::vector<QN> e4{QN(0), QN(0), QN(0), QN(1)};
    ASSERT_TRUE(pair_qn(l, r.ambient.re, e4).is_zero());
    ASSERT_TRUE(pair_qn(l, r.ambient.im, e4).is_zero());
    if (is_in_P(v)) {
      ++positive;
      ASSERT_TRUE(is_in_P(r.ambient));
      ASSERT_TRUE(is_in_P(r.in_sublattice));
    }
  }
  EXPECT_GT(positive, 100);
  EXPECT_THROW(retract_to_sublattice(param(1, HPoint(QN(0), QN(1))), IntMatrix{{1, 0, 0}}, IntMatrix{{0, 1, 0}}),
               DomainError);
}

TEST(Period, K0ConstructedWitness) {
  const Lattice k3 = make_standard(StandardKind::K3);
  std::vector<QN> re(22), im(22);
  re[2] = 1;
  re[3] = 1;
  im[4] = 1;
  im[5] = 1;
  const PeriodVector omega(k3, re, im);
  IntVector k(22, 0);
  k[0] = k[1] = 1;
  const LatticeVector kappa(k3, k);
  const K0Verdict v = is_in_K0_bounded(omega, kappa, 1);
  EXPECT_FALSE(v.passes);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(pair(*v.witness, *v.witness), -2);
  EXPECT_EQ(pair(*v.witness, kappa), 0);
  EXPECT_TRUE(is_in_K0_bounded(omega, kappa, 0).passes);
  EXPECT_THROW(is_in_K0_bounded(omega, LatticeVector(k3, IntVector(22, 0)), 1), DomainError);
}

// Brute force over the sup-norm box on U^3 + <-2>.
TEST(Period, K0AgreesWithBoxScan) {
  std::mt19937_64 rng(9);
  const Lattice u = make_standard(StandardKind::U);
  const Lattice l = direct_sum(direct_sum(direct_sum(u, u), u), Lattice(IntMatrix{{-2}}));
  const LatticeVector kappa(l, {1, 1, 0, 0, 0, 0, 0});
  int fails = 0, passes = 0;
  for (int trial = 0; trial < 30; ++trial) {
    // re = (t, -t, 1, a, 0, 0, w), im = (0, 0, 0, 0, 1, b, 0) with (re, re) = (im, im).
    const Rational t = trial % 3 == 0 ? Rational(0) : random_rational(rng, -1, 1, 3);
    const Rational w = trial % 5 == 0 ? Rational(0) : random_rational(rng, -1, 1, 3);
    const Rational a = trial % 4 == 1 ? Rational(3) : Rational(3 + random_rational(rng, 0, 2, 4));
    const Rational b = a - t * t - w * w;
    const std::vector<QN> re{QN(t), QN(Rational(-t)), QN(1), QN(a), QN(0), QN(0), QN(w)};
    const std::vector<QN> im{QN(0), QN(0), QN(0), QN(0), QN(1), QN(b), QN(0)};
    const PeriodVector omega(l, re, im);
    ASSERT_TRUE(is_in_Q(omega));
    const long h = 2;
    std::optional<IntVector> expect;
    IntVector d(7);
    const std::function<void(std::size_t)> scan = [&](std::size_t i) {
      if (expect) return;
      if (i == 7) {
        const LatticeVector delta(l, d);
        if (pair(delta, delta) != -2 || pair(delta, kappa) != 0) return;
        const std::vector<QN> dq(d.begin(), d.end());
        if (pair_qn(l, re, dq).is_zero() && pair_qn(l, im, dq).is_zero()) expect = d;
        return;
      }
      for (long x = -h; x <= h; ++x) {
        d[i] = x;
        scan(i + 1);
      }
    };
    scan(0);
    const K0Verdict v = is_in_K0_bounded(omega, kappa, h);
    ASSERT_EQ(v.passes, !expect) << "trial " << trial;
    if (expect) {
      ASSERT_EQ(v.witness->coords(), *expect);
      ++fails;
    } else {
      ++passes;
    }
  }
  EXPECT_GT(fails, 0);
  EXPECT_GT(passes, 0);
}
