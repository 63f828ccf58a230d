#include <gtest/gtest.h>

#include <random>

#include "k3mcg/mirror.hpp"
#include "k3mcg/subdivision.hpp"
#include "k3mcg/verify.hpp"
#include "oracles.hpp"

using namespace k3mcg;

namespace {

const std::vector<std::vector<long>> kQuartic{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
const std::vector<std::vector<long>> kSextic{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}};

LatticePolytope make(const std::vector<std::vector<long>>& vs) {
  std::vector<IntVector> pts;
  for (const auto& v : vs) pts.emplace_back(v.begin(), v.end());
  return LatticePolytope(pts);
}

std::vector<IntVector> sorted(std::vector<std::vector<long>> vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QN> generic_weights(std::mt19937_64& rng, const std::vector<IntVector>& points) {
  std::uniform_int_distribution<long> r(0, 1000);
  std::vector<QN> out;
  for (const auto& k : points) {
    Integer norm = 0;
    for (const auto& x : k) norm += x * x;
    out.emplace_back(Rational(1) + Rational(norm, 100) + Rational(r(rng), 10000000));
  }
  return out;
}

}  // namespace

TEST(Polytope, SimplexDualsAreVerbatim) {
  EXPECT_EQ(polar_dual(make(kQuartic)).vertices(), sorted({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}}));
  EXPECT_EQ(polar_dual(make(kSextic)).vertices(), sorted({{5, -1, -1}, {-1, 5, -1}, {-1, -1, 1}, {-1, -1, -1}}));
}

TEST(Polytope, PolarDualityIsAnInvolution) {
  const std::vector<std::vector<std::vector<long>>> corpus{
      kQuartic,
      kSextic,
      {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}},
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
  };
  for (const auto& vs : corpus) {
    const LatticePolytope p = make(vs);
    ASSERT_TRUE(p.is_reflexive());
    EXPECT_EQ(polar_dual(polar_dual(p)), p);
  }
  EXPECT_EQ(polar_dual(make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})).vertices().size(), 4u);
  EXPECT_FALSE(make({{2, 0}, {-1, 0}, {0, 1}, {0, -1}}).is_reflexive());
  EXPECT_THROW(polar_dual(make({{2, 0}, {-1, 0}, {0, 1}, {0, -1}})), DomainError);
}

TEST(Polytope, CensusMatchesBoxScan) {
  for (const auto* delta : {&kQuartic, &kSextic}) {
    const oracle::Census expect = oracle::dual_census(*delta);
    const PointClassification got = lattice_points_by_face(polar_dual(make(*delta)));
    EXPECT_EQ(got.total(), expect.total);
    EXPECT_EQ(got.interior.size(), expect.interior);
    EXPECT_EQ(got.facet_interior.size(), expect.facet_interior);
    EXPECT_EQ(got.edge_interior.size(), expect.edge_interior);
    EXPECT_EQ(got.vertices.size(), expect.vertices);
    std::vector<IntVector> low;
    for (const auto& v : expect.boundary_low_dim) low.emplace_back(v.begin(), v.end());
    std::sort(low.begin(), low.end());
    auto x = xi0(polar_dual(make(*delta)));
    std::sort(x.begin(), x.end());
    EXPECT_EQ(x, low);
  }
  const oracle::Census q = oracle::dual_census(kQuartic), s = oracle::dual_census(kSextic);
  EXPECT_EQ(q.total, 35u);
  EXPECT_EQ(q.facet_interior, 12u);
  EXPECT_EQ(s.total, 39u);
  EXPECT_EQ(s.facet_interior, 16u);
  EXPECT_EQ(q.boundary_low_dim.size(), 22u);
}

TEST(Polytope, SmallestFaceAgreesWithBruteForce) {
  const LatticePolytope p = polar_dual(make(kSextic));
  for (const auto& x : p.lattice_points()) {
    oracle::QMat tight;
    for (const auto& f : p.facets()) {
      Integer s = f.offset;
      for (std::size_t i = 0; i < 3; ++i) s += f.normal[i] * x[i];
      if (s == 0) tight.push_back({f.normal[0], f.normal[1], f.normal[2]});
    }
    EXPECT_EQ(smallest_face_dim(p, x), 3 - oracle::rank(tight)) << to_string(x);
  }
}

TEST(Polytope, SquareExamples) {
  const LatticePolytope square = make({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  EXPECT_EQ(xi0(square).size(), 8u);
  EXPECT_EQ(square.lattice_points().size(), 9u);
}

TEST(Polytope, PicardRanksFromHandFormula) {
  // l(Delta°) - 4 - sum over facets of interior points; the dual edges have no
  // interior points for both simplices, so the correction term vanishes.
  for (const auto* delta : {&kQuartic, &kSextic}) {
    const oracle::Census c = oracle::dual_census(*delta);
    EXPECT_EQ(batyrev_picard_rank(make(*delta)), static_cast<long>(c.total - 4 - c.facet_interior));
  }
  EXPECT_EQ(batyrev_picard_rank(make(kQuartic)), 19);
  EXPECT_EQ(batyrev_picard_rank(make(kSextic)), 19);
  EXPECT_EQ(batyrev_picard_rank(polar_dual(make(kQuartic))), 1);
}

TEST(Subdivision, VolumesMatchEhrhart) {
  for (const auto* delta : {&kQuartic, &kSextic}) {
    const oracle::Census one = oracle::dual_census(*delta, 1), two = oracle::dual_census(*delta, 2);
    const Rational expect = oracle::ehrhart_volume(one.total, two.total, one.interior);
    const LatticePolytope pdual = polar_dual(make(*delta));
    EXPECT_EQ(polytope_volume(pdual), expect);
    std::mt19937_64 rng(5);
    const auto s = support_subdivision(pdual, generic_weights(rng, xi0(pdual)));
    EXPECT_EQ(subdivision_volume(s), expect);
  }
  EXPECT_EQ(polytope_volume(polar_dual(make(kQuartic))), Rational(32, 3));
  EXPECT_EQ(simplex_volume({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Rational(1, 6));
}

TEST(Subdivision, EqualWeightsGiveConesOverFacets) {
  for (const auto* delta : {&kQuartic, &kSextic}) {
    const LatticePolytope d = make(*delta), pdual = polar_dual(d);
    const std::vector<QN> ones(xi0(pdual).size(), QN(1));
    const auto s = support_subdivision(pdual, ones);
    EXPECT_EQ(s.cells.size(), pdual.facets().size());
    EXPECT_EQ(subdivision_volume(s), polytope_volume(pdual));
    const StarVerdict v = check_condition_star(d, ones);
    EXPECT_FALSE(v.pass);
    EXPECT_NE(v.reason.find("non-simplicial"), std::string::npos) << v.reason;
  }
  const LatticePolytope pdual = polar_dual(make(kQuartic));
  EXPECT_THROW(support_subdivision(pdual, std::vector<QN>(3, QN(1))), DomainError);
  EXPECT_THROW(support_subdivision(pdual, std::vector<QN>(22, QN(-1))), DomainError);
  // Flat lift: allowed for the subdivision, not as Kahler weights.
  EXPECT_EQ(support_subdivision(pdual, std::vector<QN>(22, QN(0))).cells.size(), 1u);
  EXPECT_THROW(check_condition_star(make(kQuartic), std::vector<QN>(22, QN(0))), DomainError);
}

TEST(Subdivision, ConditionStarScalingAndSimpliciality) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> r(1, 300);
  int passes = 0;
  for (const auto* delta : {&kQuartic, &kSextic}) {
    const LatticePolytope d = make(*delta), pdual = polar_dual(d);
    const auto rays = xi0(pdual);
    for (int i = 0; i < 12; ++i) {
      std::vector<QN> lam;
      if (i % 2) {
        lam = generic_weights(rng, rays);
      } else {
        for (std::size_t k = 0; k < rays.size(); ++k) lam.emplace_back(make_rational(r(rng), 100));
      }
      const StarVerdict a = check_condition_star(d, lam);
      std::vector<QN> scaled;
      for (const auto& x : lam) scaled.push_back(QN(Rational(7, 3)) * x);
      const StarVerdict b = check_condition_star(d, scaled);
      ASSERT_EQ(a.pass, b.pass);
      ASSERT_EQ(a.reason, b.reason);
      ASSERT_TRUE(same_secondary_cone(d, lam, scaled));
      if (a.pass) {
        ++passes;
        const auto s = support_subdivision(pdual, lam);
        for (const auto& c : s.cells) {
          ASSERT_EQ(c.size(), 4u);
          ASSERT_TRUE(std::count(c.begin(), c.end(), s.origin()) == 1);
        }
        ASSERT_EQ(s.used_points().size(), rays.size() + 1);
      }
    }
  }
  EXPECT_GT(passes, 0);
}

TEST(Subdivision, QuadraticIrrationalWeights) {
  const LatticePolytope d = make(kQuartic), pdual = polar_dual(d);
  std::mt19937_64 rng(8);
  auto lam = generic_weights(rng, xi0(pdual));
  for (std::size_t k = 0; k < lam.size(); ++k)
    lam[k] += QN(Rational(0), Rational(static_cast<long>(k % 5), 100000), Integer(2));
  const auto s = support_subdivision(pdual, lam);
  EXPECT_EQ(subdivision_volume(s), polytope_volume(pdual));
  EXPECT_TRUE(check_condition_star(s, pdual).pass);
}

TEST(Subdivision, LowerHullOfSquareLift) {
  // Four corners of the unit square with one raised corner: two triangles.
  const std::vector<IntVector> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const auto cells = lower_hull_cells(pts, {QN(0), QN(0), QN(0), QN(1)});
  EXPECT_EQ(cells.size(), 2u);
  const auto flat = lower_hull_cells(pts, {QN(0), QN(0), QN(0), QN(0)});
  EXPECT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].size(), 4u);
}

TEST(Mirror, EquationHasOneTermPerRayPlusConstant) {
  const LatticePolytope pdual = polar_dual(make(kQuartic));
  const auto rays = xi0(pdual);
  std::vector<NovikovSeries> d;
  for (std::size_t k = 0; k < rays.size(); ++k) d.push_back(NovikovSeries::monomial(Rational(1 + k, 3)));
  const auto f = mirror_equation(pdual, d);
  EXPECT_EQ(f.size(), rays.size() + 1);
  EXPECT_EQ(f.terms().at(Exponent{0, 0, 0}), NovikovSeries::constant(-1));
  d[0] = NovikovSeries();
  EXPECT_EQ(mirror_equation(pdual, d).size(), rays.size());
  d.pop_back();
  EXPECT_THROW(mirror_equation(pdual, d), DomainError);
}

TEST(Cyclotomic, RootsOfUnity) {
  const Cyclotomic z = Cyclotomic::root_of_unity(1, 24);
  EXPECT_EQ(z.pow(24), Cyclotomic(1));
  EXPECT_EQ(z.pow(12), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::i() * Cyclotomic::i(), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 6).pow(3), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic(Gaussian(0, 1)), Cyclotomic::i());
  EXPECT_THROW(Cyclotomic::root_of_unity(1, 5), DomainError);
}

TEST(Mirror, DworkSymmetriesAndNodes) {
  const auto q = dwork_quartic(Cyclotomic(Rational(1, 3)));
  const auto group = quartic_symmetry_group();
  ASSERT_EQ(group.size(), 16u);
  EXPECT_TRUE(diagonal_invariance_check(q, {1, 1, 1, 1}, group));
  EXPECT_FALSE(diagonal_invariance_check(q, {1, 1, 1, 1}, {{{1, 0, 0, 0}, 4}}));
  // Brute force: exactly the a with sum a = 0 mod 4 (on a3 = 0) fix Q.
  for (long a0 = 0; a0 < 4; ++a0)
    for (long a1 = 0; a1 < 4; ++a1)
      for (long a2 = 0; a2 < 4; ++a2)
        EXPECT_EQ(diagonal_invariance_check(q, {1, 1, 1, 1}, {{{a0, a1, a2, 0}, 4}}), (a0 + a1 + a2) % 4 == 0);

  const Cyclotomic i = Cyclotomic::i();
  EXPECT_TRUE(is_singular_at(dwork_quartic(Cyclotomic(-1)), {1, 1, 1, 1}));
  EXPECT_TRUE(is_singular_at(dwork_quartic(Cyclotomic(1)), {1, 1, 1, -1}));
  EXPECT_TRUE(is_singular_at(dwork_quartic(i), {1, 1, 1, i}));
  EXPECT_FALSE(is_singular_at(dwork_quartic(Cyclotomic(2)), {1, 1, 1, 1}));
  // A smooth fibre has no singular points among 4th roots of unity.
  const auto smooth = dwork_quartic(Cyclotomic(Rational(1, 3)));
  for (long k = 0; k < 256; ++k) {
    std::vector<Cyclotomic> pt;
    for (long j = 0, m = k; j < 4; ++j, m /= 4) pt.push_back(Cyclotomic::root_of_unity(m % 4, 4));
    ASSERT_FALSE(is_singular_at(smooth, pt));
  }
  EXPECT_THROW(is_singular_at(smooth, {0, 0, 0, 0}), DomainError);
}

TEST(Mirror, DoublePlaneSymmetries) {
  const auto p = double_plane_sextic(Cyclotomic(Rational(2, 5)));
  EXPECT_TRUE(p.is_homogeneous({1, 1, 1, 3}));
  EXPECT_TRUE(diagonal_invariance_check(p, {1, 1, 1, 3}, double_plane_symmetry_generators()));
  EXPECT_FALSE(diagonal_invariance_check(p, {1, 1, 1, 3}, {{{1, 0, 0, 0}, 6}}));
  EXPECT_THROW(diagonal_invariance_check(p, {1, 1, 1, 1}, double_plane_symmetry_generators()), DomainError);
}
