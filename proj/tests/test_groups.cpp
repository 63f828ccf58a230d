#include <gtest/gtest.h>

#include <random>
#include <set>

#include "k3mcg/free_product.hpp"
#include "k3mcg/fricke.hpp"
#include "k3mcg/stacky.hpp"
#include "oracles.hpp"

using namespace k3mcg;

namespace {

FrickeElement random_word(std::mt19937_64& rng, long n, int length) {
  const auto gens = default_generators(n);
  FrickeElement g = FrickeElement::identity(n);
  for (int i = 0; i < length; ++i) {
    const FrickeElement& x = gens[rng() % gens.size()];
    g = fricke_compose(g, rng() % 2 ? x : x.inverse());
  }
  return g;
}

FreeProductWord random_free_word(std::mt19937_64& rng, std::int64_t p, int length) {
  std::uniform_int_distribution<std::int64_t> e(-3, 3);
  std::vector<FreeProductWord::Letter> letters;
  for (int i = 0; i < length; ++i)
    letters.push_back({rng() % 2 ? FreeProductWord::Tag::T : FreeProductWord::Tag::S, e(rng)});
  return {0, p, letters};
}

bool projectively_equal(const IntMatrix& a, const IntMatrix& b) { return a == b || a == -b; }

// M param(z) must be a complex multiple of param(g z); param's middle entry is 1.
bool intertwines(const FrickeElement& g, const HPoint& z) {
  const long n = g.level();
  const PeriodVector v = param(n, z), w = param(n, fricke_act(g, z));
  const IntMatrix m = fricke_to_isometry(g);
  std::vector<ComplexQN> mv(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mv[i] = mv[i] + ComplexQN{QN(m(i, j)), QN(0)} * ComplexQN{v.re[j], v.im[j]};
  const ComplexQN scale = mv[1];
  if (scale.is_zero()) return false;
  for (std::size_t i = 0; i < 3; ++i)
    if (!(mv[i] == scale * ComplexQN{w.re[i], w.im[i]})) return false;
  return true;
}

}  // namespace

TEST(Fricke, ElementsValidateLevelAndDeterminant) {
  EXPECT_NO_THROW(FrickeElement(2, {1, 0, 2, 1}));
  EXPECT_THROW(FrickeElement(2, {1, 0, 1, 1}), DomainError);  // n does not divide c
  EXPECT_THROW(FrickeElement(1, {2, 0, 0, 1}), DomainError);  // det != 1
  EXPECT_EQ(FrickeElement(1, {-1, 0, 0, -1}), FrickeElement::identity(1));
  const FrickeElement w = FrickeElement::involution(2);
  EXPECT_EQ(fricke_compose(w, w), FrickeElement::identity(2));
}

TEST(Fricke, ImagesAreIsometriesTrivialOnDiscriminant) {
  std::mt19937_64 rng(21);
  for (long n : {1, 2, 3, 5}) {
    const Lattice l = hyperbolic_plus_2n(n);
    for (int i = 0; i < 200; ++i) {
      const IntMatrix m = fricke_to_isometry(random_word(rng, n, 1 + i % 8));
      ASSERT_TRUE(is_isometry(l, m));
      ASSERT_TRUE(acts_trivially_on_discriminant(l, m));
    }
  }
}

TEST(Fricke, RepresentationIsProjectiveHomomorphism) {
  std::mt19937_64 rng(22);
  for (long n : {1, 2, 3}) {
    for (int i = 0; i < 500; ++i) {
      const FrickeElement g = random_word(rng, n, 1 + i % 6), h = random_word(rng, n, 1 + i % 5);
      ASSERT_TRUE(projectively_equal(fricke_to_isometry(fricke_compose(g, h)), fricke_to_isometry(g) * fricke_to_isometry(h)))
          << g.to_string() << " * " << h.to_string();
      ASSERT_EQ(fricke_compose(g, g.inverse()), FrickeElement::identity(n));
    }
  }
}

TEST(Fricke, ActionIntertwinesWithParam) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (long n : {1, 2}) {
    for (int i = 0; i < 100; ++i) {
      const HPoint z(QN(make_rational(num(rng), den(rng))), QN(make_rational(1 + std::abs(num(rng)), den(rng))));
      const FrickeElement g = random_word(rng, n, 1 + i % 6);
      ASSERT_TRUE(intertwines(g, z)) << g.to_string();
      // Action composes: (g h) z = g (h z).
      const FrickeElement h = random_word(rng, n, 2);
      ASSERT_EQ(fricke_act(fricke_compose(g, h), z), fricke_act(g, fricke_act(h, z)));
    }
  }
}

TEST(Fricke, OrbitCheckCoversBruteForceClassCount) {
  for (long n : {1, 2}) {
    const long height = 6;
    std::set<std::vector<long>> classes;
    for (long a = -height; a <= height; ++a)
      for (long b = -height; b <= height; ++b)
        for (long c = -height; c <= height; ++c) {
          if (2 * a * b + 2 * n * c * c != -2) continue;
          std::vector<long> v{a, b, c};
          const long first = a != 0 ? a : b != 0 ? b : c;
          if (first < 0)
            for (auto& x : v) x = -x;
          classes.insert(v);
        }
    const OrbitReport r = orbit_transitivity_check(n, default_generators(n), height);
    EXPECT_EQ(r.classes, classes.size());
    EXPECT_EQ(r.reached + r.unreached.size(), r.classes);
    EXPECT_TRUE(r.transitive());
  }
  // T alone cannot move the base root far.
  const OrbitReport partial = orbit_transitivity_check(2, {FrickeElement::translation(2)}, 6);
  EXPECT_FALSE(partial.transitive());
  EXPECT_THROW(orbit_transitivity_check(2, {}, 6), DomainError);
}

TEST(FreeProduct, NormalFormAndParsing) {
  const FreeProductWord w = parse_word(0, 4, "t t s^3 s^2 t^-2");
  EXPECT_EQ(w.to_string(), "t^2 s^1 t^-2");
  EXPECT_TRUE(parse_word(0, 4, "s^4").is_identity());
  EXPECT_TRUE(parse_word(0, 3, "t s t^-1 s^-1 s t s^-1 t^-1").is_identity());
  EXPECT_EQ(parse_word(0, 3, "e").to_string(), "e");
  EXPECT_THROW(parse_word(0, 3, "u^2"), DomainError);
  EXPECT_THROW(parse_word(0, 3, "t^x"), DomainError);
  EXPECT_THROW(word_multiply(FreeProductWord::t(3), FreeProductWord::t(4)), DomainError);
}

TEST(FreeProduct, MultiplicationIsConfluentAndAbelianizationAdditive) {
  std::mt19937_64 rng(31);
  for (std::int64_t p : {2, 3, 4}) {
    for (int i = 0; i < 300; ++i) {
      const auto u = random_free_word(rng, p, 5), v = random_free_word(rng, p, 5), w = random_free_word(rng, p, 5);
      ASSERT_EQ(word_multiply(word_multiply(u, v), w), word_multiply(u, word_multiply(v, w)));
      ASSERT_TRUE(word_multiply(u, u.inverse()).is_identity());
      const Abelianization a = abelianize(u), b = abelianize(v), ab = abelianize(word_multiply(u, v));
      ASSERT_EQ(ab.first, a.first + b.first);
      ASSERT_EQ(ab.second, mod_nonneg(a.second + b.second, Integer(p)));
    }
  }
}

TEST(FreeProduct, ProjectionKillsConjugatesOfTSquared) {
  std::mt19937_64 rng(32);
  for (std::int64_t p : {3, 4}) {
    const FreeProductWord t2 = FreeProductWord::t(p, 2);
    EXPECT_TRUE(project_to_z2_free_product(t2).is_identity());
    for (int i = 0; i < 100; ++i) {
      const auto w = random_free_word(rng, p, 6);
      ASSERT_TRUE(project_to_z2_free_product(word_multiply(word_multiply(w, t2), w.inverse())).is_identity());
    }
    const FreeProductWord s = project_to_z2_free_product(FreeProductWord::s(p));
    for (std::int64_t k = 1; k < p; ++k) EXPECT_FALSE(word_power(s, k).is_identity());
    EXPECT_TRUE(word_power(s, p).is_identity());
  }
}

TEST(FreeProduct, ObstructionsAgreeWithBruteForce) {
  for (std::int64_t p : {1, 2, 3, 4, 5, 6}) {
    const GenerationVerdict g = dehn_twist_generation_obstruction(p, {FreeProductWord::t(p)});
    EXPECT_EQ(g.can_generate, p == 1);
    for (long first = -6; first <= 6; ++first)
      for (long second = 0; second < p; ++second)
        ASSERT_EQ(cube_root_obstruction(p, {first, second}), oracle::has_cube_root(first, second, p))
            << "p=" << p << " (" << first << "," << second << ")";
  }
  const FreeProductWord dehn = FreeProductWord::t(4);
  EXPECT_EQ(abelianize(dehn), (Abelianization{1, 0}));
  EXPECT_FALSE(cube_root_obstruction(3, abelianize(dehn)));
  EXPECT_FALSE(cube_root_obstruction(4, abelianize(dehn)));
  EXPECT_THROW(dehn_twist_generation_obstruction(4, {FreeProductWord::s(4)}), DomainError);
  // Conjugates of t also abelianize to (1, 0).
  const FreeProductWord conj = parse_word(0, 4, "s t s^-1");
  EXPECT_FALSE(dehn_twist_generation_obstruction(4, {dehn, conj}).can_generate);
}

TEST(FreeProduct, SubstitutionChecksOrders) {
  const FreeProductWord u = parse_word(0, 3, "t^2 s");
  const FreeProductWord img = substitute(u, FreeProductWord::t(3, 2), FreeProductWord::s(3, 2));
  EXPECT_EQ(img.to_string(), "t^4 s^2");
  EXPECT_THROW(substitute(u, FreeProductWord::t(3), FreeProductWord::t(3)), DomainError);
}

TEST(Stacky, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(41);
  for (long n : {1, 2}) {
    const StackyGroup g(n, 4);
    for (int i = 0; i < 200; ++i) {
      const auto x = g.make(random_word(rng, n, 3), random_free_word(rng, 4, 3));
      const auto y = g.make(random_word(rng, n, 3), random_free_word(rng, 4, 3));
      const auto z = g.make(random_word(rng, n, 3), random_free_word(rng, 4, 3));
      ASSERT_EQ(g.compose(g.compose(x, y), z), g.compose(x, g.compose(y, z)));
      ASSERT_EQ(g.compose(g.inverse(x), x), g.identity());
      ASSERT_EQ(g.compose(x, g.inverse(x)), g.identity());
      ASSERT_EQ(g.compose(g.identity(), x), x);
    }
  }
  const StackyGroup g(2, 3);
  EXPECT_THROW(g.make(FrickeElement::identity(1), FreeProductWord(0, 3)), DomainError);
  EXPECT_THROW(g.make(FrickeElement::identity(2), FreeProductWord(0, 4)), DomainError);
}
