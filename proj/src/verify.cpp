#include "k3mcg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "k3mcg/free_product.hpp"
#include "k3mcg/fricke.hpp"
#include "k3mcg/lattice.hpp"
#include "k3mcg/mirror.hpp"
#include "k3mcg/novikov.hpp"
#include "k3mcg/period.hpp"
#include "k3mcg/subdivision.hpp"

namespace k3mcg {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long lo, long hi, long den) { return make_rational(uniform(rng, lo * den, hi * den), den); }

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }
bool has(const std::vector<long>& v, long x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<std::pair<std::string, LatticePolytope>> examples(const VerifyProfile& p) {
  std::vector<std::pair<std::string, LatticePolytope>> out;
  if (has(p.examples, "quartic")) out.emplace_back("quartic", quartic_simplex());
  if (has(p.examples, "sextic")) out.emplace_back("sextic", sextic_simplex());
  return out;
}

FrickeElement random_word(Rng& rng, long n, int max_len) {
  const FrickeElement t = FrickeElement::translation(n);
  const FrickeElement letters[3] = {t, t.inverse(), n == 1 ? FrickeElement::inversion() : FrickeElement::involution(n)};
  FrickeElement g = FrickeElement::identity(n);
  const long len = uniform(rng, 1, max_len);
  for (long i = 0; i < len; ++i) g = fricke_compose(g, letters[uniform(rng, 0, 2)]);
  return g;
}

bool equal_up_to_sign(const IntMatrix& a, const IntMatrix& b) { return a == b || a == -b; }

std::vector<ComplexQN> apply(const IntMatrix& m, const PeriodVector& v) {
  std::vector<ComplexQN> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ComplexQN s{QN(0), QN(0)};
    for (std::size_t c = 0; c < m.cols(); ++c) s = s + ComplexQN{QN(m(r, c)), QN(0)} * ComplexQN{v.re[c], v.im[c]};
    out.push_back(s);
  }
  return out;
}

// ---- criteria --------------------------------------------------------------

void signature_k3(const VerifyProfile&, Outcome& o) {
  const Signature s = signature(make_standard(StandardKind::K3));
  o.detail << "signature (" << s.positive << "," << s.negative << ")";
  o.require(s == Signature{3, 19}, "K3 lattice signature");
}

void polar_duals(const VerifyProfile& p, Outcome& o) {
  const std::vector<IntVector> quartic{{-1, -1, -1}, {-1, -1, 3}, {-1, 3, -1}, {3, -1, -1}};
  const std::vector<IntVector> sextic{{-1, -1, -1}, {-1, -1, 1}, {-1, 5, -1}, {5, -1, -1}};
  for (const auto& [name, delta] : examples(p)) {
    const LatticePolytope dual = polar_dual(delta);
    o.detail << name << " dual";
    for (const auto& v : dual.vertices()) o.detail << " " << to_string(v);
    o.detail << "; ";
    o.require(dual.vertices() == (name == "quartic" ? quartic : sextic), name + " dual vertices");
    o.require(polar_dual(dual) == delta, name + " duality is an involution");
  }
}

void census(const VerifyProfile& p, Outcome& o) {
  for (const auto& [name, delta] : examples(p)) {
    const auto c = lattice_points_by_face(polar_dual(delta));
    o.detail << name << ": " << c.total() << " points (" << c.interior.size() << " interior, " << c.facet_interior.size()
             << " facet-interior, " << c.edge_interior.size() << " edge-interior, " << c.vertices.size() << " vertices); ";
    const bool quartic = name == "quartic";
    o.require(c.total() == (quartic ? 35u : 39u), name + " point count");
    o.require(c.interior.size() == 1, name + " interior count");
    o.require(c.facet_interior.size() == (quartic ? 12u : 16u), name + " facet-interior count");
  }
}

void picard_ranks(const VerifyProfile& p, Outcome& o) {
  for (const auto& [name, delta] : examples(p)) {
    const long r = batyrev_picard_rank(delta);
    o.detail << name << " rank " << r << "; ";
    o.require(r == 19, name + " Picard rank");
    if (name == "quartic") {
      const long own = batyrev_picard_rank(polar_dual(delta));
      o.detail << "quartic's own polytope rank " << own << "; ";
      o.require(own == 1, "quartic own polytope Picard rank");
    }
  }
}

void bijection(const VerifyProfile& p, Outcome& o) {
  for (long n : p.levels) {
    const BijectionReport r = roots_punctures_bijection_check(n, p.height, p.bmax, p.cmax);
    o.detail << "n=" << n << ": " << r.roots_checked << " roots (" << r.degenerate_roots << " degenerate), "
             << r.punctures_checked << " punctures, " << r.failures.size() << " failures; ";
    o.require(r.ok(), "bijection for n=" + std::to_string(n) + (r.ok() ? "" : ": " + r.failures.front()));
  }
}

void fricke_representation(const VerifyProfile& p, Outcome& o) {
  Rng rng(p.seed);
  for (long n : p.levels) {
    const Lattice l = hyperbolic_plus_2n(n);
    std::size_t words = 0, points = 0;
    for (int i = 0; i < 500; ++i) {
      const FrickeElement g = random_word(rng, n, 8);
      const FrickeElement h = random_word(rng, n, 8);
      const IntMatrix mg = fricke_to_isometry(g);
      o.require(is_isometry(l, mg), "isometry for " + g.to_string());
      o.require(acts_trivially_on_discriminant(l, mg), "discriminant action of " + g.to_string());
      o.require(equal_up_to_sign(fricke_to_isometry(fricke_compose(g, h)), mg * fricke_to_isometry(h)),
                "homomorphism on " + g.to_string() + ", " + h.to_string());
      ++words;
    }
    for (int i = 0; i < 100; ++i) {
      const FrickeElement g = random_word(rng, n, 6);
      const HPoint z(random_rational(rng, -3, 3, 7), Rational(random_rational(rng, 1, 4, 5) / 2));
      const auto image = apply(fricke_to_isometry(g), param(n, z));
      const PeriodVector target = param(n, fricke_act(g, z));
      // param has middle coordinate 1; the image is target scaled by image[1].
      bool ok = !image[1].is_zero();
      for (std::size_t k = 0; ok && k < 3; ++k) ok = image[k] == image[1] * ComplexQN{target.re[k], target.im[k]};
      o.require(ok, "intertwining for " + g.to_string());
      ++points;
    }
    o.detail << "n=" << n << ": " << words << " word pairs, " << points << " points; ";
  }
}

void orbits(const VerifyProfile& p, Outcome& o) {
  for (long n : p.levels) {
    const OrbitReport r = orbit_transitivity_check(n, default_generators(n), p.height);
    o.detail << "n=" << n << ": " << r.reached << "/" << r.classes << " classes reached (" << r.explored
             << " explored, generators assumed complete); ";
    o.require(r.transitive(), "orbit transitivity for n=" + std::to_string(n));
  }
}

void obstructions(const VerifyProfile& p, Outcome& o) {
  Rng rng(p.seed + 8);
  for (std::int64_t q : {3, 4}) {
    const auto twist = FreeProductWord::t(q);
    o.require(abelianize(twist) == Abelianization{1, 0}, "abelianization of the twist");
    o.require(!dehn_twist_generation_obstruction(q, {twist}).can_generate, "generation verdict");
    o.require(!cube_root_obstruction(q, {1, 0}), "cube root verdict");
    const auto t2 = FreeProductWord::t(q, 2);
    o.require(project_to_z2_free_product(t2).is_identity(), "projection kills t^2");
    for (int i = 0; i < 100; ++i) {
      std::vector<FreeProductWord::Letter> letters;
      for (long k = uniform(rng, 1, 10); k > 0; --k)
        letters.push_back({uniform(rng, 0, 1) ? FreeProductWord::Tag::T : FreeProductWord::Tag::S, uniform(rng, -5, 5)});
      const FreeProductWord w(0, q, letters);
      const auto conj = word_multiply(word_multiply(w, t2), w.inverse());
      o.require(project_to_z2_free_product(conj).is_identity(), "projection kills " + conj.to_string());
    }
    o.detail << "p=" << q << ": dehn_generates=false, cube_root_of_twist=false; ";
  }
}

std::vector<QN> perturbed_equal(Rng& rng, std::size_t size) {
  std::vector<QN> out;
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(Rational(1) + random_rational(rng, 0, 1, 1000) / 100);
  return out;
}

// 1 + eps |k|^2 + eps^2 r: strictly convex along edges, so every point of Xi_0 is a ray.
std::vector<QN> convex_perturbed(Rng& rng, const std::vector<IntVector>& points) {
  const Rational eps(1, 100);
  std::vector<QN> out;
  for (const auto& k : points) {
    Integer norm = 0;
    for (const auto& x : k) norm += x * x;
    out.emplace_back(Rational(1) + eps * Rational(norm) + eps * eps * random_rational(rng, 0, 1, 1000));
  }
  return out;
}

void condition_star(const VerifyProfile& p, Outcome& o) {
  Rng rng(p.seed + 9);
  const auto ex = examples(p);
  for (const auto& [name, delta] : ex) {
    const LatticePolytope pdual = polar_dual(delta);
    const auto rays = xi0(pdual);
    const Rational volume = polytope_volume(pdual);
    int passed = 0, refinable = 0;
    for (int i = 0; i < 10; ++i) {
      const auto lam = i < 5 ? perturbed_equal(rng, rays.size()) : convex_perturbed(rng, rays);
      const RegularSubdivision s = support_subdivision(pdual, lam);
      o.require(subdivision_volume(s) == volume, name + " cells cover the dual exactly");
      const bool simplicial =
          std::all_of(s.cells.begin(), s.cells.end(), [&](const Cell& c) { return c.size() == pdual.dim() + 1; });
      const bool all_rays = s.used_points().size() == s.points.size();
      const StarVerdict v = check_condition_star(s, pdual);
      if (simplicial && all_rays) {
        ++refinable;
        o.require(v.pass, name + " refinement test: " + v.reason);
      }
      passed += v.pass;
    }
    o.require(refinable > 0, name + " no perturbation reached the refinement test");
    o.detail << name << ": vol " << to_string(volume) << ", " << passed << "/10 perturbations pass, " << refinable
             << " simplicial with all rays; ";
  }
  int agree = 0;
  for (int i = 0; i < 50 && !ex.empty(); ++i) {
    const auto& delta = ex[i % ex.size()].second;
    const std::size_t size = xi0(polar_dual(delta)).size();
    std::vector<QN> lam, twice;
    for (std::size_t k = 0; k < size; ++k) {
      lam.emplace_back(random_rational(rng, 1, 3, 50));
      twice.push_back(QN(2) * lam.back());
    }
    const StarVerdict a = check_condition_star(delta, lam), b = check_condition_star(delta, twice);
    o.require(a.pass == b.pass && a.reason == b.reason, "scaling invariance");
    agree += a.pass == b.pass;
  }
  o.detail << "scaling invariance " << agree << "/50";
}

void dwork(const VerifyProfile& p, Outcome& o) {
  if (!has(p.levels, 2) && !has(p.levels, 1)) {
    o.skipped = true;
    return;
  }
  if (has(p.levels, 2)) {
    const auto q = dwork_quartic(Cyclotomic(Rational(1, 3)));
    const auto group = quartic_symmetry_group();
    o.require(group.size() == 16, "16 elements in Pi");
    o.require(diagonal_invariance_check(q, {1, 1, 1, 1}, group), "Q invariant under Pi");
    o.require(!diagonal_invariance_check(q, {1, 1, 1, 1}, {{{1, 0, 0, 0}, 4}}), "Q not invariant under (1,0,0,0)");
    o.require(is_singular_at(dwork_quartic(Cyclotomic(-1)), {1, 1, 1, 1}), "Q_{-1} singular at (1,1,1,1)");
    o.detail << "quartic: invariant under 16 elements, singular fibre at lambda=-1; ";
  }
  if (has(p.levels, 1)) {
    const auto s = double_plane_sextic(Cyclotomic(Rational(2, 5)));
    o.require(diagonal_invariance_check(s, {1, 1, 1, 3}, double_plane_symmetry_generators()), "P invariant under Pi'");
    o.detail << "double plane: invariant under Pi'; ";
  }
}

void mukai(const VerifyProfile&, Outcome& o) {
  const Lattice pic(IntMatrix{{2}});
  const LatticeVector zero(pic, {0});
  const MukaiVector structure{1, zero, 1}, point{0, zero, 1};
  const Integer self = mukai_pairing(structure, structure);
  const Integer chi = -mukai_pairing(point, structure);
  o.detail << "<v(O),v(O)> = " << self << ", chi(O_y, O) = " << chi;
  o.require(self == -2, "spherical self-pairing");
  o.require(chi == 1, "point/structure sheaf Euler characteristic");
}

NovikovSeries random_series(Rng& rng) {
  std::vector<NovikovSeries::Term> terms;
  for (long k = uniform(rng, 1, 5); k > 0; --k) {
    Gaussian c(random_rational(rng, -3, 3, 4), random_rational(rng, -3, 3, 4));
    if (c.is_zero()) c = 1;
    terms.emplace_back(random_rational(rng, -2, 4, 6), c);
  }
  NovikovSeries x(terms);
  if (x.terms().empty()) x = NovikovSeries::monomial(random_rational(rng, 0, 2, 3));
  const Rational top = x.terms().back().first;
  if (uniform(rng, 0, 3) == 0) return x;
  return nov_truncate(x, top + random_rational(rng, 1, 3, 5));
}

void novikov(const VerifyProfile& p, Outcome& o) {
  Rng rng(p.seed + 12);
  for (int i = 0; i < 500; ++i) {
    const NovikovSeries x = random_series(rng), y = random_series(rng);
    const Valuation v = nov_val(x * y);
    o.require(v.kind == Valuation::Kind::Finite && v.value == nov_val(x).value + nov_val(y).value,
              "val multiplicativity on " + x.to_string() + " * " + y.to_string());
  }
  for (int i = 0; i < 50; ++i) {
    std::vector<NovikovSeries> d;
    for (int k = 0; k < 6; ++k) d.push_back(random_series(rng));
    const Rational a = random_rational(rng, 1, 5, 7);
    std::vector<NovikovSeries> scaled;
    for (const auto& x : d) scaled.push_back(nov_scale_exponents(a, x));
    RatVector expect = valuation_vector(d);
    for (auto& e : expect) e *= a;
    o.require(valuation_vector(scaled) == expect, "valuation scaling");
  }
  std::vector<QN> lam;
  for (int k = 0; k < 5; ++k) lam.emplace_back(random_rational(rng, 1, 3, 10), random_rational(rng, 1, 3, 10), Integer(2));
  std::vector<RatVector> planes;
  while (planes.size() < 100) {
    RatVector h;
    Rational irr = 0;
    for (int k = 0; k < 5; ++k) {
      h.push_back(random_rational(rng, -5, 5, 3));
      irr += h.back() * lam[k].irrational_part();
    }
    if (sgn(irr) != 0) planes.push_back(std::move(h));
  }
  o.require(avoids_rational_hyperplanes(lam, planes), "irrational weights avoid rational hyperplanes");
  o.detail << "500 products, 50 scaled vectors, 100 hyperplanes";
}

struct CriterionDef {
  const char* name;
  double limit_ms;
  void (*run)(const VerifyProfile&, Outcome&);
};

const CriterionDef kCriteria[] = {
    {"K3 lattice signature", 1000, signature_k3},
    {"polar duals of the simplices", 1000, polar_duals},
    {"lattice point census", 1000, census},
    {"Picard ranks", 1000, picard_ranks},
    {"puncture/root bijection", 10000, bijection},
    {"Fricke representation", 30000, fricke_representation},
    {"orbit transitivity", 60000, orbits},
    {"obstruction suite", 5000, obstructions},
    {"condition (*) suite", 60000, condition_star},
    {"Dwork checks", 5000, dwork},
    {"Mukai arithmetic", 1000, mukai},
    {"Novikov suite", 10000, novikov},
};

}  // namespace

LatticePolytope quartic_simplex() { return LatticePolytope({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}); }
LatticePolytope sextic_simplex() { return LatticePolytope({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}}); }

VerifyProfile profile_for_level(long n) {
  VerifyProfile p;
  p.levels = {n};
  p.examples.clear();
  if (n == 2) p.examples = {"quartic"};
  if (n == 1) p.examples = {"sextic"};
  return p;
}

CriterionResult run_criterion(int id, const VerifyProfile& profile) {
  if (id < 1 || id > 12) throw DomainError("criteria are numbered 1 to 12");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.limit_ms = def.limit_ms;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(profile, o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool ran_anything = !o.detail.str().empty();
  r.skipped = o.skipped || (!ran_anything && o.pass);
  r.pass = o.pass && r.elapsed_ms < r.limit_ms;
  r.detail = o.detail.str();
  if (o.pass && !r.pass) r.detail += "; FAILED: time limit exceeded";
  if (r.skipped) r.detail = "not in profile";
  return r;
}

std::vector<CriterionResult> verify_all(const VerifyProfile& profile) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id, profile));
  return out;
}

}  // namespace k3mcg
