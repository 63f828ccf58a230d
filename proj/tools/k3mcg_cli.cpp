// k3mcg: batch command-line front end. Every command prints one JSON report
// {command, inputs, results, status}; exit 0 = Pass/Partial, 1 = Fail, 2 = usage.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3mcg/free_product.hpp"
#include "k3mcg/fricke.hpp"
#include "k3mcg/io.hpp"
#include "k3mcg/lattice.hpp"
#include "k3mcg/mirror.hpp"
#include "k3mcg/novikov.hpp"
#include "k3mcg/period.hpp"
#include "k3mcg/subdivision.hpp"
#include "k3mcg/verify.hpp"

using namespace k3mcg;

namespace {

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string status = "Pass";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts a bare document or a previous report (its "results").
Json load(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("command") && j.contains("results")) return j["results"];
  return j;
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const DomainError&) {
    throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
  }
}

// "p/q" or "e(k/m)" for exp(2 pi i k/m).
Cyclotomic cyclotomic_arg(const std::string& text, const std::string& flag) {
  if (text.rfind("e(", 0) == 0 && text.back() == ')') {
    const Rational r = rational_arg(text.substr(2, text.size() - 3), flag);
    const Integer den = r.get_den();
    if (!den.fits_slong_p() || Cyclotomic::kConductor % den.get_si() != 0)
      throw UsageError(flag + ": root of unity order must divide 24");
    return Cyclotomic::root_of_unity(mod_nonneg(r.get_num(), den).get_si(), den.get_si());
  }
  return Cyclotomic(rational_arg(text, flag));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Mat2 matrix_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--matrix: expected a,b,c,d");
  Mat2 m;
  for (int i = 0; i < 4; ++i) {
    if (m[i].set_str(parts[i], 10) != 0) throw UsageError("--matrix: '" + parts[i] + "' is not an integer");
  }
  return m;
}

Json puncture_json(const Puncture& p) {
  const HPoint z = p.point();
  return {{"b", to_json(p.b)}, {"c", to_json(p.c)}, {"x", to_json(z.x())}, {"y", to_json(z.y())}};
}

std::string svg_punctures(const std::vector<Puncture>& ps, long n, double xmax, double ymax) {
  const double scale = 200.0;
  const double width = 2 * xmax * scale, height = ymax * scale;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height + 20
     << "\" viewBox=\"0 0 " << width << " " << height + 20 << "\">\n"
     << "  <title>punctured upper half plane, n = " << n << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#f7f7f7\"/>\n"
     << "  <line x1=\"0\" y1=\"" << height << "\" x2=\"" << width << "\" y2=\"" << height
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const Puncture& p : ps) {
    const HPoint z = p.point();
    const double x = z.x().approx(), y = z.y().approx();
    if (std::abs(x) > xmax || y > ymax) continue;
    const double r = std::max(1.5, std::min(6.0, 40.0 * y));
    os << "  <circle cx=\"" << (x + xmax) * scale << "\" cy=\"" << height - y * scale << "\" r=\"" << r
       << "\" fill=\"white\" stroke=\"#b22222\" stroke-width=\"1\"><title>b=" << p.b << " c=" << p.c << " ("
       << x << ", " << y << ")</title></circle>\n";
  }
  os << "  <text x=\"4\" y=\"" << height + 15 << "\" font-size=\"12\">[" << -xmax << ", " << xmax << "] x (0, " << ymax
     << "]</text>\n</svg>\n";
  return os.str();
}

PeriodVector period_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lattice")) throw InputError("/lattice", "missing field");
  const Lattice l = lattice_from_json(j["lattice"]);
  auto values = [&](const char* key) {
    if (!j.contains(key)) throw InputError(std::string("/") + key, "missing field");
    const auto v = weights_from_json(Json{{"values", j[key]}});
    if (v.size() != l.rank()) throw InputError(std::string("/") + key, "length does not match the lattice rank");
    return v;
  };
  return {l, values("re"), values("im")};
}

Json subdivision_json(const RegularSubdivision& s) {
  Json pts = Json::array(), cells = Json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  for (const auto& c : s.cells) cells.push_back(c);
  return {{"points", pts}, {"cells", cells}};
}

void print(const Report& r, const std::string& format, double elapsed_ms, bool timing) {
  Json j{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"status", r.status}};
  if (timing) j["elapsed_ms"] = std::round(elapsed_ms * 1000) / 1000;
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << r.command << ": " << r.status << "\n";
  for (const auto& [k, v] : r.results.items()) std::cout << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  if (timing) std::cout << "  elapsed_ms: " << elapsed_ms << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3mcg: lattices, periods, Fricke groups, reflexive polytopes and Novikov series"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain"}));
  app.add_flag("--timing", timing, "Add elapsed_ms to the report");

  Report report;
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<void()> f) {
    sub->callback([&report, &action, name = std::move(name), f = std::move(f)] {
      report.command = name;
      action = f;
    });
  };

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "Integral lattices")->require_subcommand(1);
  std::string in, in2;
  long height = 10, n = 1, bmax = 10, cmax = 10, slack = 4, p = 4;
  bool modulo_sign = false;
  std::vector<std::string> vec_files;

  auto* sig = lattice->add_subcommand("sig", "Signature");
  sig->add_option("--in", in, "Lattice JSON")->required();
  bind(sig, "lattice sig", [&] {
    const Lattice l = lattice_from_json(load(in));
    const Signature s = signature(l);
    report.inputs = {{"in", in}};
    report.results = {{"p", s.positive}, {"q", s.negative}};
  });

  auto* disc = lattice->add_subcommand("disc", "Discriminant group");
  disc->add_option("--in", in, "Lattice JSON")->required();
  bind(disc, "lattice disc", [&] {
    const Lattice l = lattice_from_json(load(in));
    report.inputs = {{"in", in}};
    report.results = {{"invariant_factors", to_json(discriminant_group(l))}, {"order", to_json(Integer(abs(l.det())))}};
  });

  auto* roots = lattice->add_subcommand("roots", "(-2)-vectors of bounded height");
  roots->add_option("--in", in, "Lattice JSON")->required();
  roots->add_option("--height", height, "Sup-norm bound")->check(CLI::PositiveNumber);
  roots->add_flag("--modulo-sign", modulo_sign, "One representative per +/- pair");
  bind(roots, "lattice roots", [&] {
    const Lattice l = lattice_from_json(load(in));
    Json list = Json::array();
    for (const auto& r : enumerate_roots(l, {height, modulo_sign})) list.push_back(to_json(r.coords()));
    report.inputs = {{"in", in}, {"height", height}, {"modulo_sign", modulo_sign}};
    report.results = {{"count", list.size()}, {"roots", list}};
  });

  auto* complement = lattice->add_subcommand("complement", "Orthogonal complement of vectors");
  complement->add_option("--in", in, "Lattice JSON")->required();
  complement->add_option("--vec", vec_files, "Vector JSON {\"coords\"} (repeatable)");
  bind(complement, "lattice complement", [&] {
    const Lattice l = lattice_from_json(load(in));
    std::vector<LatticeVector> vs;
    for (const auto& f : vec_files) vs.emplace_back(l, coords_from_json(load(f)));
    const Sublattice s = orthogonal_complement(l, vs);
    report.inputs = {{"in", in}, {"vec", vec_files}};
    report.results = {{"rank", s.basis.rows()}, {"basis", to_json(s.basis)}, {"gram", to_json(s.gram)}};
  });

  // ---- period ----
  auto* period = app.add_subcommand("period", "Period domain of U + <2n>")->require_subcommand(1);
  std::string svg;
  double xmax = 2.0, ymax = 2.0;
  auto* punct = period->add_subcommand("punctures", "Punctures c/b + i/(b sqrt n)");
  punct->add_option("--n", n)->check(CLI::PositiveNumber);
  punct->add_option("--bmax", bmax)->check(CLI::PositiveNumber);
  punct->add_option("--cmax", cmax)->check(CLI::NonNegativeNumber);
  punct->add_option("--svg", svg, "Write an SVG plot");
  punct->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
  punct->add_option("--ymax", ymax)->check(CLI::PositiveNumber);
  bind(punct, "period punctures", [&] {
    const auto ps = punctures_in_box(n, bmax, cmax);
    Json list = Json::array();
    for (const auto& x : ps) list.push_back(puncture_json(x));
    report.inputs = {{"n", n}, {"bmax", bmax}, {"cmax", cmax}};
    report.results = {{"count", ps.size()}, {"punctures", list}};
    if (!svg.empty()) {
      std::ofstream out(svg);
      if (!out) throw UsageError("--svg: cannot write " + svg);
      out << svg_punctures(ps, n, xmax, ymax);
      report.inputs["svg"] = svg;
      report.inputs["xmax"] = xmax;
      report.inputs["ymax"] = ymax;
    }
  });

  auto* bij = period->add_subcommand("check-bijection", "Roots <-> punctures");
  bij->add_option("--n", n)->check(CLI::PositiveNumber);
  bij->add_option("--height", height)->check(CLI::PositiveNumber);
  bij->add_option("--bmax", bmax)->check(CLI::PositiveNumber);
  bij->add_option("--cmax", cmax)->check(CLI::NonNegativeNumber);
  bind(bij, "period check-bijection", [&] {
    const auto r = roots_punctures_bijection_check(n, height, bmax, cmax);
    report.inputs = {{"n", n}, {"height", height}, {"bmax", bmax}, {"cmax", cmax}};
    report.results = {{"roots_checked", r.roots_checked},
                      {"degenerate_roots", r.degenerate_roots},
                      {"punctures_checked", r.punctures_checked},
                      {"failures", r.failures}};
    report.status = r.ok() ? "Pass" : "Fail";
  });

  auto* k0 = period->add_subcommand("k0-check", "Bounded membership in K_0");
  k0->add_option("--omega", in, "Period JSON {lattice, re, im}")->required();
  k0->add_option("--kappa", in2, "Vector JSON {\"coords\"}")->required();
  k0->add_option("--height", height)->check(CLI::NonNegativeNumber);
  bind(k0, "period k0-check", [&] {
    const PeriodVector omega = period_from_json(load(in));
    const LatticeVector kappa(omega.lattice, coords_from_json(load(in2)));
    const K0Verdict v = is_in_K0_bounded(omega, kappa, height);
    report.inputs = {{"omega", in}, {"kappa", in2}, {"height", height}};
    report.results = {{"in_k0", v.passes}, {"witness", v.witness ? to_json(v.witness->coords()) : Json(nullptr)}};
    report.status = v.passes ? "Pass" : "Fail";
  });

  // ---- fricke ----
  auto* fricke = app.add_subcommand("fricke", "Fricke group of level n")->require_subcommand(1);
  std::string matrix = "1,0,0,1", x = "0", y = "1", gens;
  bool flag = false;
  auto add_element = [&](CLI::App* sub) {
    sub->add_option("--n", n)->check(CLI::PositiveNumber);
    sub->add_option("--matrix", matrix, "a,b,c,d with ad - bc = 1 and n | c");
    sub->add_flag("--fricke", flag, "Post-compose with the Fricke involution");
  };
  auto element = [&] {
    try {
      return FrickeElement(n, matrix_arg(matrix), flag);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--matrix: ") + e.what());
    }
  };

  auto* act = fricke->add_subcommand("act", "Mobius action on a point");
  add_element(act);
  act->add_option("--x", x, "Real part p/q");
  act->add_option("--y", y, "Imaginary part p/q > 0");
  bind(act, "fricke act", [&] {
    const FrickeElement g = element();
    const Rational yr = rational_arg(y, "--y");
    if (sgn(yr) <= 0) throw UsageError("--y: must be positive");
    const HPoint w = fricke_act(g, HPoint(rational_arg(x, "--x"), yr));
    report.inputs = {{"n", n}, {"element", to_json(g)}, {"x", x}, {"y", y}};
    report.results = {{"x", to_json(w.x())}, {"y", to_json(w.y())}};
  });

  auto* iso = fricke->add_subcommand("to-isometry", "Integral isometry of U + <2n>");
  add_element(iso);
  bind(iso, "fricke to-isometry", [&] {
    const FrickeElement g = element();
    const IntMatrix m = fricke_to_isometry(g);
    const Lattice l = hyperbolic_plus_2n(n);
    const bool isom = is_isometry(l, m), triv = acts_trivially_on_discriminant(l, m);
    report.inputs = {{"n", n}, {"element", to_json(g)}};
    report.results = {{"matrix", to_json(m)}, {"is_isometry", isom}, {"trivial_on_discriminant", triv}};
    report.status = isom && triv ? "Pass" : "Fail";
  });

  auto* orbit = fricke->add_subcommand("orbit-check", "Transitivity on root classes");
  orbit->add_option("--n", n)->check(CLI::PositiveNumber);
  orbit->add_option("--height", height)->check(CLI::PositiveNumber);
  orbit->add_option("--gens", gens, "Generators JSON");
  orbit->add_option("--slack", slack, "Intermediate height multiplier")->check(CLI::PositiveNumber);
  bind(orbit, "fricke orbit-check", [&] {
    const auto g = gens.empty() ? default_generators(n) : generators_from_json(load(gens), n);
    const OrbitReport r = orbit_transitivity_check(n, g, height, slack);
    Json unreached = Json::array();
    for (const auto& v : r.unreached) unreached.push_back(to_json(v));
    Json gj = Json::array();
    for (const auto& e : g) gj.push_back(to_json(e));
    report.inputs = {{"n", n}, {"height", height}, {"slack", slack}, {"generators", gj}};
    report.results = {{"classes", r.classes},
                      {"reached", r.reached},
                      {"unreached", unreached},
                      {"explored", r.explored},
                      {"generators_assumed_complete", true}};
    report.status = r.transitive() ? "Pass" : "Fail";
  });

  // ---- group ----
  auto* group = app.add_subcommand("group", "Z * Z/p bookkeeping")->require_subcommand(1);
  std::string word;
  bool project = false;
  auto* obst = group->add_subcommand("obstruction", "Dehn twist and cube root obstructions");
  obst->add_option("--p", p)->check(CLI::PositiveNumber);
  bind(obst, "group obstruction", [&] {
    const auto v = dehn_twist_generation_obstruction(p, {FreeProductWord::t(p)});
    report.inputs = {{"p", p}};
    report.results = {{"dehn_generates", v.can_generate},
                      {"cube_root_of_twist", cube_root_obstruction(p, {1, 0})},
                      {"stuck_coordinate", v.stuck_coordinate}};
  });
  auto* reduce = group->add_subcommand("reduce", "Normal form of a word in Z * Z/p");
  reduce->add_option("--p", p)->check(CLI::PositiveNumber);
  reduce->add_option("--word", word, "e.g. \"t^2 s t^-1\" or t^2,s,t^-1")->required();
  reduce->add_flag("--project", project, "Map to Z/2 * Z/p");
  bind(reduce, "group reduce", [&] {
    FreeProductWord w(0, p);
    try {
      std::string text = word;
      std::replace(text.begin(), text.end(), ',', ' ');
      w = parse_word(0, p, text);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--word: ") + e.what());
    }
    const Abelianization ab = abelianize(w);
    report.inputs = {{"p", p}, {"word", word}, {"project", project}};
    report.results = {{"normal_form", w.to_string()}, {"abelianization", {to_json(ab.first), to_json(ab.second)}}};
    if (project) report.results["projection"] = project_to_z2_free_product(w).to_string();
  });

  // ---- polytope ----
  auto* polytope = app.add_subcommand("polytope", "Reflexive polytopes and mirror equations")->require_subcommand(1);
  std::string lambda_file, d_file, family = "dwork", lambda = "0";
  std::vector<std::string> elements, point;
  long order = 4;

  auto* dual = polytope->add_subcommand("dual", "Polar dual");
  dual->add_option("--in", in, "Polytope JSON")->required();
  bind(dual, "polytope dual", [&] {
    report.inputs = {{"in", in}};
    report.results = to_json(polar_dual(polytope_from_json(load(in))));
  });

  auto* points = polytope->add_subcommand("points", "Lattice points by smallest face");
  points->add_option("--in", in, "Polytope JSON")->required();
  bind(points, "polytope points", [&] {
    const auto c = lattice_points_by_face(polytope_from_json(load(in)));
    auto list = [](const std::vector<IntVector>& v) {
      Json out = Json::array();
      for (const auto& x : v) out.push_back(to_json(x));
      return out;
    };
    report.inputs = {{"in", in}};
    report.results = {{"total", c.total()},
                      {"counts",
                       {{"interior", c.interior.size()},
                        {"facet_interior", c.facet_interior.size()},
                        {"edge_interior", c.edge_interior.size()},
                        {"vertices", c.vertices.size()}}},
                      {"interior", list(c.interior)},
                      {"facet_interior", list(c.facet_interior)},
                      {"edge_interior", list(c.edge_interior)},
                      {"vertices", list(c.vertices)}};
  });

  auto* xi = polytope->add_subcommand("xi0", "Boundary points off facet interiors (input: the dual polytope)");
  xi->add_option("--in", in, "Polytope JSON")->required();
  bind(xi, "polytope xi0", [&] {
    Json list = Json::array();
    for (const auto& v : xi0(polytope_from_json(load(in)))) list.push_back(to_json(v));
    report.inputs = {{"in", in}};
    report.results = {{"count", list.size()}, {"points", list}};
  });

  auto* star = polytope->add_subcommand("star-check", "Condition (*) for weights on Xi_0 (input: Delta)");
  star->add_option("--in", in, "Polytope JSON")->required();
  star->add_option("--lambda", lambda_file, "Weights JSON")->required();
  bind(star, "polytope star-check", [&] {
    const LatticePolytope delta = polytope_from_json(load(in));
    const LatticePolytope pdual = polar_dual(delta);
    const auto lam = weights_from_json(load(lambda_file));
    const auto s = support_subdivision(pdual, lam);
    const StarVerdict v = check_condition_star(s, pdual);
    report.inputs = {{"in", in}, {"lambda", lambda_file}};
    report.results = {{"pass", v.pass}, {"reason", v.reason}, {"subdivision", subdivision_json(s)}};
    report.status = v.pass ? "Pass" : "Fail";
  });

  auto* pic = polytope->add_subcommand("picard-rank", "Combinatorial Picard rank (input: Delta)");
  pic->add_option("--in", in, "Polytope JSON")->required();
  bind(pic, "polytope picard-rank", [&] {
    const LatticePolytope delta = polytope_from_json(load(in));
    report.inputs = {{"in", in}};
    report.results = {{"picard_rank", batyrev_picard_rank(delta)}, {"xi0_count", xi0(polar_dual(delta)).size()}};
  });

  auto* mirror = polytope->add_subcommand("mirror-eq", "-x^0 + sum d_k x^k (input: the dual polytope)");
  mirror->add_option("--in", in, "Polytope JSON")->required();
  mirror->add_option("--d", d_file, "Coefficients JSON {\"coefficients\": [series]}")->required();
  bind(mirror, "polytope mirror-eq", [&] {
    const LatticePolytope pdual = polytope_from_json(load(in));
    const auto d = series_list_from_json(load(d_file));
    const auto f = mirror_equation(pdual, d);
    Json terms = Json::array(), vals = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_json(c)}});
    for (const auto& c : d) vals.push_back(to_json(nov_val(c)));
    report.inputs = {{"in", in}, {"d", d_file}};
    report.results = {{"term_count", f.size()}, {"terms", terms}, {"valuations", vals}};
  });

  auto family_poly = [&](const std::string& fam, const Cyclotomic& lam) {
    if (fam == "dwork") return dwork_quartic(lam);
    if (fam == "sextic") return double_plane_sextic(lam);
    throw UsageError("--family: expected dwork or sextic");
  };

  auto* inv = polytope->add_subcommand("invariance", "Diagonal group invariance of a pencil member");
  inv->add_option("--family", family, "dwork or sextic");
  inv->add_option("--lambda", lambda, "Pencil parameter p/q or e(k/m)");
  inv->add_option("--element", elements, "a0,a1,a2,a3 (repeatable); default: the symmetry group");
  inv->add_option("--order", order, "Root of unity order for --element")->check(CLI::PositiveNumber);
  bind(inv, "polytope invariance", [&] {
    const auto f = family_poly(family, cyclotomic_arg(lambda, "--lambda"));
    std::vector<DiagonalElement> els;
    for (const auto& e : elements) {
      DiagonalElement d{{}, order};
      for (const auto& part : split(e, ',')) {
        try {
          d.exponents.push_back(std::stol(part));
        } catch (const std::exception&) {
          throw UsageError("--element: '" + part + "' is not an integer");
        }
      }
      els.push_back(std::move(d));
    }
    if (els.empty()) els = family == "dwork" ? quartic_symmetry_group() : double_plane_symmetry_generators();
    const std::vector<long> weights = family == "dwork" ? std::vector<long>{1, 1, 1, 1} : std::vector<long>{1, 1, 1, 3};
    const bool ok = diagonal_invariance_check(f, weights, els);
    report.inputs = {{"family", family}, {"lambda", lambda}, {"elements", els.size()}};
    report.results = {{"invariant", ok}};
    report.status = ok ? "Pass" : "Fail";
  });

  auto* sing = polytope->add_subcommand("singular-at", "Is a pencil member singular at a point");
  sing->add_option("--family", family, "dwork or sextic");
  sing->add_option("--lambda", lambda, "Pencil parameter p/q or e(k/m)");
  sing->add_option("--point", point, "Coordinates p/q or e(k/m)")->required()->delimiter(',');
  bind(sing, "polytope singular-at", [&] {
    const auto f = family_poly(family, cyclotomic_arg(lambda, "--lambda"));
    std::vector<Cyclotomic> pt;
    for (const auto& c : point) pt.push_back(cyclotomic_arg(c, "--point"));
    if (pt.size() != 4) throw UsageError("--point: expected 4 coordinates");
    const bool s = is_singular_at(f, pt);
    report.inputs = {{"family", family}, {"lambda", lambda}, {"point", point}};
    report.results = {{"singular", s}};
  });

  // ---- novikov ----
  auto* novikov = app.add_subcommand("novikov", "Truncated Novikov series")->require_subcommand(1);
  std::string scale = "1", hyper_file;
  auto* val = novikov->add_subcommand("val", "Valuation");
  val->add_option("--in", in, "Series JSON")->required();
  bind(val, "novikov val", [&] {
    report.inputs = {{"in", in}};
    report.results = {{"valuation", to_json(nov_val(series_from_json(load(in))))}};
  });
  auto* mul = novikov->add_subcommand("mul", "Product");
  mul->add_option("--a", in, "Series JSON")->required();
  mul->add_option("--b", in2, "Series JSON")->required();
  bind(mul, "novikov mul", [&] {
    report.inputs = {{"a", in}, {"b", in2}};
    report.results = to_json(nov_mul(series_from_json(load(in)), series_from_json(load(in2))));
  });
  auto* scl = novikov->add_subcommand("scale", "Exponent scaling q -> q^a");
  scl->add_option("--a", scale, "Positive rational")->required();
  scl->add_option("--in", in, "Series JSON")->required();
  bind(scl, "novikov scale", [&] {
    const Rational a = rational_arg(scale, "--a");
    if (sgn(a) <= 0) throw UsageError("--a: must be positive");
    report.inputs = {{"a", scale}, {"in", in}};
    report.results = to_json(nov_scale_exponents(a, series_from_json(load(in))));
  });
  auto* avoid = novikov->add_subcommand("avoid", "Rational hyperplane avoidance");
  avoid->add_option("--lambda", lambda_file, "Weights JSON")->required();
  avoid->add_option("--hyperplanes", hyper_file, "Hyperplanes JSON")->required();
  bind(avoid, "novikov avoid", [&] {
    const bool ok = avoids_rational_hyperplanes(weights_from_json(load(lambda_file)), hyperplanes_from_json(load(hyper_file)));
    report.inputs = {{"lambda", lambda_file}, {"hyperplanes", hyper_file}};
    report.results = {{"avoids", ok}};
    report.status = ok ? "Pass" : "Fail";
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  long only_n = 0;
  verify->add_option("--n", only_n, "Restrict to one level and its mirror example")->check(CLI::IsMember({1, 2}));
  verify->add_option("--height", height)->check(CLI::PositiveNumber);
  bind(verify, "verify", [&] {
    VerifyProfile profile = only_n ? profile_for_level(only_n) : VerifyProfile{};
    profile.height = height;
    const auto results = verify_all(profile);
    Json list = Json::array();
    bool all = true, skipped = false;
    for (const auto& r : results) {
      Json c{{"id", r.id}, {"name", r.name}, {"status", r.skipped ? "Skipped" : r.pass ? "Pass" : "Fail"},
             {"detail", r.detail}, {"limit_ms", r.limit_ms}};
      if (timing) c["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
      list.push_back(c);
      if (r.skipped)
        skipped = true;
      else
        all = all && r.pass;
    }
    report.inputs = {{"levels", profile.levels}, {"examples", profile.examples}, {"height", profile.height}};
    report.results = {{"criteria", list}};
    report.status = !all ? "Fail" : skipped ? "Partial" : "Pass";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const InputError& e) {
    std::cerr << Json{{"error", e.what()}, {"pointer", e.pointer()}}.dump() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  print(report, format, elapsed, timing);
  return report.status == "Fail" ? 1 : 0;
}
