// Thin pybind11 layer. Integers cross as Python ints, rationals as
// fractions.Fraction, and structured inputs (series, weights) as the same
// dicts the CLI reads from JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3mcg/free_product.hpp"
#include "k3mcg/fricke.hpp"
#include "k3mcg/io.hpp"
#include "k3mcg/lattice.hpp"
#include "k3mcg/period.hpp"
#include "k3mcg/polytope.hpp"
#include "k3mcg/subdivision.hpp"
#include "k3mcg/verify.hpp"

namespace py = pybind11;
using namespace k3mcg;

namespace {

using Rows = std::vector<std::vector<py::int_>>;

Integer to_integer(py::handle h) { return Integer(py::str(h).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) { return py::module_::import("fractions").attr("Fraction")(x.get_str()); }

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

IntVector to_vector(const std::vector<py::int_>& v) {
  IntVector out;
  for (const auto& x : v) out.push_back(to_integer(x));
  return out;
}

std::vector<IntVector> to_points(const Rows& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(to_vector(r));
  return out;
}

IntMatrix to_matrix(const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_integer(rows[i][j]);
  }
  return m;
}

Json to_json_value(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object from_json_value(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LatticePolytope polytope(const Rows& vertices) { return LatticePolytope(to_points(vertices)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lattices, period domains, Fricke groups, reflexive polytopes and Novikov series";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  // lattices
  m.def("k3_gram", [] { return to_py(make_standard(StandardKind::K3).gram()); }, "Gram matrix of U^3 + E8(-1)^2.");
  m.def("signature", [](const Rows& gram) {
    const Signature s = signature(Lattice(to_matrix(gram)));
    return py::make_tuple(s.positive, s.negative);
  }, py::arg("gram"));
  m.def("discriminant_group", [](const Rows& gram) {
    py::list out;
    for (const auto& d : discriminant_group(Lattice(to_matrix(gram)))) out.append(to_py(d));
    return out;
  }, py::arg("gram"), "Invariant factors of L^*/L.");
  m.def("roots", [](const Rows& gram, long height, bool modulo_sign) {
    py::list out;
    for (const auto& r : enumerate_roots(Lattice(to_matrix(gram)), {height, modulo_sign})) out.append(to_py(r.coords()));
    return out;
  }, py::arg("gram"), py::arg("height"), py::arg("modulo_sign") = false);

  // period domain
  m.def("punctures", [](long n, long bmax, long cmax) {
    py::list out;
    for (const auto& p : punctures_in_box(n, bmax, cmax)) out.append(py::make_tuple(to_py(p.b), to_py(p.c)));
    return out;
  }, py::arg("n"), py::arg("bmax"), py::arg("cmax"), "(b, c) with b | n c^2 + 1.");
  m.def("check_bijection", [](long n, long height, long bmax, long cmax) {
    const BijectionReport r = roots_punctures_bijection_check(n, height, bmax, cmax);
    py::dict d;
    d["roots_checked"] = r.roots_checked;
    d["degenerate_roots"] = r.degenerate_roots;
    d["punctures_checked"] = r.punctures_checked;
    d["failures"] = r.failures;
    return d;
  }, py::arg("n"), py::arg("height"), py::arg("bmax"), py::arg("cmax"));

  // Fricke group
  m.def("fricke_to_isometry", [](long n, const std::vector<py::int_>& abcd, bool fricke) {
    if (abcd.size() != 4) throw DomainError("expected (a, b, c, d)");
    const IntVector v = to_vector(abcd);
    return to_py(fricke_to_isometry(FrickeElement(n, {v[0], v[1], v[2], v[3]}, fricke)));
  }, py::arg("n"), py::arg("matrix"), py::arg("fricke") = false);
  m.def("orbit_check", [](long n, long height) {
    const OrbitReport r = orbit_transitivity_check(n, default_generators(n), height);
    return py::make_tuple(r.reached, r.classes);
  }, py::arg("n"), py::arg("height"), "(classes reached, classes) for the default generators.");

  // Z * Z/p
  m.def("reduce_word", [](std::int64_t p, const std::string& word) {
    const FreeProductWord w = parse_word(0, p, word);
    const Abelianization a = abelianize(w);
    return py::make_tuple(w.to_string(), py::make_tuple(to_py(a.first), to_py(a.second)));
  }, py::arg("p"), py::arg("word"), "Normal form and abelianization in Z * Z/p.");
  m.def("dehn_twist_generates", [](std::int64_t p) {
    return dehn_twist_generation_obstruction(p, {FreeProductWord::t(p)}).can_generate;
  }, py::arg("p"));
  m.def("has_cube_root", [](std::int64_t p, const py::int_& first, const py::int_& second) {
    return cube_root_obstruction(p, {to_integer(first), to_integer(second)});
  }, py::arg("p"), py::arg("first"), py::arg("second"));

  // polytopes
  m.def("polar_dual", [](const Rows& v) { return to_py(polar_dual(polytope(v)).vertices()); }, py::arg("vertices"));
  m.def("lattice_points", [](const Rows& v) {
    const PointClassification c = lattice_points_by_face(polytope(v));
    py::dict d;
    d["interior"] = to_py(c.interior);
    d["facet_interior"] = to_py(c.facet_interior);
    d["edge_interior"] = to_py(c.edge_interior);
    d["vertices"] = to_py(c.vertices);
    return d;
  }, py::arg("vertices"));
  m.def("xi0", [](const Rows& dual) { return to_py(xi0(polytope(dual))); }, py::arg("dual_vertices"));
  m.def("picard_rank", [](const Rows& v) { return batyrev_picard_rank(polytope(v)); }, py::arg("vertices"));
  m.def("volume", [](const Rows& v) { return to_py(polytope_volume(polytope(v))); }, py::arg("vertices"));
  m.def("star_check", [](const Rows& delta, const py::dict& weights) {
    const StarVerdict s = check_condition_star(polytope(delta), weights_from_json(to_json_value(weights)));
    return py::make_tuple(s.pass, s.reason);
  }, py::arg("delta"), py::arg("weights"), "weights: {\"values\": [{\"a\", \"b\", \"s\"}, ...]} on Xi_0.");

  // Novikov series, as {"trunc", "terms": [{"exp", "re", "im"}]} dicts
  m.def("nov_val", [](const py::dict& x) { return from_json_value(to_json(nov_val(series_from_json(to_json_value(x))))); },
        py::arg("x"));
  m.def("nov_mul", [](const py::dict& x, const py::dict& y) {
    return from_json_value(to_json(series_from_json(to_json_value(x)) * series_from_json(to_json_value(y))));
  }, py::arg("x"), py::arg("y"));
  m.def("nov_scale", [](const std::string& a, const py::dict& x) {
    return from_json_value(to_json(nov_scale_exponents(rational_from_json(Json(a), "/a"), series_from_json(to_json_value(x)))));
  }, py::arg("a"), py::arg("x"));

  // acceptance
  m.def("verify", [](std::vector<int> ids) {
    const VerifyProfile profile;
    if (ids.empty())
      for (int i = 1; i <= 12; ++i) ids.push_back(i);
    py::list out;
    for (int id : ids) {
      py::gil_scoped_release release;
      const CriterionResult r = run_criterion(id, profile);
      py::gil_scoped_acquire acquire;
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass && !r.skipped;
      d["detail"] = r.detail;
      d["elapsed_ms"] = r.elapsed_ms;
      out.append(d);
    }
    return out;
  }, py::arg("ids") = std::vector<int>{});
}
