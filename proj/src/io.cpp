#include "k3mcg/io.hpp"

#include <fstream>

namespace k3mcg {

namespace {

const Json& field(const Json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) throw InputError(ptr, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(ptr + "/" + key, "missing field");
  return *it;
}

const Json& array_field(const Json& j, const std::string& ptr, const char* key) {
  const Json& a = field(j, ptr, key);
  if (!a.is_array()) throw InputError(ptr + "/" + key, "expected an array");
  return a;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("", std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

Integer integer_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) == 0) return out;
  }
  throw InputError(ptr, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DomainError&) {
    }
  }
  throw InputError(ptr, "expected a rational \"p/q\"");
}

IntVector int_vector_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& ptr) {
  if (!j.is_array() || j.empty()) throw InputError(ptr, "expected a nonempty array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(int_vector_from_json(j[i], ptr + "/" + std::to_string(i)));
    if (rows.back().size() != rows.front().size()) throw InputError(ptr + "/" + std::to_string(i), "ragged matrix row");
  }
  return IntMatrix::from_rows(rows);
}

Lattice lattice_from_json(const Json& j) {
  const IntMatrix gram = int_matrix_from_json(field(j, "", "gram"), "/gram");
  if (j.contains("rank")) {
    const Integer r = integer_from_json(j["rank"], "/rank");
    if (r != static_cast<long>(gram.rows())) throw InputError("/rank", "rank does not match the Gram matrix");
  }
  try {
    return Lattice(gram);
  } catch (const DomainError& e) {
    throw InputError("/gram", e.what());
  }
}

IntVector coords_from_json(const Json& j) { return int_vector_from_json(field(j, "", "coords"), "/coords"); }

LatticePolytope polytope_from_json(const Json& j) {
  const Json& v = array_field(j, "", "vertices");
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < v.size(); ++i) pts.push_back(int_vector_from_json(v[i], "/vertices/" + std::to_string(i)));
  try {
    return LatticePolytope(pts);
  } catch (const DomainError& e) {
    throw InputError("/vertices", e.what());
  }
}

std::vector<QN> weights_from_json(const Json& j) {
  const Json& v = array_field(j, "", "values");
  std::vector<QN> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string ptr = "/values/" + std::to_string(i);
    const Rational a = rational_from_json(field(v[i], ptr, "a"), ptr + "/a");
    const Rational b = v[i].contains("b") ? rational_from_json(v[i]["b"], ptr + "/b") : Rational(0);
    const Integer s = v[i].contains("s") ? integer_from_json(v[i]["s"], ptr + "/s") : Integer(1);
    try {
      out.emplace_back(a, b, s);
    } catch (const DomainError& e) {
      throw InputError(ptr + "/s", e.what());
    }
  }
  return out;
}

NovikovSeries series_from_json(const Json& j, const std::string& ptr) {
  std::optional<Rational> trunc;
  if (j.is_object() && j.contains("trunc")) {
    const Json& t = j["trunc"];
    if (!(t.is_string() && t.get<std::string>() == "inf")) trunc = rational_from_json(t, ptr + "/trunc");
  }
  const Json& terms = array_field(j, ptr, "terms");
  std::vector<NovikovSeries::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = ptr + "/terms/" + std::to_string(i);
    const Rational e = rational_from_json(field(terms[i], tp, "exp"), tp + "/exp");
    const Rational re = terms[i].contains("re") ? rational_from_json(terms[i]["re"], tp + "/re") : Rational(0);
    const Rational im = terms[i].contains("im") ? rational_from_json(terms[i]["im"], tp + "/im") : Rational(0);
    out.emplace_back(e, Gaussian(re, im));
  }
  return {std::move(out), std::move(trunc)};
}

std::vector<NovikovSeries> series_list_from_json(const Json& j) {
  const Json& c = array_field(j, "", "coefficients");
  std::vector<NovikovSeries> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(series_from_json(c[i], "/coefficients/" + std::to_string(i)));
  return out;
}

std::vector<FrickeElement> generators_from_json(const Json& j, long n) {
  const Json& g = array_field(j, "", "generators");
  std::vector<FrickeElement> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string ptr = "/generators/" + std::to_string(i);
    const IntMatrix m = int_matrix_from_json(field(g[i], ptr, "matrix"), ptr + "/matrix");
    if (m.rows() != 2 || m.cols() != 2) throw InputError(ptr + "/matrix", "expected a 2x2 matrix");
    bool flag = false;
    if (g[i].contains("fricke")) {
      if (!g[i]["fricke"].is_boolean()) throw InputError(ptr + "/fricke", "expected a boolean");
      flag = g[i]["fricke"].get<bool>();
    }
    try {
      out.emplace_back(n, Mat2{m(0, 0), m(0, 1), m(1, 0), m(1, 1)}, flag);
    } catch (const DomainError& e) {
      throw InputError(ptr + "/matrix", e.what());
    }
  }
  return out;
}

std::vector<RatVector> hyperplanes_from_json(const Json& j) {
  const Json& h = array_field(j, "", "hyperplanes");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::string ptr = "/hyperplanes/" + std::to_string(i);
    if (!h[i].is_array()) throw InputError(ptr, "expected an array");
    RatVector v;
    for (std::size_t k = 0; k < h[i].size(); ++k) v.push_back(rational_from_json(h[i][k], ptr + "/" + std::to_string(k)));
    out.push_back(std::move(v));
  }
  return out;
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(IntVector(m.row(r).begin(), m.row(r).end())));
  return out;
}

Json to_json(const QN& x) {
  return {{"a", to_string(x.rational_part())}, {"b", to_string(x.irrational_part())}, {"s", to_json(x.field())}};
}

Json to_json(const NovikovSeries& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back({{"exp", to_string(e)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  return {{"trunc", x.trunc() ? Json(to_string(*x.trunc())) : Json("inf")}, {"terms", terms}};
}

Json to_json(const Valuation& v) { return v.to_string(); }

Json to_json(const LatticePolytope& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return {{"vertices", v}};
}

Json to_json(const Lattice& l) { return {{"rank", l.rank()}, {"gram", to_json(l.gram())}}; }

Json to_json(const FrickeElement& g) {
  const Mat2& m = g.matrix();
  return {{"matrix", {{to_json(m[0]), to_json(m[1])}, {to_json(m[2]), to_json(m[3])}}}, {"fricke", g.fricke()}};
}

}  // namespace k3mcg
