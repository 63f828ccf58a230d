#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3mcg/fricke.hpp"
#include "k3mcg/lattice.hpp"
#include "k3mcg/novikov.hpp"
#include "k3mcg/polytope.hpp"
#include "k3mcg/quadratic.hpp"

namespace k3mcg {

using Json = nlohmann::ordered_json;

/// Malformed input; pointer is a JSON pointer to the offending field.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& what)
      : std::runtime_error(what + " at '" + pointer + "'"), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

Json read_json_file(const std::string& path);

Integer integer_from_json(const Json& j, const std::string& ptr);
Rational rational_from_json(const Json& j, const std::string& ptr);
IntVector int_vector_from_json(const Json& j, const std::string& ptr);
IntMatrix int_matrix_from_json(const Json& j, const std::string& ptr);

/// {"rank": r, "gram": [[...]]}
Lattice lattice_from_json(const Json& j);
/// {"coords": [...]}
IntVector coords_from_json(const Json& j);
/// {"vertices": [[...]]}
LatticePolytope polytope_from_json(const Json& j);
/// {"values": [{"a": "p/q", "b": "p/q", "s": int}]}
std::vector<QN> weights_from_json(const Json& j);
/// {"trunc": "p/q" | "inf", "terms": [{"exp", "re", "im"}]}
NovikovSeries series_from_json(const Json& j, const std::string& ptr = "");
/// {"coefficients": [series, ...]}
std::vector<NovikovSeries> series_list_from_json(const Json& j);
/// {"generators": [{"matrix": [[a, b], [c, d]], "fricke": bool}]}
std::vector<FrickeElement> generators_from_json(const Json& j, long n);
/// {"hyperplanes": [["p/q", ...], ...]}
std::vector<RatVector> hyperplanes_from_json(const Json& j);

/// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const QN& x);
Json to_json(const NovikovSeries& x);
Json to_json(const Valuation& v);
Json to_json(const LatticePolytope& p);
Json to_json(const Lattice& l);
Json to_json(const FrickeElement& g);

}  // namespace k3mcg
