#pragma once

#include <json.hpp>

#include "revolutio/complex_param.hpp"

namespace revolutio {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "revolutio.report/1";

// Rationals travel as strings ("-3/4") so nothing is lost to doubles.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// [{"generators": [e1, e2, ...], "value": "p/q"}, ...]
Json coeffs_json(const CoeffMap& c);
CoeffMap coeffs_from_json(const Json& j);

Json field_element_json(const FieldElement& e);
FieldElement field_element_from_json(const Json& j, const TowerPtr& tower);

// [{"name", "min_poly": [coeff, ...] low to high, "text", "embedding"}, ...]
Json tower_json(const TowerPtr& tower);
TowerPtr tower_from_json(const Json& j);

// {"variables", "terms": [{"exponents", "coefficient"}], "text"}
Json poly_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, const TowerPtr& tower);
Json unipoly_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j, const TowerPtr& tower);

// {"x", "y", "z", "tower", "provenance", "properness"}
Json surface_param_json(const SurfaceParam& s);
SurfaceParam surface_param_from_json(const Json& j);

}  // namespace revolutio
