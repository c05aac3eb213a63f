#include "revolutio/serialize.hpp"

namespace revolutio {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidInput, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing '") + key + "'");
  return j.at(key);
}

std::string embedding_kind(Embedding::Kind k) {
  switch (k) {
    case Embedding::Kind::kReal: return "real";
    case Embedding::Kind::kImaginary: return "imaginary";
    case Embedding::Kind::kComplex: return "complex";
  }
  return "complex";
}

Properness properness_from_name(const std::string& name) {
  for (Properness p : {Properness::kProper, Properness::kNonProperDegree2, Properness::kUnknown}) {
    if (properness_name(p) == name) return p;
  }
  bad("unknown properness '" + name + "'");
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a string or an integer");
}

Json coeffs_json(const CoeffMap& c) {
  Json out = Json::array();
  for (const auto& [gens, value] : c) out.push_back({{"generators", gens}, {"value", rational_json(value)}});
  return out;
}

CoeffMap coeffs_from_json(const Json& j) {
  if (!j.is_array()) bad("coefficient must be an array");
  CoeffMap c;
  for (const auto& term : j) {
    auto gens = field(term, "generators").get<GenMonomial>();
    while (!gens.empty() && gens.back() == 0) gens.pop_back();
    Rational value = rational_from_json(field(term, "value"));
    if (value != 0) c[gens] += value;
  }
  return c;
}

Json field_element_json(const FieldElement& e) { return coeffs_json(e.terms()); }

FieldElement field_element_from_json(const Json& j, const TowerPtr& tower) {
  return FieldElement(tower, coeffs_from_json(j));
}

Json tower_json(const TowerPtr& tower) {
  Json out = Json::array();
  for (std::size_t k = 0; k < tower->height(); ++k) {
    const TowerStep& step = tower->step(k);
    Json mp = Json::array();
    for (const auto& c : step.min_poly) mp.push_back(coeffs_json(c));
    Json emb{{"kind", embedding_kind(step.embedding.kind)}};
    if (step.embedding.kind != Embedding::Kind::kComplex) {
      emb["lo"] = rational_json(step.embedding.lo);
      emb["hi"] = rational_json(step.embedding.hi);
    }
    out.push_back({{"name", step.name}, {"min_poly", mp}, {"text", tower->min_poly_text(k)}, {"embedding", emb}});
  }
  return out;
}

TowerPtr tower_from_json(const Json& j) {
  if (!j.is_array()) bad("tower must be an array");
  TowerPtr tower = Tower::base();
  for (const auto& s : j) {
    TowerStep step;
    step.name = field(s, "name").get<std::string>();
    for (const auto& c : field(s, "min_poly")) step.min_poly.push_back(coeffs_from_json(c));
    if (step.degree() < 2 || step.min_poly.back() != CoeffMap{{GenMonomial{}, Rational(1)}}) {
      bad("minimal polynomial of '" + step.name + "' must be monic of degree >= 2");
    }
    const Json& emb = field(s, "embedding");
    const std::string kind = field(emb, "kind").get<std::string>();
    if (kind == "real") {
      step.embedding = Embedding::real(rational_from_json(field(emb, "lo")), rational_from_json(field(emb, "hi")));
    } else if (kind == "imaginary") {
      step.embedding =
          Embedding::imaginary(rational_from_json(field(emb, "lo")), rational_from_json(field(emb, "hi")));
    } else if (kind != "complex") {
      bad("unknown embedding kind '" + kind + "'");
    }
    tower = tower->with_step(std::move(step));
  }
  return tower;
}

Json poly_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back({{"exponents", mono}, {"coefficient", field_element_json(c)}});
  return {{"variables", p.vars()}, {"terms", terms}, {"text", p.to_string()}};
}

MultiPoly poly_from_json(const Json& j, const TowerPtr& tower) {
  auto vars = field(j, "variables").get<std::vector<std::string>>();
  if (vars.size() > kMaxVariables) bad("too many variables");
  std::map<Monomial, FieldElement> terms;
  for (const auto& t : field(j, "terms")) {
    auto mono = field(t, "exponents").get<Monomial>();
    if (mono.size() != vars.size()) bad("exponent vector does not match the variables");
    for (int e : mono) {
      if (e < 0) bad("negative exponent");
    }
    FieldElement c = field_element_from_json(field(t, "coefficient"), tower);
    if (!c.is_zero()) terms[mono] += c;
  }
  return MultiPoly(vars, terms);
}

Json unipoly_json(const UniPoly& p) { return poly_json(MultiPoly::from_unipoly(p).with_vars({p.var()})); }

UniPoly unipoly_from_json(const Json& j, const TowerPtr& tower) {
  auto vars = field(j, "variables").get<std::vector<std::string>>();
  if (vars.size() != 1) bad("univariate polynomial needs exactly one variable");
  return poly_from_json(j, tower).to_unipoly(vars[0]);
}

Json surface_param_json(const SurfaceParam& s) {
  return {{"x", poly_json(s.x)},
          {"y", poly_json(s.y)},
          {"z", poly_json(s.z)},
          {"tower", tower_json(s.tower)},
          {"provenance", s.provenance},
          {"properness", properness_name(s.properness)}};
}

SurfaceParam surface_param_from_json(const Json& j) {
  TowerPtr tower = tower_from_json(field(j, "tower"));
  std::vector<std::string> provenance;
  if (j.contains("provenance")) provenance = j.at("provenance").get<std::vector<std::string>>();
  Properness prop = Properness::kUnknown;
  if (j.contains("properness")) prop = properness_from_name(j.at("properness").get<std::string>());
  SurfaceParam s = SurfaceParam::make(poly_from_json(field(j, "x"), tower), poly_from_json(field(j, "y"), tower),
                                      poly_from_json(field(j, "z"), tower), provenance, prop);
  s.tower = join_towers(s.tower, tower);
  return s;
}

}  // namespace revolutio
