#include "revolutio/pipeline.hpp"

#include "revolutio/catalog.hpp"
#include "revolutio/expression.hpp"
#include "revolutio/quadrics.hpp"
#include "revolutio/real_param.hpp"
#include "revolutio/verify.hpp"

namespace revolutio {

namespace {

// Curve components may be written in t or s; both mean the curve parameter.
UniPoly parse_component(const std::string& text) {
  ParseOptions options;
  options.variables = {"t", "s"};
  MultiPoly p = parse_polynomial(text, options);
  if (p.uses("t") && p.uses("s")) {
    throw Error(ErrorCode::kInvalidInput, "curve component '" + text + "' mixes t and s");
  }
  return p.to_unipoly(p.uses("s") ? "s" : "t").renamed("t");
}

MultiPoly parse_surface(const std::string& text) {
  ParseOptions options;
  options.variables = {"x", "y", "z"};
  MultiPoly F = parse_polynomial(text, options);
  if (F.is_constant()) throw Error(ErrorCode::kInvalidInput, "implicit equation must be a non-constant polynomial");
  if (F.total_degree() > 40) throw Error(ErrorCode::kInvalidInput, "implicit equation degree exceeds 40");
  return F;
}

Json curve_json(const PlaneCurveParam& c) {
  auto rf = [](const RationalFunction& f) {
    return Json{{"numerator", unipoly_json(f.num)}, {"denominator", unipoly_json(f.den)}, {"text", f.to_string()}};
  };
  return {{"kind", c.kind() == PlaneCurveParam::Kind::kPolynomial ? "polynomial" : "rational"},
          {"first", rf(c.first)},
          {"second", rf(c.second)},
          {"text", c.to_string()}};
}

Json decomposition_json(const P2Decomposition& d) {
  return {{"p", unipoly_json(d.p)}, {"a", unipoly_json(d.a)}, {"b", unipoly_json(d.b)}, {"delta", d.delta}};
}

Json reparam_json(const AffineReparam& r) {
  return {{"scale", field_element_json(r.scale)},
          {"shift", field_element_json(r.shift)},
          {"text", "s -> " + r.scale.to_string() + "*s + " + r.shift.to_string()}};
}

Json witness_json(const SurfaceParam& s, const MultiPoly& F, bool fiber) {
  return {{"parametrization", surface_param_json(s)}, {"verification", verification_json(s, F, fiber)}};
}

Json quadric_json(const MultiPoly& F) {
  QuadricInvariants inv = quadric_invariants(F);
  QuadricReport r = analyze_quadric(F);
  Json j{{"class", quadric_class_label(r.cls)},
         {"invariants",
          {{"rank4", inv.full.rank},
           {"signature4", inv.full.abs_signature()},
           {"rank3", inv.quadratic.rank},
           {"signature3", inv.quadratic.abs_signature()}}},
         {"table", {{"group", r.table_group}, {"name", r.table_name}, {"entry", r.table_entry}}},
         {"polynomial_over_c", r.polynomial_over_c ? Json(*r.polynomial_over_c) : Json(nullptr)},
         {"polynomial_over_r", real_verdict_kind_name(r.polynomial_over_r)}};
  if (r.witness) {
    j["witness"] = witness_json(*r.witness, F, true);
  } else {
    j["refusal"] = r.refusal;
  }
  return j;
}

CommandResult finish(Json report, const Error* failure) {
  CommandResult out;
  if (failure) {
    report["error"] = error_json(*failure);
    out.exit_code = exit_code(failure->code());
  }
  report["result"] = {{"code", failure ? std::string(error_code_name(failure->code())) : std::string("OK")},
                      {"exit_code", out.exit_code}};
  out.report = std::move(report);
  return out;
}

Json header(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

// Runs body(report); errors become the report's error and exit status.
template <typename Body>
CommandResult guarded(Json report, Body body) {
  try {
    std::optional<Error> refusal = body(report);
    return finish(std::move(report), refusal ? &*refusal : nullptr);
  } catch (const Error& e) {
    return finish(std::move(report), &e);
  } catch (const std::exception& e) {
    Error internal(ErrorCode::kInternal, e.what());
    return finish(std::move(report), &internal);
  }
}

}  // namespace

Json error_json(const Error& e) {
  Json j{{"code", error_code_name(e.code())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["position"] = pe->position();
  return j;
}

Json verification_json(const SurfaceParam& s, const MultiPoly& F, bool fiber) {
  VerificationReport r = verify_full(s, F, false);
  if (!r.on_surface) {
    throw Error(ErrorCode::kInternal, "witness does not satisfy " + F.to_string() + "; residual " +
                                          r.residual.to_string());
  }
  if (r.jacobian_rank != 2) throw Error(ErrorCode::kInternal, "witness is not dominant");
  Json j{{"on_surface", true}, {"residual", poly_json(r.residual)}, {"jacobian_rank", r.jacobian_rank}};
  j["fiber_count"] = nullptr;
  if (fiber) {
    try {
      auto [count, sample] = fiber_count_auto(s);
      j["fiber_count"] = count;
      j["fiber_sample"] = {rational_json(sample.first), rational_json(sample.second)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIndeterminate) throw;
      j["fiber_note"] = e.what();
    }
  }
  return j;
}

CommandResult analyze(const AnalyzeRequest& request) {
  Json report = header("analyze");
  static const char* kinds[] = {"implicit", "p2", "p2-rational"};
  report["input"] = {{"kind", kinds[static_cast<int>(request.kind)]}, {"texts", request.texts}};
  return guarded(std::move(report), [&](Json& out) -> std::optional<Error> {
    const std::size_t expected[] = {1, 2, 4};
    if (request.texts.size() != expected[static_cast<int>(request.kind)]) {
      throw Error(ErrorCode::kInvalidInput, "wrong number of input expressions");
    }
    std::optional<MultiPoly> F;
    PlaneCurveParam curve;
    switch (request.kind) {
      case AnalyzeRequest::Kind::kImplicit: {
        F = parse_surface(request.texts[0]);
        out["implicit"] = poly_json(*F);
        MultiPoly G = implicit_to_p2(*F);
        out["p2_implicit"] = poly_json(G);
        curve = p2_param_from_graph(G);
        break;
      }
      case AnalyzeRequest::Kind::kP2:
        curve = PlaneCurveParam::polynomial(parse_component(request.texts[0]), parse_component(request.texts[1]));
        break;
      case AnalyzeRequest::Kind::kP2Rational: {
        PlaneCurveParam rational =
            PlaneCurveParam::rational(parse_component(request.texts[0]), parse_component(request.texts[1]),
                                      parse_component(request.texts[2]), parse_component(request.texts[3]));
        out["p2_rational"] = curve_json(rational);
        curve = polynomialize_rational(rational);
        break;
      }
    }
    out["p2"] = curve_json(curve);
    if (!curve.first.den.is_constant() || !curve.second.den.is_constant() ||
        !curve.first.num.is_rational() || !curve.second.num.is_rational()) {
      throw Error(ErrorCode::kUnsupported, "the pipeline needs a polynomial P^2 parametrization over Q");
    }
    P2Decomposition d = decompose_paa(curve);
    out["decomposition"] = decomposition_json(d);
    if (!F) {
      F = implicit_surface(d);
      out["implicit"] = poly_json(*F);
    }
    TubularSurface T = tubularize(d);
    out["tubularization"] = {{"p", unipoly_json(T.p)}, {"implicit", poly_json(T.implicit())}};

    std::optional<Error> refusal;
    try {
      SurfaceParam s = sor_complex_param(d);
      out["complex"] = {{"status", "polynomial"}, {"witness", witness_json(s, *F, request.fiber)}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotPolynomial) throw;
      out["complex"] = {{"status", "not-polynomial"}, {"error", error_json(e)}};
      refusal = e;
    }

    RealVerdict v = real_param(d);
    Json real{{"status", real_status_name(v.status)}, {"code", real_status_code(v.status)}, {"reason", v.reason}};
    if (v.witness) {
      if (!v.witness->tower->all_real()) throw Error(ErrorCode::kInternal, "real witness over a non-real tower");
      real["witness"] = witness_json(*v.witness, *F, request.fiber);
    }
    out["real"] = real;
    ConjectureEvidence ev = v.evidence ? *v.evidence : conjecture_predicate(d);
    out["conjecture"] = {{"real_roots", ev.real_roots},
                         {"two_dimensional", ev.two_dimensional},
                         {"satisfied", ev.satisfied()}};

    if (request.kind == AnalyzeRequest::Kind::kImplicit && F->total_degree() == 2) {
      try {
        out["quadric"] = quadric_json(*F);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInternal) throw;
        out["quadric"] = {{"error", error_json(e)}};
      }
    }
    return refusal;
  });
}

CommandResult quadric_command(const std::string& text) {
  Json report = header("quadric");
  report["input"] = {{"kind", "implicit"}, {"texts", {text}}};
  return guarded(std::move(report), [&](Json& out) -> std::optional<Error> {
    MultiPoly F = parse_surface(text);
    out["implicit"] = poly_json(F);
    out["quadric"] = quadric_json(F);
    return std::nullopt;
  });
}

CommandResult p2_decompose(const std::string& first, const std::string& second) {
  Json report = header("p2 decompose");
  report["input"] = {{"kind", "p2"}, {"texts", {first, second}}};
  return guarded(std::move(report), [&](Json& out) -> std::optional<Error> {
    PlaneCurveParam c = PlaneCurveParam::polynomial(parse_component(first), parse_component(second));
    out["p2"] = curve_json(c);
    P2Decomposition d = decompose_paa(c);
    out["decomposition"] = decomposition_json(d);
    out["tubularization"] = {{"implicit", poly_json(tubularize(d).implicit())}};
    return std::nullopt;
  });
}

CommandResult p2_polynomialize(const std::vector<std::string>& texts) {
  Json report = header("p2 polynomialize");
  report["input"] = {{"kind", "p2-rational"}, {"texts", texts}};
  return guarded(std::move(report), [&](Json& out) -> std::optional<Error> {
    if (texts.size() != 4) throw Error(ErrorCode::kInvalidInput, "expected four expressions");
    PlaneCurveParam c = PlaneCurveParam::rational(parse_component(texts[0]), parse_component(texts[1]),
                                                  parse_component(texts[2]), parse_component(texts[3]));
    out["p2_rational"] = curve_json(c);
    out["p2"] = curve_json(polynomialize_rational(c));
    return std::nullopt;
  });
}

CommandResult p2_equiv(const std::vector<std::string>& texts) {
  Json report = header("p2 equiv");
  report["input"] = {{"kind", "p2-pair"}, {"texts", texts}};
  return guarded(std::move(report), [&](Json& out) -> std::optional<Error> {
    if (texts.size() != 4) throw Error(ErrorCode::kInvalidInput, "expected four expressions");
    PlaneCurveParam f = PlaneCurveParam::polynomial(parse_component(texts[0]), parse_component(texts[1]));
    PlaneCurveParam g = PlaneCurveParam::polynomial(parse_component(texts[2]), parse_component(texts[3]));
    out["reparametrization"] = reparam_json(affine_equivalent(f, g));
    return std::nullopt;
  });
}

CommandResult verify_catalog_command(bool fiber, bool parallel) {
  return guarded(header("verify-catalog"), [&](Json& out) -> std::optional<Error> {
    Json entries = Json::array();
    bool ok = true;
    for (const auto& r : verify_catalog(fiber, parallel)) {
      ok = ok && r.on_surface && r.jacobian_rank == 2;
      entries.push_back({{"name", r.name},
                         {"on_surface", r.on_surface},
                         {"residual", r.residual},
                         {"jacobian_rank", r.jacobian_rank},
                         {"fiber_count", r.fiber_count ? Json(*r.fiber_count) : Json(nullptr)},
                         {"millis", r.millis}});
    }
    Json identities = Json::array();
    for (const auto& c : catalog_identities()) {
      ok = ok && c.ok();
      identities.push_back({{"name", c.name}, {"zero", c.ok()}});
    }
    out["entries"] = entries;
    out["identities"] = identities;
    if (!ok) throw Error(ErrorCode::kInternal, "catalog verification failed");
    return std::nullopt;
  });
}

}  // namespace revolutio
