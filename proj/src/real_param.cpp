#include "revolutio/real_param.hpp"

#include <cstdlib>

#include "revolutio/algorithms.hpp"
#include "revolutio/verify.hpp"

namespace revolutio {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly constant(const FieldElement& c) { return MultiPoly::constant(c); }
MultiPoly constant(long c) { return MultiPoly::constant(FieldElement(c)); }

void require_rational(const P2Decomposition& d) {
  if (!d.p.is_rational() || !d.a.is_rational() || !d.b.is_rational()) {
    throw Error(ErrorCode::kInvalidInput, "real case analysis needs rational p, a, b");
  }
}

// A lift by [a(z)x, a(z)y, b(z)] with constant a and linear b is affine.
Properness lifted_properness(const P2Decomposition& d, Properness tubular) {
  if (tubular == Properness::kProper && d.a.degree() == 0 && d.b.degree() == 1) return Properness::kProper;
  if (tubular == Properness::kNonProperDegree2) return tubular;
  return Properness::kUnknown;
}

RealVerdict verdict(RealStatus status, std::string reason, std::optional<SurfaceParam> witness = std::nullopt) {
  RealVerdict v;
  v.status = status;
  v.reason = std::move(reason);
  v.witness = std::move(witness);
  return v;
}

// The tubular parametrization [x, y, z] lifted by a and b.
SurfaceParam lift(const SurfaceParam& tubular, const P2Decomposition& d) {
  SurfaceParam s = tubular_lift(tubular, d.a, d.b);
  require_dominant(s);
  return s;
}

}  // namespace

std::string real_status_name(RealStatus s) {
  switch (s) {
    case RealStatus::kRealProper: return "real-proper";
    case RealStatus::kRealNonproperDoubleCover: return "real-nonproper-double-cover";
    case RealStatus::kNoRealParametrization: return "no-real-parametrization";
    case RealStatus::kEmptyRealLocus: return "empty-real-locus";
    case RealStatus::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

std::string real_status_code(RealStatus s) {
  switch (s) {
    case RealStatus::kRealProper: return "REAL_PROPER";
    case RealStatus::kRealNonproperDoubleCover: return "REAL_NONPROPER_DOUBLE_COVER";
    case RealStatus::kNoRealParametrization: return "NO_REAL_PARAMETRIZATION";
    case RealStatus::kEmptyRealLocus: return "EMPTY_REAL_LOCUS";
    case RealStatus::kUnresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

// ------------------------------------------------------------- witnesses

std::array<MultiPoly, 3> one_sheet_abc() {
  MultiPoly u = var("u"), v = var("v"), one = constant(1);
  MultiPoly w = u * (u * v + one);
  return {v - w, constant(2) * u * v + one, w + v};
}

std::array<MultiPoly, 3> two_sheet_q() {
  MultiPoly u = var("u"), v = var("v"), one = constant(1);
  MultiPoly q0 = constant(-2) * (u.pow(2) + constant(2) * u.pow(3) * v - v.pow(2) + u.pow(4) * v.pow(2));
  MultiPoly q1 = constant(-2) * (u + v + constant(3) * u.pow(2) * v + constant(2) * u * v.pow(2) +
                                 constant(2) * u.pow(3) * v.pow(2));
  MultiPoly q2 = one + constant(4) * u * v + constant(4) * u.pow(3) * v + constant(2) * v.pow(2) +
                 constant(2) * u.pow(4) * v.pow(2) + u.pow(2) * (constant(2) + constant(4) * v.pow(2));
  return {q0, q1, q2};
}

std::array<MultiPoly, 4> two_sheet_q1234() {
  MultiPoly u = var("u"), v = var("v"), one = constant(1);
  MultiPoly w = u * (one + u * v);
  MultiPoly q1 = v - w;
  return {q1, one + v + constant(2) * u * v + w, constant(-1) + v - constant(2) * u * v + w, q1};
}

SurfaceParam sphere_witness() {
  FieldElement i = imaginary_unit(Tower::base()).second;
  auto abc = one_sheet_abc();
  return SurfaceParam::make(abc[0], abc[1], constant(i) * abc[2], {"complex sphere witness [A, B, iC]"},
                            Properness::kUnknown);
}

SurfaceParam cubic_example() {
  FieldElement r3 = real_sqrt(Tower::base(), 3).second;
  MultiPoly u = var("u"), v = var("v"), one = constant(1);
  MultiPoly s = constant(r3);
  MultiPoly half = constant(FieldElement(Rational(1, 2)));
  MultiPoly x = half * u.pow(3) * (v.pow(3) - constant(2) * s * v.pow(2) + constant(4) * v - s) -
                half * u.pow(2) + one;
  MultiPoly y = half * u.pow(3) * (s * v.pow(3) - constant(4) * v.pow(2) + constant(2) * s * v - one) +
                half * u.pow(2) * (constant(2) * s * v.pow(2) - constant(4) * v + s) + u;
  MultiPoly z = u.pow(2) * (v.pow(2) - s * v + one) + u * v;
  return SurfaceParam::make(x, y, z, {"real witness for x^2 + y^2 - z^3 - 1 over Q(sqrt 3)"}, Properness::kUnknown);
}

MultiPoly dioph_identity_residual(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3,
                                  const MultiPoly& q4) {
  auto p = dioph_point(q1, q2, q3, q4);
  MultiPoly det = q1 * q4 - q2 * q3;
  return p[0] * p[0] + p[1] * p[1] - p[2] * p[2] + det * det;
}

std::array<MultiPoly, 3> dioph_point(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3,
                                     const MultiPoly& q4) {
  MultiPoly half = constant(FieldElement(Rational(1, 2)));
  MultiPoly s13 = q1 * q1 + q3 * q3, s24 = q2 * q2 + q4 * q4;
  return {q1 * q2 + q3 * q4, half * (s13 - s24), half * (s13 + s24)};
}

// ------------------------------------------------------------ quadratics

CanonicalQuadratic canonicalize_quadratic(const UniPoly& p) {
  if (p.degree() != 2) throw Error(ErrorCode::kInvalidInput, "canonicalize_quadratic needs degree 2");
  if (!p.is_rational()) throw Error(ErrorCode::kInvalidInput, "canonicalize_quadratic needs rational coefficients");
  const Rational c2 = p.coeff(2).rational_value(), c1 = p.coeff(1).rational_value();
  CanonicalQuadratic q;
  q.sign = sign(c2);
  const Rational shift = -c1 / (2 * c2);
  q.lambda = p.evaluate(FieldElement(shift)).rational_value();
  if (q.lambda == 0) throw Error(ErrorCode::kInvalidInput, "p is not square-free");
  auto [tower, scale] = real_sqrt(Tower::base(), Rational(1 / abs(c2)));
  q.reparam = {scale, FieldElement(shift)};
  UniPoly expected = UniPoly::from_rationals("t", {q.lambda, Rational(0), Rational(q.sign)});
  if (q.reparam.apply(p) != expected) throw Error(ErrorCode::kInternal, "completing the square failed");
  return q;
}

// ------------------------------------------------------------------ cases

RealVerdict real_param_delta1(const P2Decomposition& d) {
  if (d.p.degree() != 1) throw Error(ErrorCode::kInvalidInput, "real_param_delta1 needs deg p = 1");
  require_rational(d);
  MultiPoly u = var("u"), v = var("v");
  MultiPoly n = u * u + v * v;
  // p(t~) = u^2 + v^2 for t~ = (N - c0)/c1.
  const FieldElement c1 = d.p.coeff(1), c0 = d.p.coeff(0);
  MultiPoly t = (n - constant(c0)) * c1.inverse();
  MultiPoly at = substitute(d.a, t);
  Properness prop = lifted_properness(d, Properness::kProper);
  SurfaceParam s = SurfaceParam::make(at * u, at * v, substitute(d.b, t),
                                      {"p normalized to t by t -> (t - " + c0.to_string() + ")/" + c1.to_string(),
                                       "paraboloid tubularization [u, v, u^2 + v^2]",
                                       "real witness [a(N)u, a(N)v, b(N)]"},
                                      prop);
  require_dominant(s);
  return verdict(RealStatus::kRealProper, "paraboloid tubularization", s);
}

RealVerdict real_param_delta2(const P2Decomposition& d) {
  if (d.p.degree() != 2) throw Error(ErrorCode::kInvalidInput, "real_param_delta2 needs deg p = 2");
  require_rational(d);
  CanonicalQuadratic q = canonicalize_quadratic(d.p);
  if (q.sign < 0 && q.lambda < 0) {
    return verdict(RealStatus::kEmptyRealLocus, "p = -z^2 - |lambda| < 0: no real points");
  }
  if (q.sign < 0) {
    return verdict(RealStatus::kNoRealParametrization, "compact (sphere tubularization)");
  }
  TowerPtr tower = q.reparam.scale.tower();
  auto [t1, k] = real_sqrt(tower, abs(q.lambda));
  MultiPoly K = constant(k);
  // z of the canonical form maps back to t = scale*z + shift.
  auto back = [&](const MultiPoly& z) { return constant(q.reparam.scale) * z + constant(q.reparam.shift); };
  const std::string canon = "p(" + q.reparam.scale.to_string() + "*z + " + q.reparam.shift.to_string() +
                            ") = z^2 " + (q.lambda > 0 ? "+ " : "- ") + to_string(abs(q.lambda));
  if (q.lambda > 0) {
    auto abc = one_sheet_abc();
    SurfaceParam tub = SurfaceParam::make(K * abc[0], K * abc[1], back(K * abc[2]),
                                          {canon, "one-sheeted hyperboloid sqrt|lambda| [A, B, C]"},
                                          Properness::kProper);
    SurfaceParam s = lift(tub, d);
    s.properness = lifted_properness(d, Properness::kProper);
    return verdict(RealStatus::kRealProper, "one-sheeted hyperboloid tubularization", s);
  }
  auto qs = two_sheet_q();
  SurfaceParam tub = SurfaceParam::make(K * qs[0], K * qs[1], back(K * qs[2]),
                                        {canon, "two-sheeted hyperboloid sqrt|lambda| q(u, v), doubly covering one sheet"},
                                        Properness::kNonProperDegree2);
  SurfaceParam s = lift(tub, d);
  s.properness = Properness::kNonProperDegree2;
  return verdict(RealStatus::kRealNonproperDoubleCover, "two-sheeted hyperboloid tubularization", s);
}

RealVerdict real_param_delta0(const P2Decomposition& d) {
  if (d.p.degree() != 0) throw Error(ErrorCode::kInvalidInput, "real_param_delta0 needs constant p");
  require_rational(d);
  const Rational c = d.p.coeff(0).rational_value();
  if (c < 0) return verdict(RealStatus::kEmptyRealLocus, "p < 0: only the points on the axis where a = 0 are real");
  if (d.a.degree() < 1) return verdict(RealStatus::kNoRealParametrization, "cylinder");
  if (sturm_real_root_count(squarefree_part(d.a)) > 0) {
    SurfaceParam s = cylinder_case_param(d);
    if (!s.tower->all_real()) throw Error(ErrorCode::kInternal, "real root shift produced a non-real tower");
    return verdict(RealStatus::kRealProper, "a has a real root; shifted to 0", s);
  }
  // No real root: pick the quadratic factor with the smallest |discriminant|.
  std::optional<UniPoly> best;
  Rational best_disc;
  for (const auto& [factor, m] : squarefree_decompose(d.a).factors) {
    for (const auto& q : rational_quadratic_factors(factor)) {
      Rational b = q.coeff(1).rational_value(), c0 = q.coeff(0).rational_value();
      Rational disc = abs(b * b - 4 * c0);
      if (!best || disc < best_disc) {
        best = q;
        best_disc = disc;
      }
    }
  }
  if (!best) return verdict(RealStatus::kUnresolved, "a has no real root and no rational quadratic factor");
  const UniPoly& q = *best;
  const Rational beta = q.coeff(1).rational_value(), gamma = q.coeff(0).rational_value();
  const Rational sigma = -beta / 2;
  auto [t1, k] = real_sqrt(Tower::base(), c);
  auto [t2, mu] = real_sqrt(t1, Rational(gamma - beta * beta / 4));
  UniPoly a_hat = d.a.divmod(q).first;
  auto abc = one_sheet_abc();
  const auto& A = abc[0];
  const auto& B = abc[1];
  MultiPoly t = constant(mu) * abc[2] + constant(FieldElement(sigma));  // q(t) = mu^2 (C^2 + 1)
  MultiPoly scale = constant(k * mu * mu) * substitute(a_hat, t);
  SurfaceParam s = SurfaceParam::make(constant(2) * A * B * scale, (B * B - A * A) * scale, substitute(d.b, t),
                                      {"sqrt(p) = " + k.to_string() + " absorbed into a",
                                       "quadratic factor " + q.to_string() + " normalized to t^2 + 1 by t = " +
                                           mu.to_string() + "*C + " + to_string(sigma),
                                       "s = A/B, t = C with C^2 + 1 = A^2 + B^2"},
                                      Properness::kUnknown);
  require_dominant(s);
  return verdict(RealStatus::kRealProper, "a has no real root; quadratic factor normalized to t^2 + 1", s);
}

ConjectureEvidence conjecture_predicate(const P2Decomposition& d) {
  if (!d.p.is_rational()) throw Error(ErrorCode::kInvalidInput, "conjecture predicate needs rational p");
  ConjectureEvidence e;
  if (d.p.degree() >= 1) e.real_roots = sturm_real_root_count(squarefree_part(d.p));
  e.two_dimensional = e.real_roots > 0 || sign(d.p.leading_coefficient().rational_value()) > 0;
  return e;
}

RealVerdict real_param(const P2Decomposition& d) {
  RealVerdict v;
  switch (d.delta) {
    case 0: v = real_param_delta0(d); break;
    case 1: v = real_param_delta1(d); break;
    case 2: v = real_param_delta2(d); break;
    default: {
      const UniPoly t = UniPoly::variable("t");
      if (d.p == UniPoly::from_rationals("t", {1, 0, 0, 1}) && d.a.degree() == 0 && d.a.coeff(0).is_one() &&
          d.b == t) {
        v = verdict(RealStatus::kRealProper, "known real witness for x^2 + y^2 - z^3 - 1", cubic_example());
      } else {
        v = verdict(RealStatus::kUnresolved, "Delta >= 3 is open; conjecture evidence attached");
      }
    }
  }
  v.evidence = conjecture_predicate(d);
  return v;
}

}  // namespace revolutio
