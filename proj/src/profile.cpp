#include "revolutio/profile.hpp"

#include <algorithm>
#include <numeric>

#include "revolutio/algorithms.hpp"

namespace revolutio {

namespace {

const std::vector<std::string> kSpace{"x", "y", "z"};

UniPoly t_poly(const UniPoly& p) { return p.renamed("t"); }

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

void require_rational(const UniPoly& p, const char* what) {
  if (!p.is_rational()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " requires rational coefficients");
}

}  // namespace

// ------------------------------------------------------------ curve types

RationalFunction RationalFunction::make(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  UniPoly n = t_poly(num), d = t_poly(den);
  UniPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = n.divmod(g).first;
    d = d.divmod(g).first;
  }
  FieldElement lc_inv = d.leading_coefficient().inverse();
  return {n * lc_inv, d * lc_inv};
}

RationalFunction RationalFunction::polynomial(const UniPoly& p) {
  return {t_poly(p), UniPoly::constant("t", FieldElement(1))};
}

UniPoly RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorCode::kInvalidInput, "not a polynomial: " + to_string());
  return num * den.leading_coefficient().inverse();
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return as_polynomial().to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

PlaneCurveParam PlaneCurveParam::polynomial(const UniPoly& first, const UniPoly& second) {
  if (first.is_constant() && second.is_constant()) {
    throw Error(ErrorCode::kInvalidInput, "both curve components are constant");
  }
  return {RationalFunction::polynomial(first), RationalFunction::polynomial(second)};
}

PlaneCurveParam PlaneCurveParam::rational(const UniPoly& first_num, const UniPoly& first_den,
                                          const UniPoly& second_num, const UniPoly& second_den) {
  PlaneCurveParam c{RationalFunction::make(first_num, first_den), RationalFunction::make(second_num, second_den)};
  if (c.first.num.is_constant() && c.first.is_polynomial() && c.second.num.is_constant() &&
      c.second.is_polynomial()) {
    throw Error(ErrorCode::kInvalidInput, "both curve components are constant");
  }
  return c;
}

PlaneCurveParam::Kind PlaneCurveParam::kind() const {
  return first.is_polynomial() && second.is_polynomial() ? Kind::kPolynomial : Kind::kRational;
}

std::string PlaneCurveParam::to_string() const {
  return "[" + first.to_string() + ", " + second.to_string() + "]";
}

UniPoly AffineReparam::apply(const UniPoly& f, const std::string& v) const {
  UniPoly inner(v, {{1, scale}, {0, shift}});
  return f.compose(inner).renamed(v);
}

AffineReparam AffineReparam::compose(const AffineReparam& inner) const {
  return {scale * inner.scale, scale * inner.shift + shift};
}

AffineReparam AffineReparam::inverse() const {
  FieldElement inv = scale.inverse();
  return {inv, -(shift * inv)};
}

MultiPoly TubularSurface::implicit() const {
  return (var("x").pow(2) + var("y").pow(2) - substitute(p, var("z"))).with_vars(kSpace);
}

// --------------------------------------------------------------- P^2

MultiPoly implicit_to_p2(const MultiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::kInvalidInput, "zero polynomial");
  for (const auto& v : F.used_vars()) {
    if (v != "x" && v != "y" && v != "z") {
      throw Error(ErrorCode::kInvalidInput, "surface equation may only use x, y, z (found '" + v + "')");
    }
  }
  const MultiPoly f = F.with_vars(kSpace);
  // Profile section y = 0, then x^(2k) -> w^k.
  std::map<Monomial, FieldElement> g_terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[1] != 0) continue;
    if (m[0] % 2 != 0) {
      throw Error(ErrorCode::kNotSurfaceOfRevolution, "odd power of x in the profile section");
    }
    g_terms[{m[0] / 2, m[2]}] += c;
  }
  MultiPoly G({"w", "z"}, g_terms);
  MultiPoly back = substitute(G, {{"w", var("x").pow(2) + var("y").pow(2)}, {"z", var("z")}});
  if (back != f) {
    throw Error(ErrorCode::kNotSurfaceOfRevolution,
                "equation is not invariant under rotation about the z-axis");
  }
  return G;
}

PlaneCurveParam p2_param_from_graph(const MultiPoly& G) {
  MultiPoly g = G.with_vars({"w", "z"});
  if (g.degree_in("w") != 1) {
    throw Error(ErrorCode::kNotAGraph, "P^2 equation has degree " + std::to_string(g.degree_in("w")) +
                                           " in w; supply a parametrization of P^2 directly");
  }
  auto coeffs = g.coefficients_in("w");
  if (!coeffs[1].is_constant()) {
    throw Error(ErrorCode::kNotAGraph, "coefficient of w depends on z; supply a parametrization of P^2 directly");
  }
  FieldElement c = coeffs[1].constant_value();
  UniPoly rest = coeffs[0].to_unipoly("t");
  return PlaneCurveParam::polynomial(-rest * c.inverse(), UniPoly::variable("t"));
}

P2Decomposition decompose_paa(const PlaneCurveParam& c) {
  if (c.kind() != PlaneCurveParam::Kind::kPolynomial) {
    throw Error(ErrorCode::kInvalidInput, "decompose_paa needs a polynomial parametrization");
  }
  UniPoly f = c.first.as_polynomial();
  UniPoly b = c.second.as_polynomial();
  require_rational(f, "decompose_paa");
  require_rational(b, "decompose_paa");
  if (b.degree() < 1) {
    throw Error(ErrorCode::kDegenerateProfile, "second coordinate of P^2 is constant (a plane perpendicular to the axis)");
  }
  if (f.is_zero()) throw Error(ErrorCode::kDegenerateProfile, "first coordinate of P^2 vanishes (the axis itself)");
  auto sqf = squarefree_decompose(f);
  UniPoly p = UniPoly::constant("t", FieldElement(sqf.content));
  UniPoly a = UniPoly::constant("t", FieldElement(1));
  for (const auto& [factor, m] : sqf.factors) {
    if (m % 2 == 1) p = p * factor;
    if (m >= 2) a = a * factor.pow(static_cast<unsigned>(m / 2));
  }
  P2Decomposition d{p.renamed("t"), a.renamed("t"), b, std::max(p.degree(), 0)};
  if (d.first() != f) throw Error(ErrorCode::kInternal, "decompose_paa reconstruction failed");
  return d;
}

PlaneCurveParam polynomialize_rational(const PlaneCurveParam& c) {
  if (c.kind() == PlaneCurveParam::Kind::kPolynomial) return c;
  require_rational(c.first.num, "polynomialize_rational");
  require_rational(c.second.num, "polynomialize_rational");
  require_rational(c.first.den, "polynomialize_rational");
  require_rational(c.second.den, "polynomialize_rational");
  // Least common denominator; both denominators are monic.
  UniPoly g = gcd(c.first.den, c.second.den);
  UniPoly q = c.first.den * c.second.den.divmod(g).first;
  UniPoly core = squarefree_part(q);
  if (core.degree() != 1) {
    throw Error(ErrorCode::kNotPolynomialCurve,
                "denominator " + q.to_string() + " has " + std::to_string(core.degree()) +
                    " distinct roots; the curve has more than one point at infinity");
  }
  const FieldElement r = -core.coeff(0);
  // N(r + 1/s) / D(r + 1/s) with D = lc * (t - r)^k equals s^(k-n) * N~(s) / lc,
  // where N~(s) = sum_j N_j (r s + 1)^j s^(n-j).
  auto transform = [&](const RationalFunction& f) {
    const int n = f.num.degree() < 0 ? 0 : f.num.degree();
    const int k = f.den.degree();
    if (n > k) {
      throw Error(ErrorCode::kNotPolynomialCurve,
                  "component " + f.to_string() + " has a pole at infinity besides t = " + r.to_string());
    }
    UniPoly rs1("t", {{1, r}, {0, FieldElement(1)}});
    UniPoly s = UniPoly::variable("t");
    UniPoly out("t");
    for (const auto& [j, cj] : f.num.coeffs()) {
      out += rs1.pow(static_cast<unsigned>(j)) * s.pow(static_cast<unsigned>(k - j)) * cj;
    }
    return out * f.den.leading_coefficient().inverse();
  };
  return PlaneCurveParam::polynomial(transform(c.first), transform(c.second));
}

AffineReparam affine_equivalent(const PlaneCurveParam& f, const PlaneCurveParam& g) {
  if (f.kind() != PlaneCurveParam::Kind::kPolynomial || g.kind() != PlaneCurveParam::Kind::kPolynomial) {
    throw Error(ErrorCode::kInvalidInput, "affine_equivalent needs polynomial parametrizations");
  }
  const UniPoly fs[2] = {f.first.as_polynomial(), f.second.as_polynomial()};
  const UniPoly gs[2] = {g.first.as_polynomial(), g.second.as_polynomial()};
  auto verify = [&](const AffineReparam& r) {
    return r.apply(fs[0]) == gs[0].renamed("t") && r.apply(fs[1]) == gs[1].renamed("t");
  };
  std::vector<int> degrees;
  for (int i = 0; i < 2; ++i) {
    if (fs[i].degree() != gs[i].degree()) {
      throw Error(ErrorCode::kNotEquivalent, "component degrees differ");
    }
    if (fs[i].degree() >= 1) degrees.push_back(fs[i].degree());
  }
  if (degrees.empty()) throw Error(ErrorCode::kInvalidInput, "both curve components are constant");

  auto ratio = [&](int i) { return gs[i].leading_coefficient() / fs[i].leading_coefficient(); };
  auto shift_for = [&](int i, const FieldElement& scale) {
    const int d = fs[i].degree();
    FieldElement sd1 = scale.pow(static_cast<unsigned>(d - 1));
    return (gs[i].coeff(d - 1) - fs[i].coeff(d - 1) * sd1) *
           (fs[i].leading_coefficient() * FieldElement(static_cast<long>(d)) * sd1).inverse();
  };

  std::vector<FieldElement> scales;
  const int i0 = fs[0].degree() >= 1 ? 0 : 1;
  if (degrees.size() == 2 && std::gcd(degrees[0], degrees[1]) == 1) {
    // scale = R0^x * R1^y with x*d0 + y*d1 = 1.
    int x = 0, y = 0;
    for (int cx = -degrees[1]; cx <= degrees[1]; ++cx) {
      int rem = 1 - cx * degrees[0];
      if (rem % degrees[1] == 0) {
        x = cx;
        y = rem / degrees[1];
        break;
      }
    }
    auto power = [](const FieldElement& b, int e) {
      return e >= 0 ? b.pow(static_cast<unsigned>(e)) : b.inverse().pow(static_cast<unsigned>(-e));
    };
    scales.push_back(power(ratio(0), x) * power(ratio(1), y));
  } else {
    int i = i0;
    if (degrees.size() == 2 && fs[1].degree() < fs[0].degree()) i = 1;
    const int d = fs[i].degree();
    FieldElement R = ratio(i);
    if (d == 1) {
      scales.push_back(R);
    } else if (R.is_rational()) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
      coeffs[0] = -R.rational_value();
      coeffs[static_cast<std::size_t>(d)] = 1;
      auto roots = rational_roots(UniPoly::from_rationals("t", coeffs));
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (const auto& r : roots) scales.emplace_back(r);
    } else {
      throw Error(ErrorCode::kUnsupported, "scale search needs rational leading coefficients");
    }
  }
  for (const auto& scale : scales) {
    if (scale.is_zero()) continue;
    AffineReparam r{scale, shift_for(i0, scale)};
    if (verify(r)) return r;
  }
  throw Error(ErrorCode::kNotEquivalent, "no affine reparametrization maps one curve onto the other");
}

TubularSurface tubularize(const P2Decomposition& d) { return {d.p.renamed("z")}; }

MultiPoly implicit_surface(const P2Decomposition& d) {
  MultiPoly t = var("t");
  MultiPoly f = var("w") - substitute(d.first(), t);
  MultiPoly g = var("z") - substitute(d.b, t);
  MultiPoly r = resultant(f, g, "t");
  MultiPoly F = substitute(r, {{"w", var("x").pow(2) + var("y").pow(2)}, {"z", var("z")}}).with_vars(kSpace);
  return F * F.leading_term().second.inverse();
}

}  // namespace revolutio
