#include "revolutio/complex_param.hpp"

#include "revolutio/algorithms.hpp"
#include "revolutio/verify.hpp"

namespace revolutio {

namespace {

const std::vector<std::string> kParams{"u", "v"};

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly constant(const FieldElement& c) { return MultiPoly::constant(c); }

// Exact quotient of a polynomial with a(0) = 0 by t.
UniPoly divide_by_t(const UniPoly& a) {
  if (!a.coeff(0).is_zero()) throw Error(ErrorCode::kInconsistentRoot, "shifted polynomial does not vanish at 0");
  std::map<int, FieldElement> coeffs;
  for (const auto& [e, c] : a.coeffs()) coeffs.emplace(e - 1, c);
  return UniPoly(a.var(), coeffs);
}

}  // namespace

std::string properness_name(Properness p) {
  switch (p) {
    case Properness::kProper: return "proper";
    case Properness::kNonProperDegree2: return "non-proper-degree-2";
    case Properness::kUnknown: return "unknown";
  }
  return "unknown";
}

SurfaceParam SurfaceParam::make(const MultiPoly& x, const MultiPoly& y, const MultiPoly& z,
                                std::vector<std::string> provenance, Properness properness) {
  SurfaceParam s;
  s.x = x.with_vars(kParams);
  s.y = y.with_vars(kParams);
  s.z = z.with_vars(kParams);
  s.tower = join_towers(join_towers(x.tower(), y.tower()), z.tower());
  s.provenance = std::move(provenance);
  s.properness = properness;
  return s;
}

RootSpec choose_root_alpha(const UniPoly& p, const TowerPtr& tower) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::kInvalidInput, "p is constant; the constant case is handled by cylinder_case_param");
  }
  RootChoice c = choose_root(tower, p, "alpha");
  RootSpec r{c.value, c.rational, c.min_poly, c.tower};
  if (!p.evaluate(r.value).is_zero()) throw Error(ErrorCode::kInternal, "chosen root does not annihilate p");
  return r;
}

MultiPoly factor_h(const UniPoly& p, const RootSpec& alpha) {
  MultiPoly shifted = substitute(p, var("u") * var("v") + constant(alpha.value));
  MultiPoly h;
  try {
    h = exact_divide(shifted, var("v"));
  } catch (const NotDivisibleError&) {
    throw Error(ErrorCode::kInconsistentRoot, alpha.value.to_string() + " is not a root of " + p.to_string());
  }
  h = h.with_vars(kParams);
  if (var("v") * h != shifted) throw Error(ErrorCode::kInternal, "v*h != p(uv + alpha)");
  return h;
}

SurfaceParam tubular_polynomial_param(const TubularSurface& T, const RootSpec& alpha) {
  auto [tower, i] = imaginary_unit(alpha.tower);
  (void)tower;
  MultiPoly h = factor_h(T.p, alpha);
  const FieldElement half(Rational(1, 2));
  MultiPoly v = var("v");
  SurfaceParam s = SurfaceParam::make(constant(i * half) * (v - h), constant(half) * (v + h),
                                      var("u") * v + constant(alpha.value),
                                      {"root alpha = " + alpha.value.to_string() + " of p = " + T.p.to_string(),
                                       "h-factorization p(uv + alpha) = v*h",
                                       "tubular parametrization [(i/2)(v - h), (1/2)(v + h), uv + alpha]"});
  if (!verify_on_surface(s, T.implicit()).on_surface) {
    throw Error(ErrorCode::kInternal, "tubular parametrization is not on x^2 + y^2 - p(z)");
  }
  return s;
}

SurfaceParam tubular_lift(const SurfaceParam& s, const UniPoly& a, const UniPoly& b) {
  if (b.degree() < 1) throw Error(ErrorCode::kDegenerateProfile, "b is constant; the lift is not dominant");
  MultiPoly az = substitute(a, s.z);
  SurfaceParam out = SurfaceParam::make(az * s.x, az * s.y, substitute(b, s.z), s.provenance, s.properness);
  out.provenance.push_back("tubular lift [a(z)x, a(z)y, b(z)] with a = " + a.to_string() + ", b = " + b.to_string());
  return out;
}

SurfaceParam sor_complex_param(const P2Decomposition& d) {
  if (d.b.degree() < 1) throw Error(ErrorCode::kDegenerateProfile, "b is constant");
  if (d.delta == 0) return cylinder_case_param(d);
  RootSpec alpha = choose_root_alpha(d.p);
  SurfaceParam s = tubular_lift(tubular_polynomial_param(tubularize(d), alpha), d.a, d.b);
  s.properness = Properness::kUnknown;
  require_dominant(s);
  return s;
}

SurfaceParam cylinder_case_param(const P2Decomposition& d) {
  if (d.p.degree() != 0) throw Error(ErrorCode::kInvalidInput, "cylinder_case_param needs a constant p");
  if (d.a.degree() < 1) {
    throw Error(ErrorCode::kNotPolynomial,
                "cylinder of revolution: p and a are constant, the only polynomial curves on it are rulings");
  }
  if (d.b.degree() < 1) throw Error(ErrorCode::kDegenerateProfile, "b is constant");
  std::vector<std::string> provenance;
  const Rational c = d.p.leading_coefficient().rational_value();
  TowerPtr tower = Tower::base();
  FieldElement k(1);
  if (c != 1) {
    auto [t1, root] = real_sqrt(tower, abs(c));
    tower = t1;
    k = root;
    if (c < 0) {
      auto [t2, i] = imaginary_unit(tower);
      tower = t2;
      k = k * i;
    }
    provenance.push_back("sqrt(" + to_string(c) + ") = " + k.to_string() + " absorbed into a");
  }
  RootChoice r = choose_root(tower, d.a, "r");
  tower = r.tower;
  UniPoly shift("t", {{1, FieldElement(1)}, {0, r.value}});
  UniPoly a_shifted = (d.a * k).compose(shift);
  UniPoly b_shifted = d.b.compose(shift);
  provenance.push_back("root r = " + r.value.to_string() + " of a moved to 0 (t -> t + r)");
  UniPoly a_tilde = divide_by_t(a_shifted);
  MultiPoly u = var("u"), v = var("v");
  MultiPoly n = u * u + v * v;
  MultiPoly at = substitute(a_tilde, n);
  provenance.push_back("substitution [s, t] -> [-u/v, u^2 + v^2]");
  SurfaceParam s = SurfaceParam::make(constant(FieldElement(-2)) * u * v * at, (v * v - u * u) * at,
                                      substitute(b_shifted, n), provenance, Properness::kUnknown);
  require_dominant(s);
  return s;
}

RationalSurfaceParam rotate_curve(const UniPoly& x, const UniPoly& y, const UniPoly& z) {
  if (z.degree() < 1) throw Error(ErrorCode::kDegenerateProfile, "z(t) is constant");
  MultiPoly s = var("s");
  MultiPoly one = constant(FieldElement(1));
  MultiPoly t = var("t");
  MultiPoly X = substitute(x, t), Y = substitute(y, t), Z = substitute(z, t);
  MultiPoly two_s = constant(FieldElement(2)) * s;
  MultiPoly den = one + s * s;
  std::vector<std::string> vars{"s", "t"};
  return {{(two_s * X + (one - s * s) * Y).with_vars(vars), (two_s * Y - (one - s * s) * X).with_vars(vars),
           (Z * den).with_vars(vars)},
          den.with_vars(vars)};
}

}  // namespace revolutio
