#pragma once

#include <string>

#include "revolutio/multipoly.hpp"
#include "revolutio/unipoly.hpp"

namespace revolutio {

// num / den with coprime parts and a monic denominator.
struct RationalFunction {
  UniPoly num{"t"};
  UniPoly den{"t"};

  static RationalFunction make(const UniPoly& num, const UniPoly& den);
  static RationalFunction polynomial(const UniPoly& p);

  bool is_polynomial() const { return den.degree() == 0; }
  // The polynomial num/den; requires is_polynomial().
  UniPoly as_polynomial() const;
  std::string to_string() const;
};

// A parametrized plane curve [first(t), second(t)]. For P^2 the first
// coordinate is x^2 and the second is z.
struct PlaneCurveParam {
  enum class Kind { kPolynomial, kRational };

  RationalFunction first;
  RationalFunction second;

  static PlaneCurveParam polynomial(const UniPoly& first, const UniPoly& second);
  static PlaneCurveParam rational(const UniPoly& first_num, const UniPoly& first_den,
                                  const UniPoly& second_num, const UniPoly& second_den);

  Kind kind() const;
  std::string to_string() const;
};

// first coordinate = p * a^2, second = b, p square-free.
struct P2Decomposition {
  UniPoly p{"t"};
  UniPoly a{"t"};
  UniPoly b{"t"};
  int delta = 0;

  UniPoly first() const { return p * a * a; }
};

// s -> scale * s + shift.
struct AffineReparam {
  FieldElement scale{1};
  FieldElement shift{0};

  static AffineReparam identity() { return {}; }

  // f(scale * s + shift), in variable `var`.
  UniPoly apply(const UniPoly& f, const std::string& var = "t") const;
  // (this o inner)(s) = this(inner(s)).
  AffineReparam compose(const AffineReparam& inner) const;
  AffineReparam inverse() const;
  bool operator==(const AffineReparam& rhs) const = default;
};

struct TubularSurface {
  UniPoly p{"z"};

  // x^2 + y^2 - p(z)
  MultiPoly implicit() const;
};

// G(w, z) with G(x^2 + y^2, z) = F(x, y, z). Throws NotSurfaceOfRevolution.
MultiPoly implicit_to_p2(const MultiPoly& F);

// [g(t)/c, t] for G = c*w - g(z). Throws NotAGraph.
PlaneCurveParam p2_param_from_graph(const MultiPoly& G);

// Requires rational coefficients. Throws DegenerateProfile for a constant
// second coordinate or a vanishing first coordinate.
P2Decomposition decompose_paa(const PlaneCurveParam& c);

// Turns a rational parametrization with a single pole into a polynomial one
// via t -> r + 1/s. Throws NotPolynomialCurve.
PlaneCurveParam polynomialize_rational(const PlaneCurveParam& c);

// (scale, shift) with g(s) = f(scale*s + shift). Throws NotEquivalent.
AffineReparam affine_equivalent(const PlaneCurveParam& f, const PlaneCurveParam& g);

TubularSurface tubularize(const P2Decomposition& d);

// Implicit equation in x, y, z of the surface of revolution whose P^2 is
// [p a^2, b]: the resultant in t of w - p a^2 and z - b, with w = x^2 + y^2,
// scaled so its leading coefficient is 1.
MultiPoly implicit_surface(const P2Decomposition& d);

}  // namespace revolutio
