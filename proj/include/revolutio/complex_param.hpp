#pragma once

#include <array>
#include <string>
#include <vector>

#include "revolutio/multipoly.hpp"
#include "revolutio/profile.hpp"

namespace revolutio {

enum class Properness { kProper, kNonProperDegree2, kUnknown };

std::string properness_name(Properness p);

// Three polynomials in (u, v) over one tower.
struct SurfaceParam {
  MultiPoly x;
  MultiPoly y;
  MultiPoly z;
  TowerPtr tower = Tower::base();
  std::vector<std::string> provenance;
  Properness properness = Properness::kUnknown;

  // Normalizes every component to the variables (u, v) and joins the towers.
  // Dominance is not checked here; see jacobian_generic_rank.
  static SurfaceParam make(const MultiPoly& x, const MultiPoly& y, const MultiPoly& z,
                           std::vector<std::string> provenance, Properness properness = Properness::kUnknown);

  std::array<MultiPoly, 3> components() const { return {x, y, z}; }
};

struct RootSpec {
  FieldElement value;
  bool rational = true;
  UniPoly min_poly{"t"};  // generator's minimal polynomial when !rational
  TowerPtr tower = Tower::base();
};

// Rational root of smallest absolute value (ties to positive), else a new
// generator for the lowest-degree square-free factor.
RootSpec choose_root_alpha(const UniPoly& p, const TowerPtr& tower = Tower::base());

// h with v*h(u, v) = p(uv + alpha). Throws InconsistentRoot if p(alpha) != 0.
MultiPoly factor_h(const UniPoly& p, const RootSpec& alpha);

// [(i/2)(v - h), (1/2)(v + h), uv + alpha] on x^2 + y^2 - p(z) = 0.
SurfaceParam tubular_polynomial_param(const TubularSurface& T, const RootSpec& alpha);

// [a(z~) x~, a(z~) y~, b(z~)]. Throws DegenerateProfile for constant b.
SurfaceParam tubular_lift(const SurfaceParam& s, const UniPoly& a, const UniPoly& b);

// Polynomial parametrization over C of the surface with P^2 = [p a^2, b].
// Throws NotPolynomial for a cylinder of revolution.
SurfaceParam sor_complex_param(const P2Decomposition& d);

// The constant-p case: [-2uv a~(N), (v^2 - u^2) a~(N), b(N)], N = u^2 + v^2,
// after shifting a root of a to 0 and absorbing sqrt(p) into a. Irrational
// roots of a extend the tower.
SurfaceParam cylinder_case_param(const P2Decomposition& d);

// Rotation of a space curve about the z-axis with common denominator 1 + s^2.
struct RationalSurfaceParam {
  std::array<MultiPoly, 3> num;
  MultiPoly den;
};

RationalSurfaceParam rotate_curve(const UniPoly& x, const UniPoly& y, const UniPoly& z);

}  // namespace revolutio
