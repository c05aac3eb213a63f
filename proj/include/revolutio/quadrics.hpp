#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "revolutio/complex_param.hpp"

namespace revolutio {

enum class QuadricClass {
  kEllipsoid,
  kHyperboloidOneSheet,
  kHyperboloidTwoSheets,
  kEllipticParaboloid,
  kHyperbolicParaboloid,
  kCone,
  kEllipticCylinder,
  kHyperbolicCylinder,
  kParabolicCylinder,
  kEmpty,
  kDegenerateReducible,
};

// "ellipsoid", "hyperboloid-one-sheet", ..., "empty/imaginary".
std::string quadric_class_label(QuadricClass c);

// Rank and |signature| of a symmetric matrix.
struct Inertia {
  int rank = 0;
  int positive = 0;
  int negative = 0;
  int abs_signature() const { return positive > negative ? positive - negative : negative - positive; }
};

struct QuadricInvariants {
  Inertia full;       // 4x4 homogenized matrix
  Inertia quadratic;  // 3x3 quadratic part
};

using SymMatrix = std::vector<std::vector<Rational>>;

// Characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier.
UniPoly characteristic_polynomial(const SymMatrix& m);
// Rank by exact elimination; signs of eigenvalues by Descartes' rule.
Inertia inertia(const SymMatrix& m);

// The 4x4 matrix of F in (x, y, z, 1). F must have total degree 2.
SymMatrix quadric_matrix(const MultiPoly& F);

QuadricInvariants quadric_invariants(const MultiPoly& F);
QuadricClass classify_quadric(const MultiPoly& F);

enum class RealVerdictKind { kYes, kYesNonproper, kNo, kNoRealPoints };
std::string real_verdict_kind_name(RealVerdictKind k);

struct QuadricReport {
  QuadricClass cls = QuadricClass::kEmpty;
  std::optional<bool> polynomial_over_c;  // unset for empty real locus
  RealVerdictKind polynomial_over_r = RealVerdictKind::kNo;
  std::string table_group;  // "singular quadrics" / "regular quadrics" / ""
  std::string table_name;   // row label as printed in the table
  std::string table_entry;  // "yes", "no", "yes (over ℂ only)", ...
  std::optional<SurfaceParam> witness;
  std::string refusal;  // why no witness was produced, if none
};

// Table lookup. Throws Unsupported for degenerate-reducible quadrics.
QuadricReport quadric_verdict(QuadricClass c);

// The rows of the table in order: (group, name, entry).
struct TableRow {
  std::string group;
  std::string name;
  std::string entry;
  QuadricClass cls;
};
const std::vector<TableRow>& quadric_table();

// Witness: a graph when some variable enters linearly, otherwise needs a
// diagonal quadratic part. Throws Unsupported for cross terms or degenerate
// quadrics, NotPolynomial for the cylinders over an
// ellipse or a hyperbola and EmptyRealLocus for empty quadrics.
SurfaceParam quadric_param(const MultiPoly& F, QuadricClass cls);

// classify, look up the verdict, build a witness when one is supported.
QuadricReport analyze_quadric(const MultiPoly& F);

}  // namespace revolutio
