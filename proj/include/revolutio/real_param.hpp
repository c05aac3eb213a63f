#pragma once

#include <optional>
#include <string>

#include "revolutio/complex_param.hpp"

namespace revolutio {

// p(reparam(z)) = sign * z^2 + lambda.
struct CanonicalQuadratic {
  int sign = 1;
  Rational lambda;
  AffineReparam reparam;  // z -> scale*z + shift, scale possibly a square root
};

CanonicalQuadratic canonicalize_quadratic(const UniPoly& p);

enum class RealStatus {
  kRealProper,
  kRealNonproperDoubleCover,
  kNoRealParametrization,
  kEmptyRealLocus,
  kUnresolved,
};

// "real-proper", ... as used in reports.
std::string real_status_name(RealStatus s);
// "REAL_PROPER", ... machine-readable code.
std::string real_status_code(RealStatus s);

struct ConjectureEvidence {
  int real_roots = 0;          // distinct real roots of p
  bool two_dimensional = false;  // p > 0 somewhere on the real line
  bool satisfied() const { return real_roots <= 1 && two_dimensional; }
};

struct RealVerdict {
  RealStatus status = RealStatus::kUnresolved;
  std::string reason;
  std::optional<SurfaceParam> witness;
  std::optional<ConjectureEvidence> evidence;
};

// Real witnesses for Delta = 0, 1, 2; dispatch on d.delta.
RealVerdict real_param_delta0(const P2Decomposition& d);
RealVerdict real_param_delta1(const P2Decomposition& d);
RealVerdict real_param_delta2(const P2Decomposition& d);
RealVerdict real_param(const P2Decomposition& d);

// (q1 q2 + q3 q4)^2 + ((q1^2+q3^2-q2^2-q4^2)/2)^2 - ((q1^2+q3^2+q2^2+q4^2)/2)^2
//   + (q1 q4 - q2 q3)^2, which vanishes identically.
MultiPoly dioph_identity_residual(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3,
                                  const MultiPoly& q4);

// The point [q1 q2 + q3 q4, (q1^2+q3^2-q2^2-q4^2)/2, (q1^2+q3^2+q2^2+q4^2)/2].
std::array<MultiPoly, 3> dioph_point(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3,
                                     const MultiPoly& q4);

ConjectureEvidence conjecture_predicate(const P2Decomposition& d);

// [A, B, C] = [v - u(uv+1), 2uv + 1, u(uv+1) + v] with A^2 + B^2 - C^2 = 1.
std::array<MultiPoly, 3> one_sheet_abc();
// The double cover of the upper sheet of x^2 + y^2 - z^2 = -1.
std::array<MultiPoly, 3> two_sheet_q();
// q1..q4 on q1 q4 - q2 q3 = 1 with q4 = q1, which produce two_sheet_q.
std::array<MultiPoly, 4> two_sheet_q1234();
// [v - u(uv+1), 2uv + 1, i(u(uv+1) + v)] on the unit sphere.
SurfaceParam sphere_witness();
// Real witness on x^2 + y^2 - z^3 - 1 = 0 over Q(sqrt 3).
SurfaceParam cubic_example();

}  // namespace revolutio
