#pragma once

#include <optional>
#include <utility>

#include "revolutio/complex_param.hpp"

namespace revolutio {

struct VerificationReport {
  MultiPoly residual;
  bool on_surface = false;
  int jacobian_rank = 0;
  std::optional<int> fiber_count;
  std::optional<std::pair<Rational, Rational>> fiber_sample;
};

// Residual F(x(u,v), y(u,v), z(u,v)); on_surface iff it is zero.
VerificationReport verify_on_surface(const SurfaceParam& s, const MultiPoly& F);

// Rank of the formal 3x2 Jacobian over the function field: 0, 1 or 2.
int jacobian_generic_rank(const SurfaceParam& s);

// Throws kInternal unless the Jacobian has generic rank 2.
void require_dominant(const SurfaceParam& s);

// Number of distinct (u, v) over C with s(u, v) = s(u0, v0). Throws
// Indeterminate when the eliminant vanishes identically or the fiber is
// infinite, and InvalidInput when the Jacobian vanishes at the sample or the
// map is not dominant.
int fiber_count(const SurfaceParam& s, const Rational& u0, const Rational& v0);

// The fixed sample sequence tried by fiber_count_auto.
const std::vector<std::pair<Rational, Rational>>& fiber_samples();

// First sample of fiber_samples() that gives an answer; Indeterminate if none.
std::pair<int, std::pair<Rational, Rational>> fiber_count_auto(const SurfaceParam& s);

// verify_on_surface plus the Jacobian rank (and optionally the fiber count).
VerificationReport verify_full(const SurfaceParam& s, const MultiPoly& F, bool with_fiber);

}  // namespace revolutio
