#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revolutio/complex_param.hpp"

namespace revolutio {

// A closed-form witness and the surface it must lie on.
struct CatalogEntry {
  std::string name;
  SurfaceParam witness;
  MultiPoly surface;
};

std::vector<CatalogEntry> formula_catalog();

// A symbolic identity that must reduce to zero (each residual listed).
struct IdentityCheck {
  std::string name;
  std::vector<MultiPoly> residuals;
  bool ok() const;
};

// The rational tubular map q(s, t) composed with (u, v) -> (v, uv + alpha),
// cleared of the denominator 2v, against the polynomial tubular witness.
IdentityCheck composition_check(const UniPoly& p);
// The four-square identity in independent q1..q4.
IdentityCheck diophantine_identity_check();
// The one-sheet substitution into the identity gives the two-sheet witness
// coefficient for coefficient, and q1 q4 - q2 q3 = 1.
IdentityCheck two_sheet_substitution_check();

struct CatalogResult {
  std::string name;
  bool on_surface = false;
  int jacobian_rank = 0;
  std::optional<int> fiber_count;
  std::string residual;
  double millis = 0;
};

// Entries are independent; with `parallel` they run on separate threads.
std::vector<CatalogResult> verify_catalog(bool with_fiber, bool parallel = false);
std::vector<IdentityCheck> catalog_identities();

}  // namespace revolutio
