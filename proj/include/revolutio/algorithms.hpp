#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revolutio/multipoly.hpp"
#include "revolutio/tower.hpp"
#include "revolutio/unipoly.hpp"

namespace revolutio {

// ------------------------------------------------------------------ gcd

// Monic gcd by Euclid; gcd(f, 0) = monic(f). Throws ZeroDivisorError when a
// remainder's leading coefficient is a non-unit of the tower ring.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);

// ------------------------------------------------- square-free (Yun), Q only

struct SquarefreeDecomposition {
  Rational content;
  // Monic, pairwise coprime, square-free; multiplicities strictly increasing.
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly expand(const std::string& var) const;
};

SquarefreeDecomposition squarefree_decompose(const UniPoly& f);

// All rational roots, repeated by multiplicity, ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

// Monic quadratic factors over Q of a rational polynomial without real
// roots, found by Kronecker interpolation at t = 0, 1, -1. Gives up (returns
// what it has) once the candidate count exceeds `budget`.
std::vector<UniPoly> rational_quadratic_factors(const UniPoly& f, std::size_t budget = 200000);

// ---------------------------------------------------------------- Sturm

// Open interval; a missing endpoint stands for -inf / +inf.
struct RealInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RealInterval whole() { return {}; }
};

// Number of distinct real roots of a square-free rational polynomial in the
// open interval. Non-square-free input is rejected.
int sturm_real_root_count(const UniPoly& f, const RealInterval& interval = {});

// Closed intervals [lo, hi] with disjoint interiors with rational endpoints, each containing
// exactly one real root and a strict sign change of f (or a degenerate
// interval at an exact rational root). Ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UniPoly& f);

// Cauchy bound: every complex root has modulus < bound.
Rational root_bound(const UniPoly& f);

// ---------------------------------------------------- substitution / division

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& bindings);
MultiPoly substitute(const UniPoly& f, const MultiPoly& image);

// Raised by exact_divide; carries the remainder of lexicographic division.
class NotDivisibleError : public Error {
 public:
  explicit NotDivisibleError(MultiPoly remainder);
  const MultiPoly& remainder() const { return remainder_; }

 private:
  MultiPoly remainder_;
};

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

// Sylvester resultant with respect to `var` (fraction-free Bareiss).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// ------------------------------------------------------------ towers

// Adds a generator with the given minimal polynomial (coefficients over
// `tower`, degree >= 2, made monic). Checks square-freeness. Returns the new
// tower; the generator is its last step.
TowerPtr extend_tower(const TowerPtr& tower, const std::string& name, const UniPoly& min_poly,
                      const Embedding& embedding);

// sqrt(c) for rational c > 0 with its positive real embedding. Square
// factors are pulled out; an existing step theta^2 - m is reused.
std::pair<TowerPtr, FieldElement> real_sqrt(const TowerPtr& tower, const Rational& c);

// The imaginary unit (step "i": theta^2 + 1), reused when present.
std::pair<TowerPtr, FieldElement> imaginary_unit(const TowerPtr& tower);

// A root of a rational polynomial f: the smallest rational root by absolute
// value (ties to the positive one) if there is one; otherwise a new generator
// for the lowest-degree Yun factor, pinned to its real root nearest zero when
// that factor has real roots (complex embedding otherwise).
struct RootChoice {
  TowerPtr tower;
  FieldElement value;
  bool rational = false;
  UniPoly min_poly{"t"};  // only when !rational
};

RootChoice choose_root(const TowerPtr& tower, const UniPoly& f, const std::string& name);

}  // namespace revolutio
