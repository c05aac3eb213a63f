#pragma once

#include <map>
#include <string>

#include "revolutio/multipoly.hpp"
#include "revolutio/tower.hpp"

namespace revolutio {

// Closed interval with rational endpoints.
struct Interval {
  Rational lo = 0;
  Rational hi = 0;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

// Rectangular enclosure of a complex number.
struct Box {
  Interval re;
  Interval im;
};

struct Approximation {
  double re = 0;
  double im = 0;
  double error = 0;  // certified bound on |approximation - exact| per part
};

// Enclosure of an element of a tower whose generators have real or
// imaginary embeddings, refined until both parts are narrower than `tol`.
// Throws NoRealEmbedding for a generator with only a complex embedding.
Approximation numeric_eval(const FieldElement& e, double tol = 1e-12);

// Same, but the value must be real: every generator used by `e` needs a real
// embedding.
double numeric_eval_real(const FieldElement& e, double tol = 1e-12);

// Exact evaluation at a rational point followed by numeric_eval_real.
double numeric_eval_real(const MultiPoly& p, const std::map<std::string, Rational>& point,
                         double tol = 1e-12);

// Exact value of p at a rational point (all used variables must be bound).
FieldElement evaluate_at(const MultiPoly& p, const std::map<std::string, Rational>& point);

}  // namespace revolutio
