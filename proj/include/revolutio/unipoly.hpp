#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "revolutio/tower.hpp"

namespace revolutio {

// Sparse univariate polynomial over a tower.
class UniPoly {
 public:
  // Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  explicit UniPoly(std::string var = "t");
  UniPoly(std::string var, std::map<int, FieldElement> coeffs);

  // Coefficients low to high.
  static UniPoly from_rationals(std::string var, const std::vector<Rational>& coeffs);
  static UniPoly constant(std::string var, const FieldElement& c);
  static UniPoly variable(std::string var);
  static UniPoly monomial(std::string var, const FieldElement& c, int exponent);

  const std::string& var() const { return var_; }
  const std::map<int, FieldElement>& coeffs() const { return coeffs_; }

  int degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || degree() == 0; }
  FieldElement coeff(int exponent) const;
  FieldElement leading_coefficient() const;
  TowerPtr tower() const;
  bool is_rational() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& rhs) const;
  UniPoly operator-(const UniPoly& rhs) const;
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly operator*(const FieldElement& c) const;
  UniPoly& operator+=(const UniPoly& rhs) { return *this = *this + rhs; }
  UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }
  UniPoly pow(unsigned exponent) const;

  // Equality of canonical forms; the variable name only matters for
  // non-constant polynomials.
  bool operator==(const UniPoly& rhs) const;
  bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

  UniPoly derivative() const;
  FieldElement evaluate(const FieldElement& x) const;
  // this(inner(s)), result in inner's variable.
  UniPoly compose(const UniPoly& inner) const;
  UniPoly monic() const;
  UniPoly renamed(std::string var) const;

  // Quotient and remainder; inverts the divisor's leading coefficient.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  // Coefficients low to high, zeros included.
  std::vector<FieldElement> dense() const;

  std::string to_string() const;

 private:
  std::string var_;
  std::map<int, FieldElement> coeffs_;
};

}  // namespace revolutio
