#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "revolutio/tower.hpp"
#include "revolutio/unipoly.hpp"

namespace revolutio {

// Upper bound on the number of variables of one MultiPoly. Four is enough
// for every surface computation plus identities in four indeterminates.
inline constexpr std::size_t kMaxVariables = 4;

// Exponents, one per variable of the owning polynomial.
using Monomial = std::vector<int>;

// Sparse polynomial in a short, ordered list of named variables. Binary
// operations work on the union of both variable lists.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, std::map<Monomial, FieldElement> terms);

  static MultiPoly constant(const FieldElement& c);
  static MultiPoly variable(const std::string& name);
  static MultiPoly from_unipoly(const UniPoly& p);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;  // throws unless constant
  bool is_rational() const;
  TowerPtr tower() const;

  int total_degree() const;
  int degree_in(const std::string& var) const;
  bool uses(const std::string& var) const { return degree_in(var) > 0; }
  std::vector<std::string> used_vars() const;
  // Leading term under lexicographic order of vars().
  std::pair<Monomial, FieldElement> leading_term() const;

  // Same polynomial over a different variable list; every used variable must
  // appear in `vars`.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const FieldElement& c) const;
  MultiPoly& operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
  MultiPoly& operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
  MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
  MultiPoly pow(unsigned exponent) const;

  // Semantic equality: the difference is the zero polynomial.
  bool operator==(const MultiPoly& rhs) const { return (*this - rhs).is_zero(); }
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  MultiPoly derivative(const std::string& var) const;
  // Coefficients of var^0 .. var^deg (each free of var).
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  // Requires at most one used variable; named `var` in the result.
  UniPoly to_unipoly(const std::string& var) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Monomial, FieldElement> terms_;
};

MultiPoly operator*(const FieldElement& c, const MultiPoly& p);

}  // namespace revolutio
