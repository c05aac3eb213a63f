#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revolutio/error.hpp"
#include "revolutio/rational.hpp"

namespace revolutio {

// Exponent vector with trailing zeros trimmed, so that an element of a
// shorter tower is literally an element of any tower extending it.
using GenMonomial = std::vector<int>;
using CoeffMap = std::map<GenMonomial, Rational>;

// Which root of a minimal polynomial a generator stands for.
//  - kReal: the unique real root inside [lo, hi] (minimal polynomial over Q
//    changes sign across the interval).
//  - kImaginary: theta = i*y where y is the unique positive root of y^2 - c
//    inside [lo, hi]; only used for minimal polynomials theta^2 + c.
//  - kComplex: some complex root; no numeric refinement is available.
struct Embedding {
  enum class Kind { kReal, kImaginary, kComplex };
  Kind kind = Kind::kComplex;
  Rational lo = 0;
  Rational hi = 0;

  static Embedding real(Rational lo, Rational hi) {
    return {Kind::kReal, std::move(lo), std::move(hi)};
  }
  static Embedding imaginary(Rational lo, Rational hi) {
    return {Kind::kImaginary, std::move(lo), std::move(hi)};
  }
  static Embedding complex() { return {}; }

  bool is_real() const { return kind == Kind::kReal; }
  bool operator==(const Embedding&) const = default;
};

struct TowerStep {
  std::string name;
  // Dense coefficients (low to high) of a monic minimal polynomial in this
  // generator; coefficient j only involves generators below this step.
  std::vector<CoeffMap> min_poly;
  Embedding embedding;

  int degree() const { return static_cast<int>(min_poly.size()) - 1; }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Q[theta_1]/(m_1)[theta_2]/(m_2)... with square-free (not necessarily
// irreducible) m_k. Immutable; shared between elements by pointer.
class Tower {
 public:
  static TowerPtr base();

  std::size_t height() const { return steps_.size(); }
  const TowerStep& step(std::size_t k) const { return steps_.at(k); }
  const std::vector<TowerStep>& steps() const { return steps_; }

  // No validation here; use extend_tower() from algorithms.hpp which checks
  // monicity and square-freeness.
  TowerPtr with_step(TowerStep step) const;
  // First `height` steps.
  TowerPtr prefix(std::size_t height) const;
  // Same tower with step k replaced (used when a step is split).
  TowerPtr with_replaced_step(std::size_t k, TowerStep step) const;

  bool is_prefix_of(const Tower& other) const;
  bool all_real() const;
  std::optional<std::size_t> find_step(const std::vector<CoeffMap>& min_poly) const;
  std::string unique_name(const std::string& wanted) const;

  std::string describe() const;
  std::string min_poly_text(std::size_t k) const;

 private:
  std::vector<TowerStep> steps_;
};

// The longer of two towers when one is a prefix of the other.
TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b);

class FieldElement {
 public:
  FieldElement();
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElement(TowerPtr tower, CoeffMap terms);

  static FieldElement generator(const TowerPtr& tower, std::size_t index);

  const TowerPtr& tower() const { return tower_; }
  const CoeffMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  // Throws kInvalidInput if the element involves a generator.
  Rational rational_value() const;
  // Index of the highest generator used plus one; 0 for rationals.
  std::size_t level() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  // Throws ZeroDivisorError when the element is a non-unit of the quotient
  // ring, and kInvalidInput for zero.
  FieldElement inverse() const;
  FieldElement pow(unsigned exponent) const;

  // Re-expressed over a tower that has this element's tower as a prefix.
  FieldElement lifted_to(const TowerPtr& tower) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;
  // True when printing needs parentheses inside a product.
  bool is_compound() const;

 private:
  void reduce();

  TowerPtr tower_;
  CoeffMap terms_;
};

// Raised when Euclid meets a leading coefficient that is a zero divisor:
// the minimal polynomial of step `level` factors, and `factor` (monic, dense,
// low to high, coefficients over the steps below) is a proper factor of it.
class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(TowerPtr tower, std::size_t level, std::vector<FieldElement> factor);

  const TowerPtr& tower() const { return tower_; }
  std::size_t level() const { return level_; }
  const std::vector<FieldElement>& factor() const { return factor_; }

 private:
  TowerPtr tower_;
  std::size_t level_;
  std::vector<FieldElement> factor_;
};

}  // namespace revolutio
