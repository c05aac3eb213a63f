#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revolutio/multipoly.hpp"

namespace revolutio {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { kConstant, kVariable, kAdd, kSub, kMul, kDiv, kNeg, kPow };
  Kind kind = Kind::kConstant;
  Rational value;         // kConstant
  std::string name;       // kVariable
  unsigned exponent = 0;  // kPow
  std::vector<ExprPtr> args;
  std::size_t position = 0;  // offset of the node in the source text
};

// Syntax errors carry the 0-based offset; the message shows a 1-based column.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  std::vector<std::string> variables{"x", "y", "z", "w", "t", "s", "u", "v"};
  // Generator names of this tower are accepted as constants.
  TowerPtr tower;
  unsigned max_exponent = 1000;
};

ExprPtr parse_expression(std::string_view text, const ParseOptions& options = {});

// Division is only allowed by nonzero constants.
MultiPoly to_multipoly(const Expr& e, const TowerPtr& tower = nullptr);

MultiPoly parse_polynomial(std::string_view text, const ParseOptions& options = {});
// Only `var` may occur.
UniPoly parse_univariate(std::string_view text, const std::string& var = "t", const TowerPtr& tower = nullptr);

}  // namespace revolutio
