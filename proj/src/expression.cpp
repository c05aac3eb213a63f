#include "revolutio/expression.hpp"

#include <algorithm>
#include <cctype>

namespace revolutio {

ParseError::ParseError(ErrorCode code, std::size_t position, const std::string& message)
    : Error(code, "column " + std::to_string(position + 1) + ": " + message), position_(position) {}

namespace {

ExprPtr node(Expr::Kind kind, std::size_t pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->position = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ < text_.size()) {
      if (starts_primary()) fail(pos_, "implicit multiplication is not supported; use '*'");
      fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message, ErrorCode code = ErrorCode::kSyntaxError) {
    throw ParseError(code, at, message);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.' || c == '_';
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    while (peek('+') || peek('-')) {
      std::size_t at = pos_;
      Expr::Kind kind = text_[pos_++] == '+' ? Expr::Kind::kAdd : Expr::Kind::kSub;
      lhs = node(kind, at, {lhs, product()});
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (peek('*') || peek('/')) {
      std::size_t at = pos_;
      Expr::Kind kind = text_[pos_++] == '*' ? Expr::Kind::kMul : Expr::Kind::kDiv;
      lhs = node(kind, at, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek('-')) {
      std::size_t at = pos_++;
      return node(Expr::Kind::kNeg, at, {unary()});
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    while (peek('^')) {
      std::size_t at = pos_++;
      skip();
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        fail(pos_, "exponents must be non-negative integers");
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail(start, "expected an integer exponent");
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
        fail(pos_, "exponents must be non-negative integers");
      }
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 9 || std::stoul(digits) > options_.max_exponent) {
        fail(start, "exponent exceeds " + std::to_string(options_.max_exponent), ErrorCode::kInvalidInput);
      }
      auto e = std::make_shared<Expr>(*node(Expr::Kind::kPow, at, {base}));
      e->exponent = static_cast<unsigned>(std::stoul(digits));
      base = e;
    }
    return base;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= text_.size()) fail(pos_, "unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = sum();
      if (!peek(')')) fail(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      auto e = std::make_shared<Expr>(*node(Expr::Kind::kConstant, at));
      try {
        e->value = parse_rational(text_.substr(at, pos_ - at));
      } catch (const Error& err) {
        fail(at, err.what());
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(at, pos_ - at));
      bool known = std::find(options_.variables.begin(), options_.variables.end(), name) != options_.variables.end();
      if (!known && options_.tower) {
        for (const auto& step : options_.tower->steps()) known = known || step.name == name;
      }
      if (!known) fail(at, "unknown variable '" + name + "'", ErrorCode::kInvalidInput);
      auto e = std::make_shared<Expr>(*node(Expr::Kind::kVariable, at));
      e->name = name;
      return e;
    }
    fail(at, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

MultiPoly to_multipoly(const Expr& e, const TowerPtr& tower) {
  switch (e.kind) {
    case Expr::Kind::kConstant:
      return MultiPoly::constant(FieldElement(e.value));
    case Expr::Kind::kVariable:
      if (tower) {
        for (std::size_t k = 0; k < tower->height(); ++k) {
          if (tower->step(k).name == e.name) return MultiPoly::constant(FieldElement::generator(tower, k));
        }
      }
      return MultiPoly::variable(e.name);
    case Expr::Kind::kAdd:
      return to_multipoly(*e.args[0], tower) + to_multipoly(*e.args[1], tower);
    case Expr::Kind::kSub:
      return to_multipoly(*e.args[0], tower) - to_multipoly(*e.args[1], tower);
    case Expr::Kind::kMul:
      return to_multipoly(*e.args[0], tower) * to_multipoly(*e.args[1], tower);
    case Expr::Kind::kNeg:
      return -to_multipoly(*e.args[0], tower);
    case Expr::Kind::kPow:
      return to_multipoly(*e.args[0], tower).pow(e.exponent);
    case Expr::Kind::kDiv: {
      MultiPoly d = to_multipoly(*e.args[1], tower);
      if (!d.is_constant() || d.is_zero()) {
        throw ParseError(ErrorCode::kInvalidInput, e.position, "division is only allowed by a nonzero constant");
      }
      return to_multipoly(*e.args[0], tower) * d.constant_value().inverse();
    }
  }
  throw Error(ErrorCode::kInternal, "unknown expression node");
}

MultiPoly parse_polynomial(std::string_view text, const ParseOptions& options) {
  return to_multipoly(*parse_expression(text, options), options.tower);
}

UniPoly parse_univariate(std::string_view text, const std::string& var, const TowerPtr& tower) {
  ParseOptions options;
  options.variables = {var};
  options.tower = tower;
  MultiPoly p = parse_polynomial(text, options);
  return p.to_unipoly(var);
}

}  // namespace revolutio
