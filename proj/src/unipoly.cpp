#include "revolutio/unipoly.hpp"

#include <sstream>

#include "revolutio/multipoly.hpp"

namespace revolutio {

namespace {

void put(std::map<int, FieldElement>& coeffs, int e, const FieldElement& c) {
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    if (!c.is_zero()) coeffs.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

std::string pick_var(const UniPoly& a, const UniPoly& b) {
  if (a.var() == b.var()) return a.var();
  if (b.is_constant()) return a.var();
  if (a.is_constant()) return b.var();
  throw Error(ErrorCode::kInvalidInput,
              "univariate polynomials in different variables: " + a.var() + ", " + b.var());
}

}  // namespace

UniPoly::UniPoly(std::string var) : var_(std::move(var)) {}

UniPoly::UniPoly(std::string var, std::map<int, FieldElement> coeffs) : var_(std::move(var)) {
  for (const auto& [e, c] : coeffs) {
    if (e < 0) throw Error(ErrorCode::kInvalidInput, "negative exponent");
    put(coeffs_, e, c);
  }
}

UniPoly UniPoly::from_rationals(std::string var, const std::vector<Rational>& coeffs) {
  std::map<int, FieldElement> m;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) m.emplace(static_cast<int>(i), FieldElement(coeffs[i]));
  }
  return UniPoly(std::move(var), std::move(m));
}

UniPoly UniPoly::constant(std::string var, const FieldElement& c) {
  return UniPoly(std::move(var), {{0, c}});
}

UniPoly UniPoly::variable(std::string var) {
  return UniPoly(std::move(var), {{1, FieldElement(1)}});
}

UniPoly UniPoly::monomial(std::string var, const FieldElement& c, int exponent) {
  return UniPoly(std::move(var), {{exponent, c}});
}

FieldElement UniPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? FieldElement() : it->second;
}

FieldElement UniPoly::leading_coefficient() const {
  return coeffs_.empty() ? FieldElement() : coeffs_.rbegin()->second;
}

TowerPtr UniPoly::tower() const {
  TowerPtr t = Tower::base();
  for (const auto& [e, c] : coeffs_) t = join_towers(t, c.tower());
  return t;
}

bool UniPoly::is_rational() const {
  for (const auto& [e, c] : coeffs_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(var_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
  UniPoly out(pick_var(*this, rhs), coeffs_);
  for (const auto& [e, c] : rhs.coeffs_) put(out.coeffs_, e, c);
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  UniPoly out(pick_var(*this, rhs));
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) put(out.coeffs_, ea + eb, ca * cb);
  }
  return out;
}

UniPoly UniPoly::operator*(const FieldElement& c) const {
  UniPoly out(var_);
  for (const auto& [e, a] : coeffs_) put(out.coeffs_, e, a * c);
  return out;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(var_, FieldElement(1));
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool UniPoly::operator==(const UniPoly& rhs) const {
  if (!is_constant() && !rhs.is_constant() && var_ != rhs.var_) return false;
  if (coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = rhs.coeffs_.begin();
  for (const auto& [e, c] : coeffs_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

UniPoly UniPoly::derivative() const {
  UniPoly out(var_);
  for (const auto& [e, c] : coeffs_) {
    if (e > 0) put(out.coeffs_, e - 1, c * FieldElement(static_cast<long>(e)));
  }
  return out;
}

FieldElement UniPoly::evaluate(const FieldElement& x) const {
  FieldElement acc;
  int prev = degree();
  if (is_zero()) return acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int i = it->first; i < prev; ++i) acc = acc * x;
    acc += it->second;
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc = acc * x;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(inner.var());
  if (is_zero()) return acc;
  int prev = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int i = it->first; i < prev; ++i) acc = acc * inner;
    acc += constant(inner.var(), it->second);
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc = acc * inner;
  return acc.renamed(inner.var());
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

UniPoly UniPoly::renamed(std::string var) const {
  UniPoly out = *this;
  out.var_ = std::move(var);
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::kInvalidInput, "polynomial division by zero");
  const std::string v = pick_var(*this, divisor);
  FieldElement lead_inv = divisor.leading_coefficient().inverse();
  const int dd = divisor.degree();
  UniPoly q(v), r = renamed(v);
  while (!r.is_zero() && r.degree() >= dd) {
    int shift = r.degree() - dd;
    FieldElement c = r.leading_coefficient() * lead_inv;
    put(q.coeffs_, shift, c);
    for (const auto& [e, b] : divisor.coeffs_) put(r.coeffs_, e + shift, -(c * b));
  }
  return {q, r};
}

std::vector<FieldElement> UniPoly::dense() const {
  if (is_zero()) return {};
  std::vector<FieldElement> out(static_cast<std::size_t>(degree()) + 1);
  for (const auto& [e, c] : coeffs_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

std::string UniPoly::to_string() const {
  return MultiPoly::from_unipoly(*this).to_string();
}

}  // namespace revolutio
