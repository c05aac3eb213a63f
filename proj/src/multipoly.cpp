#include "revolutio/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace revolutio {

namespace {

void put(std::map<Monomial, FieldElement>& terms, const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (out.size() > kMaxVariables) {
    throw Error(ErrorCode::kInvalidInput,
                "too many variables (at most " + std::to_string(kMaxVariables) + ")");
  }
  return out;
}

int index_of(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVariables) throw Error(ErrorCode::kInvalidInput, "too many variables");
}

MultiPoly::MultiPoly(std::vector<std::string> vars, std::map<Monomial, FieldElement> terms)
    : MultiPoly(std::move(vars)) {
  for (const auto& [m, c] : terms) {
    if (m.size() != vars_.size()) throw Error(ErrorCode::kInvalidInput, "monomial arity mismatch");
    if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) {
      throw Error(ErrorCode::kInvalidInput, "negative exponent");
    }
    put(terms_, m, c);
  }
}

MultiPoly MultiPoly::constant(const FieldElement& c) {
  MultiPoly out;
  put(out.terms_, Monomial{}, c);
  return out;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  return MultiPoly({name}, {{Monomial{1}, FieldElement(1)}});
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p) {
  MultiPoly out({p.var()});
  for (const auto& [e, c] : p.coeffs()) out.terms_.emplace(Monomial{e}, c);
  return out;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

FieldElement MultiPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::kInvalidInput, "polynomial " + to_string() + " is not constant");
  return terms_.empty() ? FieldElement() : terms_.begin()->second;
}

bool MultiPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

TowerPtr MultiPoly::tower() const {
  TowerPtr t = Tower::base();
  for (const auto& [m, c] : terms_) t = join_towers(t, c.tower());
  return t;
}

int MultiPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

int MultiPoly::degree_in(const std::string& var) const {
  int i = index_of(vars_, var);
  if (i < 0) return terms_.empty() ? -1 : 0;
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(i)]);
  return d;
}

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) {
    if (uses(v)) out.push_back(v);
  }
  return out;
}

std::pair<Monomial, FieldElement> MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidInput, "leading term of zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly out(vars);
  std::vector<int> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) target[i] = index_of(vars, vars_[i]);
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (target[i] < 0) {
        throw Error(ErrorCode::kInvalidInput, "variable '" + vars_[i] + "' dropped from a polynomial using it");
      }
      nm[static_cast<std::size_t>(target[i])] = m[i];
    }
    put(out.terms_, nm, c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  if (vars_ == rhs.vars_) {
    MultiPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) put(out.terms_, m, c);
    return out;
  }
  auto vars = union_vars(vars_, rhs.vars_);
  return with_vars(vars) + rhs.with_vars(vars);
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (vars_ != rhs.vars_) {
    auto vars = union_vars(vars_, rhs.vars_);
    return with_vars(vars) * rhs.with_vars(vars);
  }
  MultiPoly out(vars_);
  Monomial m(vars_.size());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      put(out.terms_, m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
  MultiPoly out(vars_);
  for (const auto& [m, a] : terms_) put(out.terms_, m, a * c);
  return out;
}

MultiPoly operator*(const FieldElement& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(FieldElement(1)).with_vars(vars_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  MultiPoly out(vars_);
  int i = index_of(vars_, var);
  if (i < 0) return out;
  auto k = static_cast<std::size_t>(i);
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial nm = m;
    nm[k] -= 1;
    put(out.terms_, nm, c * FieldElement(static_cast<long>(m[k])));
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  int i = index_of(vars_, var);
  int d = degree_in(var);
  if (d < 0) return {};
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
  for (const auto& [m, c] : terms_) {
    int e = i < 0 ? 0 : m[static_cast<std::size_t>(i)];
    Monomial nm = m;
    if (i >= 0) nm[static_cast<std::size_t>(i)] = 0;
    put(out[static_cast<std::size_t>(e)].terms_, nm, c);
  }
  return out;
}

UniPoly MultiPoly::to_unipoly(const std::string& var) const {
  auto used = used_vars();
  if (used.size() > 1) {
    throw Error(ErrorCode::kInvalidInput, "polynomial " + to_string() + " is not univariate");
  }
  std::map<int, FieldElement> coeffs;
  int i = used.empty() ? -1 : index_of(vars_, used[0]);
  for (const auto& [m, c] : terms_) coeffs.emplace(i < 0 ? 0 : m[static_cast<std::size_t>(i)], c);
  return UniPoly(var, std::move(coeffs));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then reverse lexicographic within a degree.
  std::vector<std::pair<Monomial, FieldElement>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coeff = c.to_string();
    bool negative = !c.is_compound() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (c.is_compound()) coeff = "(" + coeff + ")";
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace revolutio
