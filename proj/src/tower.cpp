#include "revolutio/tower.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace revolutio {

namespace {

void trim(GenMonomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

GenMonomial mono_mul(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

GenMonomial unit(std::size_t k, int e) {
  GenMonomial m(k + 1, 0);
  m[k] = e;
  trim(m);
  return m;
}

void accumulate(CoeffMap& map, const GenMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = map.find(m);
  if (it == map.end()) {
    Rational q = c;
    q.canonicalize();
    map.emplace(m, q);
    return;
  }
  it->second += c;
  if (it->second == 0) map.erase(it);
}

bool steps_equal(const TowerStep& a, const TowerStep& b) {
  return a.name == b.name && a.min_poly == b.min_poly && a.embedding == b.embedding;
}

// Dense polynomials in one generator with coefficients in the levels below.
using Dense = std::vector<FieldElement>;

void dense_trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int dense_degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense dense_sub(const Dense& a, const Dense& b) {
  Dense out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
  dense_trim(out);
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  dense_trim(out);
  return out;
}

std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
  FieldElement lead_inv = b.back().inverse();
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldElement());
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    FieldElement c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    dense_trim(a);
  }
  dense_trim(q);
  return {q, a};
}

}  // namespace

// ---------------------------------------------------------------- Tower

TowerPtr Tower::base() {
  static const TowerPtr instance = std::make_shared<const Tower>();
  return instance;
}

TowerPtr Tower::with_step(TowerStep step) const {
  auto t = std::make_shared<Tower>(*this);
  t->steps_.push_back(std::move(step));
  return t;
}

TowerPtr Tower::prefix(std::size_t height) const {
  if (height == 0) return base();
  auto t = std::make_shared<Tower>();
  t->steps_.assign(steps_.begin(), steps_.begin() + static_cast<long>(std::min(height, steps_.size())));
  return t;
}

TowerPtr Tower::with_replaced_step(std::size_t k, TowerStep step) const {
  auto t = std::make_shared<Tower>(*this);
  t->steps_.at(k) = std::move(step);
  return t;
}

bool Tower::is_prefix_of(const Tower& other) const {
  if (steps_.size() > other.steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (!steps_equal(steps_[i], other.steps_[i])) return false;
  }
  return true;
}

bool Tower::all_real() const {
  return std::all_of(steps_.begin(), steps_.end(),
                     [](const TowerStep& s) { return s.embedding.is_real(); });
}

std::optional<std::size_t> Tower::find_step(const std::vector<CoeffMap>& min_poly) const {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].min_poly == min_poly) return i;
  }
  return std::nullopt;
}

std::string Tower::unique_name(const std::string& wanted) const {
  auto taken = [&](const std::string& n) {
    return std::any_of(steps_.begin(), steps_.end(),
                       [&](const TowerStep& s) { return s.name == n; });
  };
  if (!taken(wanted)) return wanted;
  for (int i = 2;; ++i) {
    std::string candidate = wanted + "_" + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

std::string Tower::describe() const {
  if (steps_.empty()) return "Q";
  std::ostringstream out;
  out << "Q";
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const auto& s = steps_[k];
    out << "[" << s.name << ": " << min_poly_text(k) << "]";
  }
  return out.str();
}

std::string Tower::min_poly_text(std::size_t k) const {
  const auto& s = steps_.at(k);
  TowerPtr below = prefix(k);
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = s.min_poly.size(); j-- > 0;) {
    FieldElement c(below, s.min_poly[j]);
    if (c.is_zero()) continue;
    std::string coeff = c.to_string();
    bool negative = !c.is_compound() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (j == 0) {
      out << (c.is_compound() ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff != "1") out << (c.is_compound() ? "(" + coeff + ")" : coeff) << "*";
    out << s.name;
    if (j > 1) out << "^" << j;
  }
  return out.str();
}

TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b) {
  if (a.get() == b.get()) return a;
  if (a->height() == 0) return b;
  if (b->height() == 0) return a;
  if (a->height() <= b->height() && a->is_prefix_of(*b)) return b;
  if (b->height() < a->height() && b->is_prefix_of(*a)) return a;
  throw Error(ErrorCode::kTowerMismatch,
              "incompatible coefficient towers " + a->describe() + " and " + b->describe());
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement() : tower_(Tower::base()) {}

FieldElement::FieldElement(long value) : FieldElement(Rational(value)) {}

FieldElement::FieldElement(const Rational& value) : tower_(Tower::base()) {
  if (value != 0) {
    Rational q = value;  // callers may hand in an uncanonicalized mpq
    q.canonicalize();
    terms_.emplace(GenMonomial{}, q);
  }
}

FieldElement::FieldElement(TowerPtr tower, CoeffMap terms)
    : tower_(std::move(tower)), terms_(std::move(terms)) {
  CoeffMap clean;
  for (const auto& [key, c] : terms_) {
    GenMonomial m = key;
    trim(m);
    if (m.size() > tower_->height()) {
      throw Error(ErrorCode::kInvalidInput, "monomial uses a generator outside the tower");
    }
    accumulate(clean, m, c);
  }
  terms_ = std::move(clean);
  reduce();
}

FieldElement FieldElement::generator(const TowerPtr& tower, std::size_t index) {
  if (index >= tower->height()) throw Error(ErrorCode::kInvalidInput, "generator index out of range");
  return FieldElement(tower, CoeffMap{{unit(index, 1), Rational(1)}});
}

void FieldElement::reduce() {
  for (std::size_t k = tower_->height(); k-- > 0;) {
    const TowerStep& step = tower_->step(k);
    const int d = step.degree();
    bool again = true;
    while (again) {
      again = false;
      CoeffMap out;
      for (const auto& [m, c] : terms_) {
        if (m.size() > k && m[k] >= d) {
          again = true;
          GenMonomial base = m;
          base[k] -= d;
          trim(base);
          for (int j = 0; j < d; ++j) {
            GenMonomial shifted = mono_mul(base, unit(k, j));
            for (const auto& [mm, cc] : step.min_poly[static_cast<std::size_t>(j)]) {
              accumulate(out, mono_mul(shifted, mm), -c * cc);
            }
          }
        } else {
          accumulate(out, m, c);
        }
      }
      terms_ = std::move(out);
    }
  }
}

bool FieldElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

bool FieldElement::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::kInvalidInput, "element " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t FieldElement::level() const {
  std::size_t level = 0;
  for (const auto& [m, c] : terms_) level = std::max(level, m.size());
  return level;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  FieldElement out;
  out.tower_ = join_towers(tower_, rhs.tower_);
  out.terms_ = terms_;
  for (const auto& [m, c] : rhs.terms_) accumulate(out.terms_, m, c);
  return out;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  FieldElement out;
  out.tower_ = join_towers(tower_, rhs.tower_);
  if (is_zero() || rhs.is_zero()) return out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) accumulate(out.terms_, mono_mul(ma, mb), ca * cb);
  }
  if (out.level() > 0) out.reduce();
  return out;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidInput, "division by zero");
  const std::size_t lvl = level();
  if (lvl == 0) {
    FieldElement out = Rational(Rational(1) / terms_.begin()->second);
    out.tower_ = tower_;
    return out;
  }
  const std::size_t k = lvl - 1;
  const TowerStep& step = tower_->step(k);

  // Split into a dense polynomial in theta_k over the lower levels.
  Dense a;
  for (const auto& [m, c] : terms_) {
    int e = m.size() > k ? m[k] : 0;
    GenMonomial rest = m;
    if (rest.size() > k) rest[k] = 0;
    trim(rest);
    if (a.size() <= static_cast<std::size_t>(e)) a.resize(static_cast<std::size_t>(e) + 1);
    a[static_cast<std::size_t>(e)] += FieldElement(tower_, CoeffMap{{rest, c}});
  }
  Dense m;
  for (const auto& coeff : step.min_poly) m.emplace_back(tower_, coeff);

  Dense r0 = m, r1 = a, s0, s1{FieldElement(1)};
  dense_trim(r1);
  while (true) {
    if (r1.empty()) {
      FieldElement lead_inv = r0.back().inverse();
      for (auto& c : r0) c = c * lead_inv;
      throw ZeroDivisorError(tower_, k, r0);
    }
    if (dense_degree(r1) == 0) {
      FieldElement c_inv = r1[0].inverse();
      FieldElement out;
      out.tower_ = tower_;
      FieldElement theta = generator(tower_, k);
      FieldElement power(1);
      for (const auto& coeff : s1) {
        out += coeff * c_inv * power;
        power = power * theta;
      }
      return out;
    }
    auto [q, r] = dense_divmod(r0, r1);
    Dense s2 = dense_sub(s0, dense_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result(1);
  result.tower_ = tower_;
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FieldElement FieldElement::lifted_to(const TowerPtr& tower) const {
  if (join_towers(tower_, tower).get() != tower.get()) {
    throw Error(ErrorCode::kTowerMismatch, "cannot lift element into a smaller tower");
  }
  FieldElement out = *this;
  out.tower_ = tower;
  return out;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  join_towers(tower_, rhs.tower_);
  return terms_ == rhs.terms_;
}

bool FieldElement::is_compound() const {
  return terms_.size() > 1;
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.empty() || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (wrote) out << "*";
      out << tower_->step(k).name;
      if (m[k] > 1) out << "^" << m[k];
      wrote = true;
    }
  }
  return out.str();
}

ZeroDivisorError::ZeroDivisorError(TowerPtr tower, std::size_t level, std::vector<FieldElement> factor)
    : Error(ErrorCode::kZeroDivisor,
            "zero divisor: minimal polynomial of '" + tower->step(level).name + "' splits"),
      tower_(std::move(tower)),
      level_(level),
      factor_(std::move(factor)) {}

}  // namespace revolutio
