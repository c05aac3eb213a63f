#include "revolutio/numeric.hpp"

#include <algorithm>
#include <vector>

#include "revolutio/algorithms.hpp"

namespace revolutio {

namespace {

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Box mul(const Box& a, const Box& b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}

// Per-generator state: a real interval containing either the generator itself
// (real embedding) or y with generator = i*y (imaginary embedding).
struct GeneratorState {
  bool imaginary = false;
  UniPoly poly{"t"};  // rational polynomial whose root is tracked
  Interval bracket;
  int sign_lo = 0;
};

int sign_at(const UniPoly& f, const Rational& x) { return sign(f.evaluate(FieldElement(x)).rational_value()); }

GeneratorState init_state(const TowerStep& step) {
  GeneratorState st;
  std::vector<Rational> coeffs;
  for (const auto& c : step.min_poly) {
    bool rational = std::all_of(c.begin(), c.end(), [](const auto& t) { return t.first.empty(); });
    if (!rational) {
      throw Error(ErrorCode::kNoRealEmbedding,
                  "generator '" + step.name + "' has a minimal polynomial over an extension; no numeric embedding");
    }
    coeffs.push_back(c.empty() ? Rational(0) : c.begin()->second);
  }
  switch (step.embedding.kind) {
    case Embedding::Kind::kReal:
      st.poly = UniPoly::from_rationals("t", coeffs);
      break;
    case Embedding::Kind::kImaginary:
      if (coeffs.size() != 3 || coeffs[1] != 0 || coeffs[0] <= 0) {
        throw Error(ErrorCode::kInternal, "imaginary embedding needs a minimal polynomial theta^2 + c, c > 0");
      }
      st.imaginary = true;
      st.poly = UniPoly::from_rationals("t", {Rational(-coeffs[0]), Rational(0), Rational(1)});
      break;
    case Embedding::Kind::kComplex:
      throw Error(ErrorCode::kNoRealEmbedding,
                  "generator '" + step.name + "' has no designated real or imaginary embedding");
  }
  st.bracket = {step.embedding.lo, step.embedding.hi};
  st.sign_lo = sign_at(st.poly, st.bracket.lo);
  if (st.sign_lo == 0) st.bracket.hi = st.bracket.lo;
  return st;
}

void refine(GeneratorState& st, const Rational& width) {
  while (st.bracket.width() > width) {
    Rational m = st.bracket.mid();
    int s = sign_at(st.poly, m);
    if (s == 0) {
      st.bracket = {m, m};
      return;
    }
    if (s == st.sign_lo) {
      st.bracket.lo = m;
    } else {
      st.bracket.hi = m;
    }
  }
}

Box enclose(const FieldElement& e, const std::vector<GeneratorState>& states) {
  Box total{{0, 0}, {0, 0}};
  for (const auto& [mono, c] : e.terms()) {
    Box term{{c, c}, {0, 0}};
    for (std::size_t k = 0; k < mono.size(); ++k) {
      const auto& st = states[k];
      Box g = st.imaginary ? Box{{0, 0}, st.bracket} : Box{st.bracket, {0, 0}};
      for (int j = 0; j < mono[k]; ++j) term = mul(term, g);
    }
    total.re = add(total.re, term.re);
    total.im = add(total.im, term.im);
  }
  return total;
}

Approximation approximate(const FieldElement& e, double tol, bool real_only) {
  const auto& tower = *e.tower();
  const std::size_t used = e.level();
  std::vector<GeneratorState> states;
  for (std::size_t k = 0; k < used; ++k) {
    const auto& step = tower.step(k);
    if (real_only && !step.embedding.is_real()) {
      throw Error(ErrorCode::kNoRealEmbedding, "generator '" + step.name + "' has no real embedding");
    }
    states.push_back(init_state(step));
  }
  const Rational target(tol);
  Rational width = Rational(1, 16);
  for (int round = 0; round < 64; ++round) {
    for (auto& st : states) refine(st, width);
    Box b = enclose(e, states);
    if (b.re.width() < target && b.im.width() < target) {
      Rational error = std::max(b.re.width(), b.im.width()) / 2;
      return {b.re.mid().get_d(), b.im.mid().get_d(), error.get_d()};
    }
    width /= 1 << 12;
  }
  throw Error(ErrorCode::kInternal, "numeric refinement did not converge");
}

}  // namespace

Approximation numeric_eval(const FieldElement& e, double tol) { return approximate(e, tol, false); }

double numeric_eval_real(const FieldElement& e, double tol) { return approximate(e, tol, true).re; }

FieldElement evaluate_at(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  std::map<std::string, MultiPoly> bindings;
  for (const auto& v : p.vars()) {
    auto it = point.find(v);
    if (it != point.end()) bindings.emplace(v, MultiPoly::constant(FieldElement(it->second)));
  }
  return substitute(p, bindings).constant_value();
}

double numeric_eval_real(const MultiPoly& p, const std::map<std::string, Rational>& point, double tol) {
  return numeric_eval_real(evaluate_at(p, point), tol);
}

}  // namespace revolutio
