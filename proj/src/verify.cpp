#include "revolutio/verify.hpp"

#include "revolutio/algorithms.hpp"
#include "revolutio/numeric.hpp"

namespace revolutio {

namespace {

std::array<MultiPoly, 3> minors(const SurfaceParam& s) {
  auto c = s.components();
  MultiPoly du[3], dv[3];
  for (int i = 0; i < 3; ++i) {
    du[i] = c[i].derivative("u");
    dv[i] = c[i].derivative("v");
  }
  return {du[0] * dv[1] - dv[0] * du[1], du[0] * dv[2] - dv[0] * du[2], du[1] * dv[2] - dv[1] * du[2]};
}

UniPoly in_v(const MultiPoly& f, const FieldElement& u) {
  return substitute(f, {{"u", MultiPoly::constant(u)}, {"v", MultiPoly::variable("v")}}).to_unipoly("v");
}

// Distinct v with f_i(u, v) = 0 for all i, at a fixed u.
int count_v(const std::vector<MultiPoly>& fs, const FieldElement& u) {
  UniPoly g("v");
  bool constrained = false;
  for (const auto& f : fs) {
    UniPoly q = in_v(f, u);
    if (q.is_zero()) continue;
    if (q.degree() == 0) return 0;
    g = gcd(g, q);
    constrained = true;
  }
  if (!constrained) throw Error(ErrorCode::kIndeterminate, "fiber contains a whole line");
  return squarefree_part(g).degree();
}

// Sum over the roots of the square-free g (in u) of the number of v-solutions.
int count_over(const UniPoly& g, const std::vector<MultiPoly>& fs, const TowerPtr& tower) {
  if (g.degree() <= 0) return 0;
  if (g.degree() == 1) return count_v(fs, -(g.coeff(0) / g.coeff(1)));
  UniPoly rest = g;
  int total = 0;
  if (g.is_rational()) {
    for (const auto& r : rational_roots(g)) {
      total += count_v(fs, FieldElement(r));
      rest = rest.divmod(UniPoly::from_rationals("u", {Rational(-r), Rational(1)})).first;
    }
    if (rest.degree() <= 0) return total;
  }
  TowerPtr ext = extend_tower(join_towers(tower, rest.tower()), "u0", rest, Embedding::complex());
  const std::size_t top = ext->height() - 1;
  try {
    return total + rest.degree() * count_v(fs, FieldElement::generator(ext, top));
  } catch (const ZeroDivisorError& e) {
    if (e.level() != top) throw;
    UniPoly factor("u");
    for (std::size_t j = 0; j < e.factor().size(); ++j) {
      factor += UniPoly::monomial("u", e.factor()[j], static_cast<int>(j));
    }
    UniPoly cofactor = rest.divmod(factor).first;
    return total + count_over(factor, fs, tower) + count_over(cofactor, fs, tower);
  }
}

}  // namespace

VerificationReport verify_on_surface(const SurfaceParam& s, const MultiPoly& F) {
  for (const auto& v : F.used_vars()) {
    if (v != "x" && v != "y" && v != "z") {
      throw Error(ErrorCode::kInvalidInput, "implicit equation may only use x, y, z");
    }
  }
  VerificationReport r;
  r.residual = substitute(F, {{"x", s.x}, {"y", s.y}, {"z", s.z}}).with_vars({"u", "v"});
  r.on_surface = r.residual.is_zero();
  return r;
}

int jacobian_generic_rank(const SurfaceParam& s) {
  for (const auto& m : minors(s)) {
    if (!m.is_zero()) return 2;
  }
  for (const auto& c : s.components()) {
    if (!c.derivative("u").is_zero() || !c.derivative("v").is_zero()) return 1;
  }
  return 0;
}

void require_dominant(const SurfaceParam& s) {
  if (jacobian_generic_rank(s) != 2) throw Error(ErrorCode::kInternal, "parametrization is not dominant");
}

int fiber_count(const SurfaceParam& s, const Rational& u0, const Rational& v0) {
  if (jacobian_generic_rank(s) != 2) throw Error(ErrorCode::kInvalidInput, "fiber count needs a dominant map");
  const std::map<std::string, Rational> point{{"u", u0}, {"v", v0}};
  bool regular = false;
  for (const auto& m : minors(s)) {
    if (!evaluate_at(m, point).is_zero()) regular = true;
  }
  if (!regular) {
    throw Error(ErrorCode::kInvalidInput,
                "Jacobian vanishes at (" + to_string(u0) + ", " + to_string(v0) + ")");
  }
  std::vector<MultiPoly> fs;
  for (const auto& c : s.components()) {
    MultiPoly f = c - MultiPoly::constant(evaluate_at(c, point));
    if (!f.is_zero()) fs.push_back(f.with_vars({"u", "v"}));
  }
  // Eliminate v pairwise; gcd of the eliminants in u.
  UniPoly g("u");
  bool any = false;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].uses("v")) {
      g = gcd(g, fs[i].to_unipoly("u"));
      any = true;
      continue;
    }
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!fs[j].uses("v")) continue;
      MultiPoly r = resultant(fs[i], fs[j], "v");
      if (r.is_zero()) continue;
      g = gcd(g, r.to_unipoly("u"));
      any = true;
    }
  }
  if (!any || g.is_zero()) throw Error(ErrorCode::kIndeterminate, "eliminant vanishes identically");
  return count_over(squarefree_part(g), fs, s.tower);
}

const std::vector<std::pair<Rational, Rational>>& fiber_samples() {
  static const std::vector<std::pair<Rational, Rational>> samples{
      {1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}};
  return samples;
}

std::pair<int, std::pair<Rational, Rational>> fiber_count_auto(const SurfaceParam& s) {
  if (jacobian_generic_rank(s) != 2) throw Error(ErrorCode::kInvalidInput, "fiber count needs a dominant map");
  for (const auto& sample : fiber_samples()) {
    try {
      return {fiber_count(s, sample.first, sample.second), sample};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIndeterminate && e.code() != ErrorCode::kInvalidInput) throw;
    }
  }
  throw Error(ErrorCode::kIndeterminate, "no sample in the fixed sequence gave a finite fiber");
}

VerificationReport verify_full(const SurfaceParam& s, const MultiPoly& F, bool with_fiber) {
  VerificationReport r = verify_on_surface(s, F);
  r.jacobian_rank = jacobian_generic_rank(s);
  if (with_fiber && r.jacobian_rank == 2) {
    auto [count, sample] = fiber_count_auto(s);
    r.fiber_count = count;
    r.fiber_sample = sample;
  }
  return r;
}

}  // namespace revolutio
