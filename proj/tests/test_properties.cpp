// Randomized property suites. Every suite draws from its own fixed seed in
// oracle.hpp so failures replay exactly.
#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "revolutio/algorithms.hpp"
#include "revolutio/complex_param.hpp"
#include "revolutio/numeric.hpp"
#include "revolutio/profile.hpp"

using namespace revolutio;
using oracle::QPoly;

namespace {

constexpr int kCases = 200;

MultiPoly var(const char* n) { return MultiPoly::variable(n); }
MultiPoly C(const Rational& c) { return MultiPoly::constant(FieldElement(c)); }

bool is_squarefree(const QPoly& p) { return oracle::gcd(p, oracle::derivative(p)).size() == 1; }
bool divides(const QPoly& d, const QPoly& f) { return oracle::rem(f, d).empty(); }

// c * g1^m1 * g2^m2 * ... from small random factors.
QPoly random_product(oracle::Rng& rng, int max_factors, int max_mult) {
  QPoly f{rng.nonzero_rational()};
  const int n = static_cast<int>(rng.integer(1, max_factors));
  for (int k = 0; k < n; ++k) {
    QPoly g = rng.poly(static_cast<int>(rng.integer(1, 2)), 3);
    f = oracle::mul(f, oracle::power(g, static_cast<int>(rng.integer(1, max_mult))));
  }
  return f;
}

}  // namespace

TEST_CASE("ring axioms for multivariate polynomials") {
  oracle::Rng rng(oracle::kSeedRing);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int k = 0; k < kCases; ++k) {
    MultiPoly a = oracle::random_multi(rng, vars, 4, 2), b = oracle::random_multi(rng, vars, 4, 2),
              c = oracle::random_multi(rng, vars, 4, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * C(1) == a);
  }
}

TEST_CASE("Yun round trip and square-freeness") {
  oracle::Rng rng(oracle::kSeedYun);
  for (int k = 0; k < kCases; ++k) {
    QPoly f = random_product(rng, 4, 4);
    CAPTURE(k);
    SquarefreeDecomposition d = squarefree_decompose(oracle::to_uni(f));
    CHECK(oracle::from_uni(d.expand("t")) == f);
    int last = 0;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      QPoly g = oracle::from_uni(d.factors[i].first);
      const int m = d.factors[i].second;
      CHECK(m > last);
      last = m;
      CHECK(g.back() == 1);
      CHECK(g.size() >= 2);
      CHECK(is_squarefree(g));
      // g^m divides f but no root of g has higher multiplicity.
      CHECK(divides(oracle::power(g, m), f));
      CHECK(oracle::gcd(oracle::power(g, m + 1), f) == oracle::power(g, m));
      for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
        CHECK(oracle::gcd(g, oracle::from_uni(d.factors[j].first)).size() == 1);
      }
    }
  }
}

TEST_CASE("decompose_paa reconstructs the first coordinate") {
  oracle::Rng rng(oracle::kSeedDecompose);
  for (int k = 0; k < kCases; ++k) {
    QPoly f = random_product(rng, 3, 4);
    QPoly b = rng.poly(static_cast<int>(rng.integer(1, 3)));
    P2Decomposition d = decompose_paa(PlaneCurveParam::polynomial(oracle::to_uni(f), oracle::to_uni(b)));
    QPoly p = oracle::from_uni(d.p), a = oracle::from_uni(d.a);
    CAPTURE(k);
    CHECK(oracle::mul(p, oracle::mul(a, a)) == f);
    CHECK(is_squarefree(p));
    CHECK(d.delta == static_cast<int>(p.size()) - 1);
    CHECK(oracle::from_uni(d.b) == b);
  }
}

TEST_CASE("v h equals p(uv + alpha)") {
  oracle::Rng rng(oracle::kSeedFactorH);
  const MultiPoly u = var("u"), v = var("v");
  for (int k = 0; k < kCases; ++k) {
    const Rational alpha = rng.rational();
    QPoly p = oracle::mul(QPoly{-alpha, 1}, rng.poly(static_cast<int>(rng.integer(0, 3))));
    RootSpec spec{FieldElement(alpha), true, UniPoly("t"), Tower::base()};
    MultiPoly h = factor_h(oracle::to_uni(p), spec);
    CAPTURE(k);
    // Compare at rational points against direct evaluation of p.
    for (int trial = 0; trial < 3; ++trial) {
      Rational uu = rng.rational(), vv = rng.rational();
      Rational lhs = vv * evaluate_at(h, {{"u", uu}, {"v", vv}}).rational_value();
      CHECK(lhs == oracle::eval(p, uu * vv + alpha));
    }
    CHECK(v * h == substitute(oracle::to_uni(p), u * v + C(alpha)));
  }
  // Algebraic roots: p = t^2 - c for non-square c, the root lives in a tower.
  for (int k = 0; k < 20; ++k) {
    const long c = rng.integer(2, 30);
    const long r = static_cast<long>(std::sqrt(static_cast<double>(c)));
    if (r * r == c) continue;
    UniPoly p = oracle::to_uni(oracle::mul(QPoly{Rational(-c), 0, 1}, rng.poly(1)));
    RootSpec spec = choose_root_alpha(p);
    MultiPoly h = factor_h(p, spec);
    CHECK(v * h == substitute(p, u * v + MultiPoly::constant(spec.value)));
  }
}

TEST_CASE("substitute is a ring homomorphism compatible with evaluation") {
  oracle::Rng rng(oracle::kSeedSubstitute);
  const std::vector<std::string> xyz{"x", "y", "z"}, uv{"u", "v"};
  for (int k = 0; k < kCases; ++k) {
    MultiPoly f = oracle::random_multi(rng, xyz, 3, 2), g = oracle::random_multi(rng, xyz, 3, 2);
    std::map<std::string, MultiPoly> sigma;
    for (const auto& name : xyz) sigma[name] = oracle::random_multi(rng, uv, 2, 2);
    auto s = [&](const MultiPoly& p) { return substitute(p, sigma); };
    CHECK(s(f + g) == s(f) + s(g));
    CHECK(s(f * g) == s(f) * s(g));
    std::map<std::string, Rational> point{{"u", rng.rational()}, {"v", rng.rational()}};
    std::map<std::string, Rational> image;
    for (const auto& name : xyz) image[name] = evaluate_at(sigma[name], point).rational_value();
    CHECK(evaluate_at(s(f), point) == evaluate_at(f, image));
  }
}

TEST_CASE("Sturm counts match constructed roots") {
  oracle::Rng rng(oracle::kSeedSturm);
  for (int k = 0; k < kCases; ++k) {
    std::vector<Rational> roots;
    const int n = static_cast<int>(rng.integer(0, 5));
    while (static_cast<int>(roots.size()) < n) {
      Rational r = rng.rational(6, 4);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    // A factor t^2 + q with q > 0 adds no real roots.
    QPoly f = oracle::mul(oracle::from_roots(roots), QPoly{Rational(rng.integer(1, 5), rng.integer(1, 3)), 0, 1});
    f = oracle::scale(f, rng.nonzero_rational());
    Rational lo = rng.rational(7, 2), hi = rng.rational(7, 2);
    if (hi < lo) std::swap(lo, hi);
    int expected = 0;
    for (const auto& r : roots) expected += lo < r && r < hi;
    CAPTURE(k);
    CHECK(sturm_real_root_count(oracle::to_uni(f), {lo, hi}) == expected);
    CHECK(sturm_real_root_count(oracle::to_uni(f)) == n);
    CHECK(oracle::sturm_count(f, &lo, &hi) == expected);

    auto isolated = isolate_real_roots(oracle::to_uni(f));
    CHECK(static_cast<int>(isolated.size()) == n);
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < isolated.size() && i < roots.size(); ++i) {
      CHECK(isolated[i].first <= roots[i]);
      CHECK(roots[i] <= isolated[i].second);
    }
  }
}

TEST_CASE("gcd divides both arguments") {
  oracle::Rng rng(oracle::kSeedGcd);
  for (int k = 0; k < kCases; ++k) {
    QPoly common = rng.poly(static_cast<int>(rng.integer(0, 3)));
    QPoly f = oracle::mul(common, rng.poly(static_cast<int>(rng.integer(0, 3))));
    QPoly g = oracle::mul(common, rng.poly(static_cast<int>(rng.integer(0, 3))));
    QPoly d = oracle::from_uni(gcd(oracle::to_uni(f), oracle::to_uni(g)));
    CAPTURE(k);
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    CHECK(divides(common, d));
    CHECK(d.back() == 1);
    CHECK(d == oracle::gcd(f, g));
  }
}
