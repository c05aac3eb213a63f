#include <doctest.h>

#include "oracle.hpp"
#include "revolutio/algorithms.hpp"
#include "revolutio/numeric.hpp"
#include "revolutio/real_param.hpp"
#include "revolutio/verify.hpp"

using namespace revolutio;

namespace {

UniPoly P(std::vector<Rational> c) { return UniPoly::from_rationals("t", c); }
UniPoly Z(std::vector<Rational> c) { return UniPoly::from_rationals("z", c); }
MultiPoly var(const char* n) { return MultiPoly::variable(n); }
MultiPoly C(const FieldElement& c) { return MultiPoly::constant(c); }
const MultiPoly u = var("u"), v = var("v"), x = var("x"), y = var("y"), z = var("z");

P2Decomposition D(std::vector<Rational> p, std::vector<Rational> a, std::vector<Rational> b) {
  UniPoly pp = P(p);
  return {pp, P(a), P(b), pp.degree()};
}

void check_witness_invariant(const RealVerdict& r, const MultiPoly& F) {
  bool real = r.status == RealStatus::kRealProper || r.status == RealStatus::kRealNonproperDoubleCover;
  CHECK(r.witness.has_value() == real);
  if (r.witness) {
    CHECK(r.witness->tower->all_real());
    CHECK(verify_on_surface(*r.witness, F).on_surface);
    CHECK(jacobian_generic_rank(*r.witness) == 2);
  }
}

}  // namespace

TEST_CASE("canonical quadratics") {
  auto check_round_trip = [](const UniPoly& p, const CanonicalQuadratic& c) {
    UniPoly expected = UniPoly::from_rationals("t", {c.lambda, 0, Rational(c.sign)});
    CHECK(c.reparam.apply(p.renamed("t")) == expected);
  };
  auto a = canonicalize_quadratic(Z({-1, 0, 1}));
  CHECK(a.sign == 1);
  CHECK(a.lambda == -1);
  CHECK(a.reparam == AffineReparam::identity());

  UniPoly p = Z({0, 8, 4});
  auto b = canonicalize_quadratic(p);
  CHECK(b.sign == 1);
  CHECK(b.lambda == -4);
  CHECK(b.reparam.scale == FieldElement(Rational(1, 2)));
  CHECK(b.reparam.shift == FieldElement(-1));
  check_round_trip(p, b);

  UniPoly q = Z({1, 0, -9});
  auto c = canonicalize_quadratic(q);
  CHECK(c.sign == -1);
  CHECK(c.lambda == 1);
  CHECK(c.reparam.scale == FieldElement(Rational(1, 3)));
  check_round_trip(q, c);

  // |c2| not a square: scale picks up a square root.
  UniPoly r = Z({1, 1, 2});
  auto d = canonicalize_quadratic(r);
  CHECK(!d.reparam.scale.is_rational());
  check_round_trip(r, d);

  CHECK_THROWS_AS(canonicalize_quadratic(Z({1, 1})), Error);
}

TEST_CASE("Delta = 1") {
  auto r = real_param_delta1(D({0, 1}, {1}, {0, 1}));
  CHECK(r.status == RealStatus::kRealProper);
  REQUIRE(r.witness);
  CHECK(r.witness->x == u);
  CHECK(r.witness->y == v);
  CHECK(r.witness->z == u * u + v * v);

  auto s = real_param_delta1(D({0, 1}, {0, 1}, {0, 1}));
  MultiPoly N = u * u + v * v;
  REQUIRE(s.witness);
  CHECK(s.witness->x == N * u);
  CHECK(s.witness->y == N * v);
  CHECK(s.witness->z == N);
  check_witness_invariant(s, x * x + y * y - z.pow(3));

  auto t = real_param_delta1(D({0, 1}, {1}, {0, 0, 1}));
  MultiPoly W = x * x + y * y;
  check_witness_invariant(t, W * W - z);

  // p = 2t + 3 is moved to t first.
  auto w = real_param_delta1(D({3, 2}, {1}, {0, 1}));
  check_witness_invariant(w, x * x + y * y - C(2) * z - C(3));
}

TEST_CASE("Delta = 2") {
  auto sphere = real_param_delta2(D({1, 0, -1}, {1}, {0, 1}));
  CHECK(sphere.status == RealStatus::kNoRealParametrization);
  CHECK(sphere.reason == "compact (sphere tubularization)");
  CHECK(!sphere.witness);

  auto one = real_param_delta2(D({1, 0, 1}, {1}, {0, 1}));
  CHECK(one.status == RealStatus::kRealProper);
  REQUIRE(one.witness);
  auto abc = one_sheet_abc();
  CHECK(one.witness->x == v - u * (u * v + C(1)));
  CHECK(one.witness->y == C(2) * u * v + C(1));
  CHECK(one.witness->z == u * (u * v + C(1)) + v);
  CHECK(one.witness->x == abc[0]);
  check_witness_invariant(one, x * x + y * y - z * z - C(1));

  auto two = real_param_delta2(D({-1, 0, 1}, {1}, {0, 1}));
  CHECK(two.status == RealStatus::kRealNonproperDoubleCover);
  REQUIRE(two.witness);
  auto q = two_sheet_q();
  CHECK(two.witness->x == q[0]);
  CHECK(two.witness->y == q[1]);
  CHECK(two.witness->z == q[2]);
  CHECK(two.witness->properness == Properness::kNonProperDegree2);
  check_witness_invariant(two, x * x + y * y - z * z + C(1));
  CHECK(fiber_count_auto(*two.witness).first == 2);

  auto empty = real_param_delta2(D({-1, 0, -1}, {1}, {0, 1}));
  CHECK(empty.status == RealStatus::kEmptyRealLocus);

  // lambda = 2 before lifting: x^2 + y^2 - z^2 = 2.
  auto scaled = real_param_delta2(D({2, 0, 1}, {1}, {0, 1}));
  REQUIRE(scaled.witness);
  const auto& w = *scaled.witness;
  CHECK(w.x * w.x + w.y * w.y - w.z * w.z == C(2));

  // A non-monic, shifted quadratic with a lift.
  auto general = real_param_delta2(D({1, 2, 3}, {1, 1}, {0, 2}));
  check_witness_invariant(general, implicit_surface(D({1, 2, 3}, {1, 1}, {0, 2})));
}

TEST_CASE("Delta = 0") {
  auto cone = real_param_delta0(D({1}, {0, 1}, {0, 1}));
  CHECK(cone.status == RealStatus::kRealProper);
  REQUIRE(cone.witness);
  CHECK(cone.witness->x == C(-2) * u * v);
  CHECK(cone.witness->y == v * v - u * u);
  CHECK(cone.witness->z == u * u + v * v);

  auto eq9 = real_param_delta0(D({1}, {1, 0, 1}, {0, 1}));
  CHECK(eq9.status == RealStatus::kRealProper);
  check_witness_invariant(eq9, x * x + y * y - (z * z + C(1)).pow(2));

  auto cyl = real_param_delta0(D({1}, {1}, {0, 1}));
  CHECK(cyl.status == RealStatus::kNoRealParametrization);
  CHECK(cyl.reason == "cylinder");

  auto neg = real_param_delta0(D({-1}, {0, 1}, {0, 1}));
  CHECK(neg.status == RealStatus::kEmptyRealLocus);

  // Shifted and scaled quadratic factors, several pairs, irrational scaling.
  for (auto a : std::vector<std::vector<Rational>>{{2, 2, 1}, {4, 0, 5, 0, 1}, {3, 0, 1}, {5, 2, 2}}) {
    P2Decomposition d = D({2}, a, {1, 1});
    auto r = real_param_delta0(d);
    CAPTURE(d.a.to_string());
    CHECK(r.status == RealStatus::kRealProper);
    check_witness_invariant(r, implicit_surface(d));
  }
  // Irrational real root of a.
  auto irr = real_param_delta0(D({1}, {-2, 0, 1}, {0, 1}));
  check_witness_invariant(irr, x * x + y * y - (z * z - C(2)).pow(2));
}

TEST_CASE("four-square identity") {
  MultiPoly one = C(1), zero;
  CHECK(dioph_identity_residual(one, zero, zero, one).is_zero());
  oracle::Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    auto r = [&] { return C(FieldElement(rng.rational(20, 7))); };
    CHECK(dioph_identity_residual(r(), r(), r(), r()).is_zero());
  }
  CHECK(dioph_identity_residual(var("q1"), var("q2"), var("q3"), var("q4")).is_zero());

  auto q = two_sheet_q1234();
  CHECK(q[0] * q[3] - q[1] * q[2] == one);
  CHECK(dioph_identity_residual(q[0], q[1], q[2], q[3]).is_zero());
  auto pt = dioph_point(q[0], q[1], q[2], q[3]);
  auto expected = two_sheet_q();
  for (int i = 0; i < 3; ++i) CHECK(pt[i] == expected[i]);
  // The point lies on x^2 + y^2 - z^2 = -1 because q1 q4 - q2 q3 = 1.
  CHECK(pt[0] * pt[0] + pt[1] * pt[1] - pt[2] * pt[2] == -one);
}

TEST_CASE("conjecture predicate") {
  CHECK(conjecture_predicate(D({0, 1}, {1}, {0, 1})).satisfied());
  CHECK(conjecture_predicate(D({1, 0, 1}, {1}, {0, 1})).satisfied());
  auto sphere = conjecture_predicate(D({1, 0, -1}, {1}, {0, 1}));
  CHECK(!sphere.satisfied());
  CHECK(sphere.real_roots == 2);
  CHECK(!conjecture_predicate(D({0, -1, 0, 1}, {1}, {0, 1})).satisfied());
  auto empty = conjecture_predicate(D({-1, 0, -1}, {1}, {0, 1}));
  CHECK(!empty.two_dimensional);
}

TEST_CASE("cubic witness") {
  SurfaceParam s = cubic_example();
  CHECK(verify_on_surface(s, x * x + y * y - z.pow(3) - C(1)).on_surface);
  CHECK(evaluate_at(s.z, {{"u", 0}, {"v", 0}}).is_zero());
  CHECK(jacobian_generic_rank(s) == 2);
  REQUIRE(s.tower->height() == 1);
  CHECK(s.tower->step(0).embedding.is_real());
  FieldElement r3 = FieldElement::generator(s.tower, 0);
  CHECK(r3 * r3 == FieldElement(3));
  CHECK(numeric_eval_real(r3) > 0);
}

TEST_CASE("dispatch and higher Delta") {
  auto cubic = real_param(D({1, 0, 0, 1}, {1}, {0, 1}));
  CHECK(cubic.status == RealStatus::kRealProper);
  REQUIRE(cubic.evidence);
  check_witness_invariant(cubic, x * x + y * y - z.pow(3) - C(1));

  auto open = real_param(D({0, -1, 0, 1}, {1}, {0, 1}));
  CHECK(open.status == RealStatus::kUnresolved);
  CHECK(!open.witness);
  REQUIRE(open.evidence);
  CHECK(open.evidence->real_roots == 3);
  CHECK(real_status_code(open.status) == "UNRESOLVED");
}
