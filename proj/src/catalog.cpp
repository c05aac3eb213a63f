#include "revolutio/catalog.hpp"

#include <chrono>
#include <future>

#include "revolutio/algorithms.hpp"
#include "revolutio/real_param.hpp"
#include "revolutio/verify.hpp"

namespace revolutio {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly constant(const FieldElement& c) { return MultiPoly::constant(c); }

// x^2 + y^2 - g(z)
MultiPoly tube(const MultiPoly& g) {
  MultiPoly x = var("x"), y = var("y");
  return x * x + y * y - g;
}

}  // namespace

bool IdentityCheck::ok() const {
  for (const auto& r : residuals) {
    if (!r.is_zero()) return false;
  }
  return true;
}

std::vector<CatalogEntry> formula_catalog() {
  std::vector<CatalogEntry> out;
  const MultiPoly z = var("z");
  const MultiPoly one = constant(1);
  out.push_back({"complex sphere witness", sphere_witness(), tube(one - z * z)});

  for (const auto& coeffs : std::vector<std::vector<Rational>>{{0, 1}, {-1, 0, 1}, {1, 0, 0, 1}}) {
    UniPoly p = UniPoly::from_rationals("t", coeffs);
    TubularSurface T{p.renamed("z")};
    out.push_back({"tubular witness p = " + p.to_string(), tubular_polynomial_param(T, choose_root_alpha(p)),
                   T.implicit()});
  }

  P2Decomposition cone{UniPoly::from_rationals("t", {1}), UniPoly::variable("t"), UniPoly::variable("t"), 0};
  out.push_back({"cylinder-case witness a = t, b = t", cylinder_case_param(cone), tube(z * z)});

  for (long lambda : {1L, 2L}) {
    auto [tower, k] = real_sqrt(Tower::base(), lambda);
    auto abc = one_sheet_abc();
    SurfaceParam s = SurfaceParam::make(constant(k) * abc[0], constant(k) * abc[1], constant(k) * abc[2],
                                        {"sqrt(lambda) [A, B, C]"}, Properness::kProper);
    out.push_back({"one-sheet witness lambda = " + std::to_string(lambda), s, tube(z * z + constant(lambda))});
  }

  auto q = two_sheet_q();
  out.push_back({"two-sheet double cover", SurfaceParam::make(q[0], q[1], q[2], {"q(u, v)"}, Properness::kNonProperDegree2),
                 tube(z * z - one)});
  out.push_back({"cubic witness over Q(sqrt 3)", cubic_example(), tube(z * z * z + one)});

  P2Decomposition lifted{UniPoly::variable("t"), UniPoly::variable("t"), UniPoly::variable("t"), 1};
  out.push_back({"closed formula p = t, a = t, b = t", sor_complex_param(lifted), implicit_surface(lifted)});

  P2Decomposition no_real{UniPoly::from_rationals("t", {1}), UniPoly::from_rationals("t", {1, 0, 1}),
                          UniPoly::variable("t"), 0};
  RealVerdict v = real_param_delta0(no_real);
  if (v.witness) out.push_back({"real witness a = t^2 + 1 via C^2 + 1 = A^2 + B^2", *v.witness, implicit_surface(no_real)});
  return out;
}

IdentityCheck composition_check(const UniPoly& p) {
  RootSpec alpha = choose_root_alpha(p);
  SurfaceParam eq7 = tubular_polynomial_param(TubularSurface{p.renamed("z")}, alpha);
  FieldElement i = imaginary_unit(eq7.tower).second;
  MultiPoly u = var("u"), v = var("v");
  MultiPoly t = u * v + constant(alpha.value);
  MultiPoly pt = substitute(p, t);
  IdentityCheck c;
  c.name = "q o Phi against the tubular witness, p = " + p.to_string();
  // q = [i (s^2 - p(t)) / (2s), (s^2 + p(t)) / (2s), t] at s = v, t = uv + alpha.
  c.residuals.push_back(constant(2) * v * eq7.x - constant(i) * (v * v - pt));
  c.residuals.push_back(constant(2) * v * eq7.y - (v * v + pt));
  c.residuals.push_back(eq7.z - t);
  // q itself lies on the tubularization: 4s^2 (x^2 + y^2 - p) = 0.
  MultiPoly s = var("s"), tt = var("t");
  MultiPoly ps = substitute(p, tt);
  MultiPoly X = constant(i) * (s * s - ps), Y = s * s + ps;
  c.residuals.push_back(X * X + Y * Y - constant(4) * s * s * ps);
  return c;
}

IdentityCheck diophantine_identity_check() {
  return {"four-square identity in q1..q4",
          {dioph_identity_residual(var("q1"), var("q2"), var("q3"), var("q4"))}};
}

IdentityCheck two_sheet_substitution_check() {
  auto q = two_sheet_q1234();
  auto point = dioph_point(q[0], q[1], q[2], q[3]);
  auto expected = two_sheet_q();
  IdentityCheck c;
  c.name = "one-sheet substitution gives the two-sheet witness";
  for (std::size_t k = 0; k < 3; ++k) c.residuals.push_back(point[k] - expected[k]);
  c.residuals.push_back(q[0] * q[3] - q[1] * q[2] - constant(1));
  c.residuals.push_back(dioph_identity_residual(q[0], q[1], q[2], q[3]));
  return c;
}

std::vector<IdentityCheck> catalog_identities() {
  std::vector<IdentityCheck> out;
  for (const auto& coeffs : std::vector<std::vector<Rational>>{{0, 1}, {-1, 0, 1}, {1, 0, 0, 1}}) {
    out.push_back(composition_check(UniPoly::from_rationals("t", coeffs)));
  }
  out.push_back(diophantine_identity_check());
  out.push_back(two_sheet_substitution_check());
  return out;
}

std::vector<CatalogResult> verify_catalog(bool with_fiber, bool parallel) {
  auto run = [with_fiber](const CatalogEntry& e) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = verify_full(e.witness, e.surface, with_fiber);
    CatalogResult out;
    out.name = e.name;
    out.on_surface = r.on_surface;
    out.jacobian_rank = r.jacobian_rank;
    out.fiber_count = r.fiber_count;
    out.residual = r.residual.to_string();
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  };
  std::vector<CatalogEntry> entries = formula_catalog();
  std::vector<CatalogResult> results;
  if (!parallel) {
    for (const auto& e : entries) results.push_back(run(e));
    return results;
  }
  std::vector<std::future<CatalogResult>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, run, std::cref(e)));
  for (auto& j : jobs) results.push_back(j.get());
  return results;
}

}  // namespace revolutio
