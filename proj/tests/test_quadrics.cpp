#include <doctest.h>

#include "oracle.hpp"
#include "revolutio/algorithms.hpp"
#include "revolutio/quadrics.hpp"
#include "revolutio/verify.hpp"

using namespace revolutio;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }
MultiPoly C(const Rational& c) { return MultiPoly::constant(FieldElement(c)); }
const MultiPoly x = var("x"), y = var("y"), z = var("z");

struct Canonical {
  MultiPoly F;
  QuadricClass cls;
};

std::vector<Canonical> canonical() {
  return {
      {x * x + y * y + z * z - C(1), QuadricClass::kEllipsoid},
      {x * x + y * y - z * z - C(1), QuadricClass::kHyperboloidOneSheet},
      {x * x + y * y - z * z + C(1), QuadricClass::kHyperboloidTwoSheets},
      {x * x + y * y - z, QuadricClass::kEllipticParaboloid},
      {x * x - y * y - z, QuadricClass::kHyperbolicParaboloid},
      {x * x + y * y - z * z, QuadricClass::kCone},
      {x * x + y * y - C(1), QuadricClass::kEllipticCylinder},
      {x * x - y * y - C(1), QuadricClass::kHyperbolicCylinder},
      {x * x - z, QuadricClass::kParabolicCylinder},
      {x * x + y * y + z * z + C(1), QuadricClass::kEmpty},
  };
}

// Inertia by symmetric Gaussian elimination (congruence), no characteristic polynomial.
std::array<int, 3> congruence_inertia(SymMatrix m) {
  const std::size_t n = m.size();
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][p] == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; pair an off-diagonal entry.
      std::size_t i = n, j = n;
      for (std::size_t a = k; a < n && i == n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (m[a][b] != 0) {
            i = a;
            j = b;
            break;
          }
        }
      }
      if (i == n) break;
      // Row/column operation r_i += r_j makes the (i, i) entry 2 m[i][j].
      for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
      for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
      p = i;
    }
    std::swap(m[k], m[p]);
    for (auto& row : m) std::swap(row[k], row[p]);
    const Rational d = m[k][k];
    (d > 0 ? pos : neg) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      Rational f = m[r][k] / d;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) m[k][c] = 0;
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) m[c][r] = m[r][c];
    }
  }
  return {pos + neg, pos, neg};
}

// Invertible rational affine change of (x, y, z), applied to F.
MultiPoly conjugate(const MultiPoly& F, oracle::Rng& rng) {
  std::vector<std::vector<Rational>> a;
  do {
    a.assign(3, std::vector<Rational>(3));
    for (auto& row : a) {
      for (auto& e : row) e = rng.integer(-3, 3);
    }
  } while (oracle::leibniz_det(a, Rational(0), Rational(1)) == 0);
  const std::array<MultiPoly, 3> xyz{x, y, z};
  std::map<std::string, MultiPoly> sub;
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    MultiPoly image = C(rng.rational());
    for (int j = 0; j < 3; ++j) image = image + C(a[i][j]) * xyz[j];
    sub[names[i]] = image;
  }
  return substitute(F, sub).with_vars({"x", "y", "z"});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("canonical representatives classify") {
  for (const auto& [F, cls] : canonical()) {
    CAPTURE(F.to_string());
    CHECK(classify_quadric(F) == cls);
  }
  CHECK(quadric_class_label(classify_quadric(x * x + y * y + z * z - C(1))) == "ellipsoid");
  CHECK(quadric_class_label(classify_quadric(x * x + y * y - z * z - C(1))) == "hyperboloid-one-sheet");
  CHECK(quadric_class_label(classify_quadric(x * x - z)) == "parabolic-cylinder");
  CHECK(quadric_class_label(classify_quadric(x * x + y * y - C(1))) == "elliptic-cylinder");
  CHECK(classify_quadric(x * x - y * y) == QuadricClass::kDegenerateReducible);
  CHECK(classify_quadric(x * x - C(1)) == QuadricClass::kDegenerateReducible);
  CHECK(classify_quadric(x * x) == QuadricClass::kDegenerateReducible);
}

TEST_CASE("degree other than two is rejected") {
  CHECK(code_of([] { classify_quadric(x * x * x - z); }) == ErrorCode::kInvalidInput);
  CHECK(code_of([] { classify_quadric(x + y); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("golden table") {
  struct Golden {
    const char* group;
    const char* name;
    const char* entry;
  };
  const std::vector<Golden> golden{
      {"singular quadrics", "cone", "yes"},
      {"singular quadrics", "elliptic cylinder", "no"},
      {"singular quadrics", "hyperbolic cylinder", "no"},
      {"singular quadrics", "parabolic cylinder", "yes"},
      {"regular quadrics", "ellipsoid", "yes (over ℂ only)"},
      {"regular quadrics", "hyperboloid of one sheet", "yes"},
      {"regular quadrics", "hyperboloid of two sheets", "yes (over ℂ or non-proper over ℝ)"},
      {"regular quadrics", "hyperbolic paraboloid", "yes"},
      {"regular quadrics", "elliptic paraboloid", "yes"},
  };
  const auto& table = quadric_table();
  REQUIRE(table.size() == golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    CHECK(table[i].group == golden[i].group);
    CHECK(table[i].name == golden[i].name);
    CHECK(table[i].entry == golden[i].entry);
    QuadricReport r = quadric_verdict(table[i].cls);
    CHECK(r.table_entry == golden[i].entry);
    CHECK(r.table_name == golden[i].name);
  }

  auto verdict = [](QuadricClass c) {
    QuadricReport r = quadric_verdict(c);
    return std::make_pair(r.polynomial_over_c, r.polynomial_over_r);
  };
  using K = RealVerdictKind;
  CHECK(verdict(QuadricClass::kCone) == std::make_pair(std::optional<bool>(true), K::kYes));
  CHECK(verdict(QuadricClass::kEllipticCylinder) == std::make_pair(std::optional<bool>(false), K::kNo));
  CHECK(verdict(QuadricClass::kHyperbolicCylinder) == std::make_pair(std::optional<bool>(false), K::kNo));
  CHECK(verdict(QuadricClass::kParabolicCylinder) == std::make_pair(std::optional<bool>(true), K::kYes));
  CHECK(verdict(QuadricClass::kEllipsoid) == std::make_pair(std::optional<bool>(true), K::kNo));
  CHECK(verdict(QuadricClass::kHyperboloidOneSheet) == std::make_pair(std::optional<bool>(true), K::kYes));
  CHECK(verdict(QuadricClass::kHyperboloidTwoSheets) == std::make_pair(std::optional<bool>(true), K::kYesNonproper));
  CHECK(verdict(QuadricClass::kHyperbolicParaboloid) == std::make_pair(std::optional<bool>(true), K::kYes));
  CHECK(verdict(QuadricClass::kEllipticParaboloid) == std::make_pair(std::optional<bool>(true), K::kYes));
  CHECK(verdict(QuadricClass::kEmpty) == std::make_pair(std::optional<bool>(), K::kNoRealPoints));
  CHECK(real_verdict_kind_name(K::kYesNonproper) == "yes-nonproper");
  CHECK(code_of([] { quadric_verdict(QuadricClass::kDegenerateReducible); }) == ErrorCode::kUnsupported);
}

TEST_CASE("inertia agrees with congruence diagonalization") {
  oracle::Rng rng(oracle::kSeedQuadric + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    SymMatrix m(n, std::vector<Rational>(n));
    // Low rank on purpose now and then.
    const bool sparse = trial % 3 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m[i][j] = m[j][i] = sparse && rng.integer(0, 1) ? Rational(0) : rng.rational();
      }
    }
    Inertia got = inertia(m);
    auto want = congruence_inertia(m);
    CAPTURE(trial);
    CHECK(got.rank == want[0]);
    CHECK(got.positive == want[1]);
    CHECK(got.negative == want[2]);
  }
}

TEST_CASE("characteristic polynomial matches a Leibniz determinant") {
  oracle::Rng rng(oracle::kSeedQuadric + 2);
  for (int trial = 0; trial < 30; ++trial) {
    SymMatrix m(3, std::vector<Rational>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j) m[i][j] = m[j][i] = rng.rational();
    }
    const MultiPoly t = var("t");
    std::vector<std::vector<MultiPoly>> lm(3, std::vector<MultiPoly>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) lm[i][j] = (i == j ? t : MultiPoly()) - C(m[i][j]);
    }
    MultiPoly want = oracle::leibniz_det(lm, MultiPoly(), C(1));
    CHECK(oracle::from_uni(characteristic_polynomial(m)) == oracle::from_uni(want.to_unipoly("t")));
  }
}

TEST_CASE("classification is invariant under rational affine conjugation") {
  oracle::Rng rng(oracle::kSeedQuadric);
  for (const auto& [F, cls] : canonical()) {
    for (int k = 0; k < 20; ++k) {
      MultiPoly G = conjugate(F, rng);
      CAPTURE(G.to_string());
      CHECK(classify_quadric(G) == cls);
    }
  }
}

TEST_CASE("witnesses lie on the quadric") {
  for (const auto& [F, cls] : canonical()) {
    QuadricReport r = analyze_quadric(F);
    CAPTURE(quadric_class_label(cls));
    if (r.witness) {
      CHECK(verify_on_surface(*r.witness, F).on_surface);
      CHECK(jacobian_generic_rank(*r.witness) == 2);
    } else {
      CHECK(!r.refusal.empty());
    }
  }
  // Paraboloid of revolution gives the obvious graph.
  MultiPoly parab = x * x + y * y - z;
  SurfaceParam p = quadric_param(parab, QuadricClass::kEllipticParaboloid);
  CHECK(verify_on_surface(p, parab).on_surface);

  MultiPoly ell = C(4) * x * x + y * y + z * z - C(1);
  QuadricReport e = analyze_quadric(ell);
  CHECK(e.cls == QuadricClass::kEllipsoid);
  REQUIRE(e.witness);
  VerificationReport v = verify_on_surface(*e.witness, ell);
  CHECK(v.on_surface);
  CHECK(v.residual.is_zero());
}

TEST_CASE("witnesses survive diagonal scaling and translation") {
  oracle::Rng rng(oracle::kSeedQuadric + 3);
  const char* names[] = {"x", "y", "z"};
  const std::array<MultiPoly, 3> xyz{x, y, z};
  for (const auto& [F, cls] : canonical()) {
    if (cls == QuadricClass::kEmpty || cls == QuadricClass::kEllipticCylinder ||
        cls == QuadricClass::kHyperbolicCylinder) {
      continue;
    }
    for (int k = 0; k < 8; ++k) {
      std::map<std::string, MultiPoly> sub;
      for (int i = 0; i < 3; ++i) sub[names[i]] = C(rng.nonzero_rational()) * xyz[i] + C(rng.rational());
      MultiPoly G = substitute(F, sub).with_vars({"x", "y", "z"});
      CAPTURE(G.to_string());
      SurfaceParam s = quadric_param(G, classify_quadric(G));
      CHECK(verify_on_surface(s, G).on_surface);
    }
  }
}

TEST_CASE("graph case accepts cross terms") {
  MultiPoly F = x * y + x * x - z;
  SurfaceParam s = quadric_param(F, classify_quadric(F));
  CHECK(verify_on_surface(s, F).on_surface);
}

TEST_CASE("refusals") {
  CHECK(code_of([] { quadric_param(x * x + y * y - C(1), QuadricClass::kEllipticCylinder); }) ==
        ErrorCode::kNotPolynomial);
  CHECK(code_of([] { quadric_param(x * x - y * y - C(1), QuadricClass::kHyperbolicCylinder); }) ==
        ErrorCode::kNotPolynomial);
  CHECK(code_of([] { quadric_param(x * x + y * y + z * z + C(1), QuadricClass::kEmpty); }) ==
        ErrorCode::kEmptyRealLocus);
  MultiPoly rotated = x * x + x * y + y * y + z * z - C(1);
  CHECK(code_of([&] { quadric_param(rotated, classify_quadric(rotated)); }) == ErrorCode::kUnsupported);

  QuadricReport cyl = analyze_quadric(x * x + y * y - C(1));
  CHECK(!cyl.witness);
  CHECK(cyl.refusal.find("elliptic-cylinder") != std::string::npos);

  QuadricReport rot = analyze_quadric(rotated);
  CHECK(rot.cls == QuadricClass::kEllipsoid);
  CHECK(!rot.witness);
  CHECK(!rot.refusal.empty());
}
