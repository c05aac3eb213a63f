#include "revolutio/quadrics.hpp"

#include "revolutio/algorithms.hpp"
#include "revolutio/real_param.hpp"
#include "revolutio/verify.hpp"

namespace revolutio {

namespace {

const std::vector<std::string> kSpace{"x", "y", "z"};

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly constant(const FieldElement& c) { return MultiPoly::constant(c); }

int rank_of(SymMatrix m) {
  const std::size_t n = m.size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int sign_variations(const std::vector<Rational>& coeffs) {
  int count = 0, prev = 0;
  for (const auto& c : coeffs) {
    int s = sign(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct Diagonal {
  Rational a[3];  // x_i^2 coefficients
  Rational b[3];  // x_i coefficients
  Rational c = 0;
};

Diagonal diagonal_form(const MultiPoly& F) {
  Diagonal d;
  const MultiPoly G = F.with_vars(kSpace);
  for (const auto& [m, coeff] : G.terms()) {
    const Rational c = coeff.rational_value();
    int degree = m[0] + m[1] + m[2];
    int nonzero = (m[0] > 0) + (m[1] > 0) + (m[2] > 0);
    if (degree == 2 && nonzero == 2) {
      throw Error(ErrorCode::kUnsupported, "quadratic part has cross terms; witnesses need a diagonal quadratic part");
    }
    for (int i = 0; i < 3; ++i) {
      if (m[static_cast<std::size_t>(i)] == 2) d.a[i] = c;
      if (m[static_cast<std::size_t>(i)] == 1) d.b[i] = c;
    }
    if (degree == 0) d.c = c;
  }
  return d;
}

// The surface param from per-coordinate polynomials.
SurfaceParam finish(const std::array<MultiPoly, 3>& xyz, std::vector<std::string> provenance, Properness prop,
                    const MultiPoly& F) {
  SurfaceParam s = SurfaceParam::make(xyz[0], xyz[1], xyz[2], std::move(provenance), prop);
  if (!verify_on_surface(s, F).on_surface) throw Error(ErrorCode::kInternal, "quadric witness is not on the surface");
  require_dominant(s);
  return s;
}

}  // namespace

std::string quadric_class_label(QuadricClass c) {
  switch (c) {
    case QuadricClass::kEllipsoid: return "ellipsoid";
    case QuadricClass::kHyperboloidOneSheet: return "hyperboloid-one-sheet";
    case QuadricClass::kHyperboloidTwoSheets: return "hyperboloid-two-sheets";
    case QuadricClass::kEllipticParaboloid: return "elliptic-paraboloid";
    case QuadricClass::kHyperbolicParaboloid: return "hyperbolic-paraboloid";
    case QuadricClass::kCone: return "cone";
    case QuadricClass::kEllipticCylinder: return "elliptic-cylinder";
    case QuadricClass::kHyperbolicCylinder: return "hyperbolic-cylinder";
    case QuadricClass::kParabolicCylinder: return "parabolic-cylinder";
    case QuadricClass::kEmpty: return "empty/imaginary";
    case QuadricClass::kDegenerateReducible: return "degenerate-reducible";
  }
  return "degenerate-reducible";
}

std::string real_verdict_kind_name(RealVerdictKind k) {
  switch (k) {
    case RealVerdictKind::kYes: return "yes";
    case RealVerdictKind::kYesNonproper: return "yes-nonproper";
    case RealVerdictKind::kNo: return "no";
    case RealVerdictKind::kNoRealPoints: return "no-real-points";
  }
  return "no";
}

UniPoly characteristic_polynomial(const SymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  SymMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    SymMatrix next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += coeffs[n - k + 1];
    }
    m = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    coeffs[n - k] = -trace / static_cast<long>(k);
  }
  return UniPoly::from_rationals("t", coeffs);
}

Inertia inertia(const SymMatrix& m) {
  UniPoly chi = characteristic_polynomial(m);
  std::vector<Rational> c, c_neg;
  for (int k = 0; k <= chi.degree(); ++k) {
    Rational ck = chi.coeff(k).rational_value();
    c.push_back(ck);
    c_neg.push_back(k % 2 == 0 ? ck : Rational(-ck));
  }
  Inertia in;
  in.positive = sign_variations(c);
  in.negative = sign_variations(c_neg);
  in.rank = rank_of(m);
  if (in.rank != in.positive + in.negative) throw Error(ErrorCode::kInternal, "inertia and rank disagree");
  return in;
}

SymMatrix quadric_matrix(const MultiPoly& F) {
  for (const auto& v : F.used_vars()) {
    if (v != "x" && v != "y" && v != "z") throw Error(ErrorCode::kInvalidInput, "quadric may only use x, y, z");
  }
  if (F.total_degree() != 2) throw Error(ErrorCode::kInvalidInput, "quadric must have total degree 2");
  if (!F.is_rational()) throw Error(ErrorCode::kInvalidInput, "quadric must have rational coefficients");
  SymMatrix m(4, std::vector<Rational>(4, Rational(0)));
  const MultiPoly G = F.with_vars(kSpace);
  for (const auto& [mono, coeff] : G.terms()) {
    const Rational c = coeff.rational_value();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i) {
      for (int e = 0; e < mono[i]; ++e) idx.push_back(i);
    }
    while (idx.size() < 2) idx.push_back(3);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += c;
    } else {
      m[idx[0]][idx[1]] += c / 2;
      m[idx[1]][idx[0]] += c / 2;
    }
  }
  return m;
}

QuadricInvariants quadric_invariants(const MultiPoly& F) {
  SymMatrix m = quadric_matrix(F);
  SymMatrix q(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) q[i][j] = m[i][j];
  }
  return {inertia(m), inertia(q)};
}

QuadricClass classify_quadric(const MultiPoly& F) {
  QuadricInvariants inv = quadric_invariants(F);
  const int r4 = inv.full.rank, r3 = inv.quadratic.rank;
  const int s4 = inv.full.abs_signature(), s3 = inv.quadratic.abs_signature();
  if (r4 <= 2) return QuadricClass::kDegenerateReducible;
  if (r3 == 3 && r4 == 4) {
    if (s3 == 3) return s4 == 2 ? QuadricClass::kEllipsoid : QuadricClass::kEmpty;
    return s4 == 0 ? QuadricClass::kHyperboloidOneSheet : QuadricClass::kHyperboloidTwoSheets;
  }
  if (r3 == 3 && r4 == 3) return s3 == 1 ? QuadricClass::kCone : QuadricClass::kEmpty;
  if (r3 == 2 && r4 == 4) return s3 == 2 ? QuadricClass::kEllipticParaboloid : QuadricClass::kHyperbolicParaboloid;
  if (r3 == 2 && r4 == 3) {
    if (s3 == 0) return QuadricClass::kHyperbolicCylinder;
    return s4 == 1 ? QuadricClass::kEllipticCylinder : QuadricClass::kEmpty;
  }
  if (r3 == 1 && r4 == 3) return QuadricClass::kParabolicCylinder;
  return QuadricClass::kDegenerateReducible;
}

const std::vector<TableRow>& quadric_table() {
  static const std::vector<TableRow> rows{
      {"singular quadrics", "cone", "yes", QuadricClass::kCone},
      {"singular quadrics", "elliptic cylinder", "no", QuadricClass::kEllipticCylinder},
      {"singular quadrics", "hyperbolic cylinder", "no", QuadricClass::kHyperbolicCylinder},
      {"singular quadrics", "parabolic cylinder", "yes", QuadricClass::kParabolicCylinder},
      {"regular quadrics", "ellipsoid", "yes (over ℂ only)", QuadricClass::kEllipsoid},
      {"regular quadrics", "hyperboloid of one sheet", "yes", QuadricClass::kHyperboloidOneSheet},
      {"regular quadrics", "hyperboloid of two sheets", "yes (over ℂ or non-proper over ℝ)",
       QuadricClass::kHyperboloidTwoSheets},
      {"regular quadrics", "hyperbolic paraboloid", "yes", QuadricClass::kHyperbolicParaboloid},
      {"regular quadrics", "elliptic paraboloid", "yes", QuadricClass::kEllipticParaboloid},
  };
  return rows;
}

QuadricReport quadric_verdict(QuadricClass c) {
  if (c == QuadricClass::kDegenerateReducible) {
    throw Error(ErrorCode::kUnsupported, "degenerate or reducible quadric; not covered by the table");
  }
  QuadricReport r;
  r.cls = c;
  if (c == QuadricClass::kEmpty) {
    r.polynomial_over_r = RealVerdictKind::kNoRealPoints;
    r.table_name = "empty/imaginary";
    return r;
  }
  for (const auto& row : quadric_table()) {
    if (row.cls != c) continue;
    r.table_group = row.group;
    r.table_name = row.name;
    r.table_entry = row.entry;
  }
  switch (c) {
    case QuadricClass::kEllipticCylinder:
    case QuadricClass::kHyperbolicCylinder:
      r.polynomial_over_c = false;
      r.polynomial_over_r = RealVerdictKind::kNo;
      break;
    case QuadricClass::kEllipsoid:
      r.polynomial_over_c = true;
      r.polynomial_over_r = RealVerdictKind::kNo;
      break;
    case QuadricClass::kHyperboloidTwoSheets:
      r.polynomial_over_c = true;
      r.polynomial_over_r = RealVerdictKind::kYesNonproper;
      break;
    default:
      r.polynomial_over_c = true;
      r.polynomial_over_r = RealVerdictKind::kYes;
  }
  return r;
}

SurfaceParam quadric_param(const MultiPoly& F, QuadricClass cls) {
  switch (cls) {
    case QuadricClass::kDegenerateReducible:
      throw Error(ErrorCode::kUnsupported, "degenerate or reducible quadric");
    case QuadricClass::kEllipticCylinder:
    case QuadricClass::kHyperbolicCylinder:
      throw Error(ErrorCode::kNotPolynomial, quadric_class_label(cls) + " has no polynomial parametrization");
    case QuadricClass::kEmpty:
      throw Error(ErrorCode::kEmptyRealLocus, "quadric has no real points");
    default:
      break;
  }
  MultiPoly uv[2] = {var("u"), var("v")};
  std::array<MultiPoly, 3> xyz;

  // Graph over the other two coordinates when some variable enters only
  // linearly with a constant coefficient. Cross terms are fine here.
  for (std::size_t k = 0; k < 3; ++k) {
    if (F.degree_in(kSpace[k]) != 1) continue;
    auto parts = F.coefficients_in(kSpace[k]);
    if (!parts[1].is_constant()) continue;
    std::map<std::string, MultiPoly> image;
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == k) continue;
      xyz[i] = uv[next++];
      image[kSpace[i]] = xyz[i];
    }
    image[kSpace[k]] = var(kSpace[k]);
    xyz[k] = -substitute(parts[0], image) * parts[1].constant_value().inverse();
    return finish(xyz, {"graph over the other two coordinates"}, Properness::kProper, F);
  }

  const Diagonal d = diagonal_form(F);

  // Central quadrics: a_i != 0 for all i.
  Rational sigma[3], c = d.c;
  for (int i = 0; i < 3; ++i) {
    if (d.a[i] == 0) throw Error(ErrorCode::kInternal, "central quadric with a vanishing square term");
    sigma[i] = -d.b[i] / (2 * d.a[i]);
    c -= d.b[i] * d.b[i] / (4 * d.a[i]);
  }
  // beta_i X_i^2 = +-1 (or 0 for the cone) with X_i = x_i - sigma_i.
  Rational beta[3];
  Rational norm = c == 0 ? Rational(1) : Rational(-c);
  for (int i = 0; i < 3; ++i) beta[i] = d.a[i] / norm;
  // Index whose sign differs from the other two (none for the ellipsoid).
  int odd = -1;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (sign(beta[i]) != sign(beta[j]) && sign(beta[j]) == sign(beta[k])) odd = i;
  }
  std::array<MultiPoly, 3> y;  // canonical coordinates Y_i = sqrt|beta_i| X_i
  std::vector<std::string> provenance;
  Properness prop = Properness::kUnknown;
  int pair[2] = {0, 1};
  if (odd >= 0) {
    int n = 0;
    for (int i = 0; i < 3; ++i) {
      if (i != odd) pair[n++] = i;
    }
  }
  const auto p0 = static_cast<std::size_t>(pair[0]), p1 = static_cast<std::size_t>(pair[1]);
  const auto o = static_cast<std::size_t>(odd < 0 ? 2 : odd);
  switch (cls) {
    case QuadricClass::kCone: {
      MultiPoly u = uv[0], v = uv[1];
      y[p0] = constant(FieldElement(-2)) * u * v;
      y[p1] = v * v - u * u;
      y[o] = u * u + v * v;
      provenance.push_back("cone [-2uv, v^2 - u^2, u^2 + v^2]");
      break;
    }
    case QuadricClass::kEllipsoid: {
      SurfaceParam sphere = sphere_witness();
      y = sphere.components();
      provenance.push_back("complex sphere witness");
      break;
    }
    case QuadricClass::kHyperboloidOneSheet: {
      auto abc = one_sheet_abc();
      y[p0] = abc[0];
      y[p1] = abc[1];
      y[o] = abc[2];
      provenance.push_back("one-sheeted hyperboloid [A, B, C]");
      prop = Properness::kProper;
      break;
    }
    case QuadricClass::kHyperboloidTwoSheets: {
      auto q = two_sheet_q();
      y[p0] = q[0];
      y[p1] = q[1];
      y[o] = q[2];
      provenance.push_back("two-sheeted hyperboloid double cover q(u, v)");
      prop = Properness::kNonProperDegree2;
      break;
    }
    default:
      throw Error(ErrorCode::kInternal, "unexpected quadric class for a central quadric");
  }
  TowerPtr tower = Tower::base();
  for (const auto& comp : y) tower = join_towers(tower, comp.tower());
  for (std::size_t i = 0; i < 3; ++i) {
    Rational b = abs(beta[i]);
    if (cls == QuadricClass::kCone && i == o) b = 1;
    if (cls == QuadricClass::kCone && i != o) b = abs(beta[i] / beta[o]);
    auto [t, k] = real_sqrt(tower, Rational(1 / b));
    tower = t;
    xyz[i] = constant(k) * y[i] + constant(FieldElement(sigma[i]));
  }
  provenance.push_back("affine map back: x_i = Y_i / sqrt|beta_i| + sigma_i");
  return finish(xyz, provenance, prop, F);
}

QuadricReport analyze_quadric(const MultiPoly& F) {
  QuadricClass cls = classify_quadric(F);
  QuadricReport r = quadric_verdict(cls);
  if (r.polynomial_over_c.value_or(false)) {
    try {
      r.witness = quadric_param(F, cls);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupported) throw;
      r.refusal = e.what();
    }
  } else {
    r.refusal = quadric_class_label(cls) + ": no polynomial parametrization";
  }
  return r;
}

}  // namespace revolutio
