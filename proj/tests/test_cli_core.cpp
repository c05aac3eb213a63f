#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "revolutio/algorithms.hpp"
#include "revolutio/catalog.hpp"
#include "revolutio/expression.hpp"
#include "revolutio/mesh.hpp"
#include "revolutio/pipeline.hpp"
#include "revolutio/real_param.hpp"
#include "revolutio/verify.hpp"

using namespace revolutio;

namespace {

MultiPoly var(const char* n) { return MultiPoly::variable(n); }
MultiPoly C(const Rational& c) { return MultiPoly::constant(FieldElement(c)); }
const MultiPoly x = var("x"), y = var("y"), z = var("z"), u = var("u"), v = var("v");

ParseError parse_failure(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  throw;
}

CommandResult analyze_implicit(const std::string& F, bool fiber = false) {
  AnalyzeRequest r;
  r.texts = {F};
  r.fiber = fiber;
  return analyze(r);
}

}  // namespace

TEST_CASE("expression parser") {
  CHECK(parse_polynomial("x^2+y^2-z") == x * x + y * y - z);
  CHECK(parse_polynomial("-x^2") == -(x * x));
  CHECK(parse_polynomial("2^3^2") == C(64));  // left to right
  CHECK(parse_polynomial("(x+1)*(x-1)") == x * x - C(1));
  CHECK(parse_polynomial("x/2 + 0.25") == C(Rational(1, 2)) * x + C(Rational(1, 4)));
  CHECK(parse_polynomial("  x  *  y ") == x * y);
  CHECK(parse_univariate("t^3 + 1").degree() == 3);

  ParseError implicit_mul = parse_failure("2x");
  CHECK(implicit_mul.code() == ErrorCode::kSyntaxError);
  CHECK(implicit_mul.position() == 1);

  ParseError negative_exp = parse_failure("x^-1");
  CHECK(negative_exp.code() == ErrorCode::kSyntaxError);
  CHECK(std::string(negative_exp.what()).rfind("column 3:", 0) == 0);

  CHECK(parse_failure("x +").code() == ErrorCode::kSyntaxError);
  CHECK(parse_failure("(x").code() == ErrorCode::kSyntaxError);
  CHECK(parse_failure("x^1.5").code() == ErrorCode::kSyntaxError);
  CHECK(parse_failure("q + 1").code() == ErrorCode::kInvalidInput);
  CHECK(parse_failure("x/y").code() == ErrorCode::kInvalidInput);
  CHECK(parse_failure("x/0").code() == ErrorCode::kInvalidInput);
  CHECK(parse_failure("x^100000").code() == ErrorCode::kInvalidInput);
  CHECK_THROWS_AS(parse_univariate("t + s"), Error);
}

TEST_CASE("tower generators parse as constants") {
  auto [tower, r3] = real_sqrt(Tower::base(), 3);
  ParseOptions options;
  options.variables = {"u", "v"};
  options.tower = tower;
  const std::string g = tower->step(0).name;
  MultiPoly p = parse_polynomial(g + "*u + " + g + "^2", options);
  CHECK(p == MultiPoly::constant(r3) * u + C(3));
}

TEST_CASE("JSON round trip") {
  oracle::Rng rng(oracle::kSeedRing + 7);
  for (int k = 0; k < 50; ++k) {
    MultiPoly p = oracle::random_multi(rng, {"x", "y", "z"}, 5, 3);
    CHECK(poly_from_json(Json::parse(poly_json(p).dump()), Tower::base()) == p);
    Rational q = rng.rational();
    CHECK(rational_from_json(rational_json(q)) == q);
  }
  for (const auto& entry : formula_catalog()) {
    const SurfaceParam& s = entry.witness;
    SurfaceParam back = surface_param_from_json(Json::parse(surface_param_json(s).dump()));
    CAPTURE(entry.name);
    CHECK(back.tower->height() == s.tower->height());
    CHECK(back.properness == s.properness);
    CHECK(back.provenance == s.provenance);
    // Generators keep their names, so the texts agree exactly.
    CHECK(back.x.to_string() == s.x.to_string());
    CHECK(back.y.to_string() == s.y.to_string());
    CHECK(back.z.to_string() == s.z.to_string());
    CHECK(verify_on_surface(back, entry.surface).on_surface);
  }
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"variables":["x"]})"), Tower::base()), Error);
  CHECK_THROWS_AS(tower_from_json(Json::parse(R"([{"name":"a","min_poly":[],"embedding":{"kind":"real"}}])")),
                  Error);
}

TEST_CASE("analyze reports and exit codes") {
  CommandResult parab = analyze_implicit("x^2+y^2-z", true);
  CHECK(parab.exit_code == 0);
  const Json& j = parab.report;
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["complex"]["status"] == "polynomial");
  CHECK(j["real"]["code"] == "REAL_PROPER");
  CHECK(j["real"]["witness"]["verification"]["on_surface"] == true);
  CHECK(j["real"]["witness"]["verification"]["jacobian_rank"] == 2);
  CHECK(j["real"]["witness"]["verification"]["fiber_count"] == 1);
  CHECK(j["quadric"]["class"] == "elliptic-paraboloid");
  CHECK(j["result"]["code"] == "OK");

  CommandResult cyl = analyze_implicit("x^2+y^2-1");
  CHECK(cyl.exit_code == 3);
  CHECK(cyl.report["result"]["code"] == "CYLINDER");

  CHECK(analyze_implicit("x*y-z").report["error"]["code"] == "NOT_SOR");
  CHECK(analyze_implicit("2x").exit_code == 2);
  CHECK(analyze_implicit("x^2+y^2+z^2-1").report["real"]["code"] == "NO_REAL_PARAMETRIZATION");
  CHECK(analyze_implicit("x^2+y^2-z^2+1").report["real"]["code"] == "REAL_NONPROPER_DOUBLE_COVER");
  CHECK(analyze_implicit("x^2+y^2+z^2+1").report["real"]["code"] == "EMPTY_REAL_LOCUS");

  AnalyzeRequest cubic;
  cubic.kind = AnalyzeRequest::Kind::kP2;
  cubic.texts = {"t^3+1", "t"};
  cubic.fiber = false;
  CommandResult c = analyze(cubic);
  CHECK(c.exit_code == 0);
  CHECK(c.report["decomposition"]["delta"] == 3);
  CHECK(c.report["real"]["code"] == "REAL_PROPER");
}

TEST_CASE("p2 commands") {
  CommandResult d = p2_decompose("t^3+1", "t");
  CHECK(d.exit_code == 0);
  CHECK(d.report["decomposition"]["p"]["text"] == "t^3 + 1");
  CommandResult e = p2_equiv({"t", "t^2", "2*t+1", "(2*t+1)^2"});
  CHECK(e.exit_code == 0);
  CHECK(e.report["reparametrization"]["text"] == "s -> 2*s + 1");
  CHECK(p2_equiv({"t", "t^2", "t", "t^3"}).exit_code == 3);
  CHECK(p2_polynomialize({"t^2", "t^2+1", "1", "t^2+1"}).exit_code != 4);
}

TEST_CASE("quadric command") {
  CommandResult q = quadric_command("x^2+y^2-1");
  CHECK(q.exit_code == 0);
  CHECK(q.report["quadric"]["class"] == "elliptic-cylinder");
  CHECK(q.report["quadric"]["table"]["entry"] == "no");
  CHECK(q.report["quadric"]["polynomial_over_r"] == "no");
  CHECK(quadric_command("x^3").exit_code == 2);
  CommandResult two = quadric_command("x^2+y^2-z^2+1");
  CHECK(two.report["quadric"]["polynomial_over_r"] == "yes-nonproper");
  CHECK(two.report["quadric"]["witness"]["verification"]["on_surface"] == true);
}

TEST_CASE("catalog command") {
  CommandResult r = verify_catalog_command(false, true);
  CHECK(r.exit_code == 0);
  CHECK(r.report["entries"].size() == formula_catalog().size());
  for (const auto& entry : r.report["entries"]) CHECK(entry["on_surface"] == true);
}

TEST_CASE("mesh sampling") {
  auto q = two_sheet_q();
  SurfaceParam two = SurfaceParam::make(q[0], q[1], q[2], {});
  MeshOptions options;
  options.grid = 8;
  options.u_min = 0;
  options.v_min = 0;
  Mesh m = sample_mesh(two, options);
  CHECK(m.vertices.size() == 64);
  CHECK(m.quads.size() == 49);
  // Independent check of one vertex: grid corner (u, v) = (0, 0).
  CHECK(m.vertices[0][0] == doctest::Approx(0));
  CHECK(m.vertices[0][1] == doctest::Approx(0));
  CHECK(m.vertices[0][2] == doctest::Approx(1));
  CHECK(max_residual(m, x * x + y * y - z * z + C(1)) <= 10 * options.tol);

  std::string obj = to_obj(m, "two sheets");
  CHECK(obj.find("# two sheets") != std::string::npos);
  CHECK(std::count(obj.begin(), obj.end(), '\n') >= 64 + 49);
  CHECK(obj.find("\nf 1 ") != std::string::npos);
  CHECK(to_obj(m, "two sheets") == obj);

  // The real cubic witness lives over sqrt(3) with a real embedding.
  Mesh cubic = sample_mesh(cubic_example(), options);
  CHECK(max_residual(cubic, x * x + y * y - z * z * z - C(1)) <= 1e-6);

  CHECK_THROWS_AS(sample_mesh(sphere_witness(), options), Error);
  try {
    sample_mesh(sphere_witness(), options);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoRealEmbedding);
  }
}
