// revolutio: polynomial parametrizations of surfaces of revolution.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "revolutio/expression.hpp"
#include "revolutio/mesh.hpp"
#include "revolutio/pipeline.hpp"

using namespace revolutio;

namespace {

int emit(const CommandResult& r, bool compact) {
  std::cout << r.report.dump(compact ? -1 : 2) << "\n";
  return r.exit_code;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// A bare parametrization, or the first witness of a report in `which` order.
SurfaceParam witness_from_report(const Json& j, const std::string& which) {
  if (j.contains("x") && j.contains("tower")) return surface_param_from_json(j);
  std::vector<std::string> order{"real", "quadric", "complex"};
  if (which != "auto") order = {which};
  for (const auto& key : order) {
    if (j.contains(key) && j[key].contains("witness")) {
      return surface_param_from_json(j[key]["witness"].at("parametrization"));
    }
  }
  throw Error(ErrorCode::kInvalidInput, "report has no " + (which == "auto" ? std::string() : which + " ") + "witness");
}

struct MeshArgs {
  std::vector<std::string> inline_param;
  std::string report;
  std::string witness = "auto";
  int grid = 16;
  std::vector<std::string> box{"-1", "1", "-1", "1"};
  std::string out;
  double tol = 1e-9;
  std::string check;
};

CommandResult run_mesh(const MeshArgs& args) {
  Json report{{"schema", kReportSchema}, {"command", "mesh"}};
  try {
    SurfaceParam s;
    if (!args.inline_param.empty()) {
      ParseOptions options;
      options.variables = {"u", "v"};
      s = SurfaceParam::make(parse_polynomial(args.inline_param[0], options),
                             parse_polynomial(args.inline_param[1], options),
                             parse_polynomial(args.inline_param[2], options), {"inline"});
    } else {
      s = witness_from_report(read_json_file(args.report), args.witness);
    }
    MeshOptions options;
    options.grid = args.grid;
    options.u_min = parse_rational(args.box[0]);
    options.u_max = parse_rational(args.box[1]);
    options.v_min = parse_rational(args.box[2]);
    options.v_max = parse_rational(args.box[3]);
    options.tol = args.tol;
    Mesh mesh = sample_mesh(s, options);
    std::ofstream out(args.out);
    if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + args.out + "'");
    out << to_obj(mesh, "x = " + s.x.to_string() + "; y = " + s.y.to_string() + "; z = " + s.z.to_string());
    if (!out) throw Error(ErrorCode::kInvalidInput, "write to '" + args.out + "' failed");
    report["out"] = args.out;
    report["vertices"] = mesh.vertices.size();
    report["quads"] = mesh.quads.size();
    if (!args.check.empty()) {
      ParseOptions xyz;
      xyz.variables = {"x", "y", "z"};
      double worst = max_residual(mesh, parse_polynomial(args.check, xyz));
      report["max_residual"] = worst;
      report["within_tolerance"] = worst <= 10 * args.tol;
    }
    report["result"] = {{"code", "OK"}, {"exit_code", 0}};
    return {report, 0};
  } catch (const Error& e) {
    report["error"] = error_json(e);
    report["result"] = {{"code", error_code_name(e.code())}, {"exit_code", exit_code(e.code())}};
    return {report, exit_code(e.code())};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial parametrizations of surfaces of revolution about the z-axis"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--compact", compact, "Print JSON on one line");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline on a surface of revolution");
  std::string implicit;
  std::vector<std::string> p2, p2_rational;
  bool no_fiber = false;
  auto* imp = analyze_cmd->add_option("--implicit", implicit, "F(x, y, z) = 0");
  auto* p2opt = analyze_cmd->add_option("--p2", p2, "P^2 as f(t) b(t)")->expected(2);
  auto* p2r = analyze_cmd->add_option("--p2-rational", p2_rational, "P^2 as f_num f_den b_num b_den")->expected(4);
  imp->excludes(p2opt)->excludes(p2r);
  p2opt->excludes(p2r);
  analyze_cmd->add_flag("--no-fiber", no_fiber, "Skip fiber counting");

  // quadric
  auto* quadric_cmd = app.add_subcommand("quadric", "Classify a quadric and look up its polynomiality");
  std::string quadric_text;
  quadric_cmd->add_option("--implicit,implicit", quadric_text, "Degree-2 F(x, y, z)")->required();

  // mesh
  auto* mesh_cmd = app.add_subcommand("mesh", "Sample a real parametrization to an OBJ file");
  MeshArgs mesh;
  auto* inl = mesh_cmd->add_option("--inline", mesh.inline_param, "x(u,v) y(u,v) z(u,v)")->expected(3);
  auto* rep = mesh_cmd->add_option("--report", mesh.report, "JSON report or parametrization file");
  inl->excludes(rep);
  mesh_cmd->add_option("--witness", mesh.witness, "Which witness of a report")
      ->check(CLI::IsMember({"auto", "real", "quadric", "complex"}));
  mesh_cmd->add_option("--grid", mesh.grid, "Vertices per side")->check(CLI::Range(2, 2000));
  mesh_cmd->add_option("--box", mesh.box, "u_min u_max v_min v_max")->expected(4);
  mesh_cmd->add_option("--out", mesh.out, "OBJ output path")->required();
  mesh_cmd->add_option("--tol", mesh.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  mesh_cmd->add_option("--check", mesh.check, "Report max |F| over the vertices");

  // verify-catalog
  auto* catalog_cmd = app.add_subcommand("verify-catalog", "Verify every closed-form witness");
  bool parallel = false, catalog_no_fiber = false;
  catalog_cmd->add_flag("--parallel", parallel, "Verify entries concurrently");
  catalog_cmd->add_flag("--no-fiber", catalog_no_fiber, "Skip fiber counting");

  // p2
  auto* p2_cmd = app.add_subcommand("p2", "Operations on parametrizations of P^2");
  p2_cmd->require_subcommand(1);
  auto* decompose_cmd = p2_cmd->add_subcommand("decompose", "Split [f, b] as [p a^2, b]");
  std::string first, second;
  decompose_cmd->add_option("--first", first, "f(t)")->required();
  decompose_cmd->add_option("--second", second, "b(t)")->required();
  auto* poly_cmd = p2_cmd->add_subcommand("polynomialize", "Rational with one pole to polynomial");
  std::string first_den = "1", second_den = "1";
  poly_cmd->add_option("--first", first, "numerator of the first coordinate")->required();
  poly_cmd->add_option("--first-den", first_den, "denominator of the first coordinate");
  poly_cmd->add_option("--second", second, "numerator of the second coordinate")->required();
  poly_cmd->add_option("--second-den", second_den, "denominator of the second coordinate");
  auto* equiv_cmd = p2_cmd->add_subcommand("equiv", "Affine reparametrization taking f to g");
  std::vector<std::string> f_pair, g_pair;
  equiv_cmd->add_option("--f", f_pair, "f as two components")->expected(2)->required();
  equiv_cmd->add_option("--g", g_pair, "g as two components")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze_cmd->parsed()) {
    AnalyzeRequest request;
    request.fiber = !no_fiber;
    if (!p2.empty()) {
      request.kind = AnalyzeRequest::Kind::kP2;
      request.texts = p2;
    } else if (!p2_rational.empty()) {
      request.kind = AnalyzeRequest::Kind::kP2Rational;
      request.texts = p2_rational;
    } else if (*imp) {
      request.texts = {implicit};
    } else {
      std::cerr << "analyze needs --implicit, --p2 or --p2-rational\n";
      return 2;
    }
    return emit(analyze(request), compact);
  }
  if (quadric_cmd->parsed()) return emit(quadric_command(quadric_text), compact);
  if (mesh_cmd->parsed()) {
    if (mesh.inline_param.empty() && mesh.report.empty()) {
      std::cerr << "mesh needs --inline or --report\n";
      return 2;
    }
    return emit(run_mesh(mesh), compact);
  }
  if (catalog_cmd->parsed()) return emit(verify_catalog_command(!catalog_no_fiber, parallel), compact);
  if (decompose_cmd->parsed()) return emit(p2_decompose(first, second), compact);
  if (poly_cmd->parsed()) return emit(p2_polynomialize({first, first_den, second, second_den}), compact);
  if (equiv_cmd->parsed()) return emit(p2_equiv({f_pair[0], f_pair[1], g_pair[0], g_pair[1]}), compact);
  return 2;
}
