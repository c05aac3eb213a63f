#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revolutio/algorithms.hpp"
#include "revolutio/expression.hpp"
#include "revolutio/mesh.hpp"
#include "revolutio/pipeline.hpp"
#include "revolutio/quadrics.hpp"

namespace py = pybind11;
using namespace revolutio;

namespace {

// (report as JSON text, exit status)
std::pair<std::string, int> reply(const CommandResult& r) { return {r.report.dump(), r.exit_code}; }

UniPoly univariate(const std::vector<std::string>& coeffs) {
  std::vector<Rational> q;
  for (const auto& c : coeffs) q.push_back(parse_rational(c));
  return UniPoly::from_rationals("t", q);
}

std::vector<std::string> coeff_strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(to_string(p.coeff(k).rational_value()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact parametrization of surfaces of revolution";

  // Messages start with the machine-readable code, e.g. "SYNTAX_ERROR: column 2: ...".
  static PyObject* error_type = py::exception<Error>(m, "RevolutioError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("REPORT_SCHEMA") = kReportSchema;

  m.def(
      "analyze_implicit",
      [](const std::string& F, bool fiber) {
        AnalyzeRequest r;
        r.texts = {F};
        r.fiber = fiber;
        return reply(analyze(r));
      },
      py::arg("F"), py::arg("fiber") = true);
  m.def(
      "analyze_p2",
      [](const std::string& first, const std::string& second, bool fiber) {
        AnalyzeRequest r;
        r.kind = AnalyzeRequest::Kind::kP2;
        r.texts = {first, second};
        r.fiber = fiber;
        return reply(analyze(r));
      },
      py::arg("first"), py::arg("second"), py::arg("fiber") = true);
  m.def("quadric", [](const std::string& F) { return reply(quadric_command(F)); }, py::arg("F"));
  m.def(
      "verify_catalog", [](bool fiber, bool parallel) { return reply(verify_catalog_command(fiber, parallel)); },
      py::arg("fiber") = true, py::arg("parallel") = false);

  m.def("classify_quadric", [](const std::string& F) { return quadric_class_label(classify_quadric(parse_polynomial(F))); });
  m.def("parse", [](const std::string& text) { return parse_polynomial(text).to_string(); });

  // Univariate helpers take and return coefficient strings, constant term first.
  m.def("squarefree_decompose", [](const std::vector<std::string>& coeffs) {
    SquarefreeDecomposition d = squarefree_decompose(univariate(coeffs));
    std::vector<std::pair<std::vector<std::string>, int>> factors;
    for (const auto& [f, mult] : d.factors) factors.emplace_back(coeff_strings(f), mult);
    return std::make_pair(to_string(d.content), factors);
  });
  m.def(
      "real_root_count",
      [](const std::vector<std::string>& coeffs, std::optional<std::string> lo, std::optional<std::string> hi) {
        RealInterval interval;
        if (lo) interval.lo = parse_rational(*lo);
        if (hi) interval.hi = parse_rational(*hi);
        return sturm_real_root_count(squarefree_part(univariate(coeffs)), interval);
      },
      py::arg("coeffs"), py::arg("lo") = std::nullopt, py::arg("hi") = std::nullopt);

  m.def(
      "sample_mesh",
      [](const std::string& x, const std::string& y, const std::string& z, int grid,
         std::array<std::string, 4> box) {
        ParseOptions uv;
        uv.variables = {"u", "v"};
        SurfaceParam s = SurfaceParam::make(parse_polynomial(x, uv), parse_polynomial(y, uv),
                                            parse_polynomial(z, uv), {"python"});
        MeshOptions options;
        options.grid = grid;
        options.u_min = parse_rational(box[0]);
        options.u_max = parse_rational(box[1]);
        options.v_min = parse_rational(box[2]);
        options.v_max = parse_rational(box[3]);
        Mesh mesh = sample_mesh(s, options);
        return std::make_pair(mesh.vertices, mesh.quads);
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("grid") = 16,
      py::arg("box") = std::array<std::string, 4>{"-1", "1", "-1", "1"});
}
