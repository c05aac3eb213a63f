#include "revolutio/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "revolutio/numeric.hpp"

namespace revolutio {

Mesh sample_mesh(const SurfaceParam& s, const MeshOptions& options) {
  if (options.grid < 2) throw Error(ErrorCode::kInvalidInput, "grid needs at least 2 vertices per side");
  if (options.u_min >= options.u_max || options.v_min >= options.v_max) {
    throw Error(ErrorCode::kInvalidInput, "empty parameter box");
  }
  if (!(options.tol > 0)) throw Error(ErrorCode::kInvalidInput, "tolerance must be positive");
  for (const auto& step : s.tower->steps()) {
    if (!step.embedding.is_real()) {
      throw Error(ErrorCode::kNoRealEmbedding, "generator '" + step.name + "' has no real embedding");
    }
  }
  const int n = options.grid;
  Mesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const auto comps = s.components();
  for (int i = 0; i < n; ++i) {
    Rational u = options.u_min + (options.u_max - options.u_min) * Rational(i, n - 1);
    for (int j = 0; j < n; ++j) {
      Rational v = options.v_min + (options.v_max - options.v_min) * Rational(j, n - 1);
      const std::map<std::string, Rational> point{{"u", u}, {"v", v}};
      std::array<double, 3> xyz{};
      for (std::size_t k = 0; k < 3; ++k) xyz[k] = numeric_eval_real(comps[k], point, options.tol);
      mesh.vertices.push_back(xyz);
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      int a = i * n + j;
      mesh.quads.push_back({a, a + n, a + n + 1, a + 1});
    }
  }
  return mesh;
}

std::string to_obj(const Mesh& mesh, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  char buf[96];
  for (const auto& p : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", p[0], p[1], p[2]);
    out << buf;
  }
  for (const auto& q : mesh.quads) {
    out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << "\n";
  }
  return out.str();
}

double max_residual(const Mesh& mesh, const MultiPoly& F) {
  const MultiPoly G = F.with_vars({"x", "y", "z"});
  std::vector<std::pair<Monomial, double>> terms;
  for (const auto& [m, c] : G.terms()) terms.emplace_back(m, c.rational_value().get_d());
  double worst = 0;
  for (const auto& p : mesh.vertices) {
    double value = 0;
    for (const auto& [m, c] : terms) {
      value += c * std::pow(p[0], m[0]) * std::pow(p[1], m[1]) * std::pow(p[2], m[2]);
    }
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

}  // namespace revolutio
