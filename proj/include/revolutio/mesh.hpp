#pragma once

#include <array>
#include <string>
#include <vector>

#include "revolutio/complex_param.hpp"

namespace revolutio {

struct MeshOptions {
  int grid = 16;  // vertices per side, >= 2
  Rational u_min = -1;
  Rational u_max = 1;
  Rational v_min = -1;
  Rational v_max = 1;
  double tol = 1e-9;
};

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 4>> quads;  // 0-based vertex indices
};

// Samples s on the grid (row-major in u). Every generator of the tower must
// have a real embedding; otherwise NoRealEmbedding.
Mesh sample_mesh(const SurfaceParam& s, const MeshOptions& options);

// Wavefront OBJ text (1-based faces), deterministic for a fixed mesh.
std::string to_obj(const Mesh& mesh, const std::string& comment = "");

// max |F(vertex)| in double precision; F must have rational coefficients.
double max_residual(const Mesh& mesh, const MultiPoly& F);

}  // namespace revolutio
