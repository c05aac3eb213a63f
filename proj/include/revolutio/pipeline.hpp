#pragma once

#include <string>
#include <vector>

#include "revolutio/serialize.hpp"

namespace revolutio {

struct AnalyzeRequest {
  enum class Kind { kImplicit, kP2, kP2Rational };
  Kind kind = Kind::kImplicit;
  // implicit: {F}; p2: {first, second}; p2-rational: {first num, first den,
  // second num, second den}. Univariate inputs use the variable t.
  std::vector<std::string> texts;
  bool fiber = true;
};

// A JSON report plus the process exit status it implies (0 ok, 2 input error,
// 3 mathematical refusal, 4 internal invariant violation).
struct CommandResult {
  Json report;
  int exit_code = 0;
};

Json error_json(const Error& e);
// {"on_surface", "residual", "jacobian_rank", "fiber_count", "fiber_sample"}.
// Throws Internal when the residual is not zero.
Json verification_json(const SurfaceParam& s, const MultiPoly& F, bool fiber);

CommandResult analyze(const AnalyzeRequest& request);
CommandResult quadric_command(const std::string& text);
CommandResult p2_decompose(const std::string& first, const std::string& second);
CommandResult p2_polynomialize(const std::vector<std::string>& texts);
// texts: {f first, f second, g first, g second}
CommandResult p2_equiv(const std::vector<std::string>& texts);
CommandResult verify_catalog_command(bool fiber, bool parallel);

}  // namespace revolutio
