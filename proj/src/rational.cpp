#include "revolutio/rational.hpp"

#include <string>

#include "revolutio/error.hpp"

namespace revolutio {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTowerMismatch: return "TOWER_MISMATCH";
    case ErrorCode::kZeroDivisor: return "ZERO_DIVISOR";
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kNotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::kNoRealEmbedding: return "NO_REAL_EMBEDDING";
    case ErrorCode::kNotSurfaceOfRevolution: return "NOT_SOR";
    case ErrorCode::kNotAGraph: return "NOT_A_GRAPH";
    case ErrorCode::kDegenerateProfile: return "DEGENERATE_PROFILE";
    case ErrorCode::kNotPolynomialCurve: return "NOT_POLYNOMIAL_CURVE";
    case ErrorCode::kNotEquivalent: return "NOT_EQUIVALENT";
    case ErrorCode::kNotPolynomial: return "CYLINDER";
    case ErrorCode::kEmptyRealLocus: return "EMPTY_REAL_LOCUS";
    case ErrorCode::kInconsistentRoot: return "INCONSISTENT_ROOT";
    case ErrorCode::kUnsupported: return "UNSUPPORTED";
    case ErrorCode::kIndeterminate: return "INDETERMINATE";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "INTERNAL";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kTowerMismatch:
      return 2;
    case ErrorCode::kNoRealEmbedding:
    case ErrorCode::kNotSurfaceOfRevolution:
    case ErrorCode::kNotAGraph:
    case ErrorCode::kDegenerateProfile:
    case ErrorCode::kNotPolynomialCurve:
    case ErrorCode::kNotEquivalent:
    case ErrorCode::kNotPolynomial:
    case ErrorCode::kEmptyRealLocus:
    case ErrorCode::kUnsupported:
    case ErrorCode::kIndeterminate:
      return 3;
    default:
      return 4;
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kInvalidInput, "empty rational literal");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") {
        throw Error(ErrorCode::kInvalidInput, "malformed decimal literal '" + s + "'");
      }
      if (digits[0] == '+') digits.erase(0, 1);
      Integer num(digits, 10);
      Integer den = 1;
      for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kInvalidInput, "malformed rational literal '" + s + "'");
  }
}

Integer square_part_root(const Integer& n) {
  Integer m = abs(n);
  Integer root = 1;
  if (m == 0) return 0;
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
      m /= p * p;
      root *= p;
    }
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;  // strip odd power
  }
  // The stripped factors were discarded above; recompute the cofactor test on
  // what remains of |n| / root^2.
  Integer rest = abs(n) / (root * root);
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    root *= r;
  }
  return root;
}

}  // namespace revolutio
