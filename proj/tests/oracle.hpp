// Independent reference arithmetic for the tests: dense polynomials over Q
// stored low to high, written without any library routine.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "revolutio/multipoly.hpp"
#include "revolutio/unipoly.hpp"

namespace oracle {

using revolutio::Rational;
using QPoly = std::vector<Rational>;

// Fixed seeds of the randomized suites; each suite uses one of them.
inline constexpr std::uint64_t kSeedRing = 20261016;
inline constexpr std::uint64_t kSeedYun = 1009;
inline constexpr std::uint64_t kSeedDecompose = 2027;
inline constexpr std::uint64_t kSeedFactorH = 3001;
inline constexpr std::uint64_t kSeedSubstitute = 4013;
inline constexpr std::uint64_t kSeedSturm = 5021;
inline constexpr std::uint64_t kSeedGcd = 6007;
inline constexpr std::uint64_t kSeedQuadric = 7001;
inline constexpr std::uint64_t kSeedAffine = 8009;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly add(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline QPoly scale(QPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

inline QPoly power(const QPoly& a, int e) {
  QPoly r{1};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

inline Rational eval(const QPoly& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a by b (b nonzero).
inline QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  return scale(p, 1 / Rational(p.back()));
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = b;
    b = r;
  }
  return monic(a);
}

inline QPoly from_roots(const std::vector<Rational>& roots) {
  QPoly p{1};
  for (const auto& r : roots) p = mul(p, QPoly{-r, 1});
  return p;
}

inline int sign_at_infinity(const QPoly& p, bool positive) {
  if (p.empty()) return 0;
  int s = revolutio::sign(p.back());
  return (positive || (p.size() - 1) % 2 == 0) ? s : -s;
}

// Sturm count of distinct roots in (lo, hi); missing ends are infinite.
inline int sturm_count(const QPoly& f, const Rational* lo, const Rational* hi) {
  if (lo && hi && !(*lo < *hi)) return 0;
  std::vector<QPoly> chain{f, derivative(f)};
  while (!chain.back().empty()) chain.push_back(scale(rem(chain[chain.size() - 2], chain.back()), -1));
  chain.pop_back();
  auto variations = [&](const Rational* x, bool plus) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
      int s = x ? revolutio::sign(eval(p, *x)) : sign_at_infinity(p, plus);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  int count = variations(lo, false) - variations(hi, true);
  if (hi && eval(f, *hi) == 0) --count;
  return count;
}

// Leibniz expansion of a small determinant with entries of any ring type.
template <typename T>
T leibniz_det(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = T(term * m[i][perm[i]]);
    total = inversions % 2 ? T(total - term) : T(total + term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline revolutio::UniPoly to_uni(const QPoly& p, const std::string& var = "t") {
  return revolutio::UniPoly::from_rationals(var, p);
}

inline QPoly from_uni(const revolutio::UniPoly& p) {
  QPoly out;
  if (p.is_zero()) return out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).rational_value());
  return out;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  Rational rational(long range = 5, long max_den = 3) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long range = 5, long max_den = 3) {
    Rational r = 0;
    while (r == 0) r = rational(range, max_den);
    return r;
  }
  QPoly poly(int degree, long range = 4) {
    QPoly p;
    for (int i = 0; i <= degree; ++i) p.push_back(Rational(integer(-range, range)));
    while (p.back() == 0) p.back() = Rational(integer(1, range));
    return p;
  }
  std::mt19937_64 engine;
};

// Random sparse polynomial in the given variables with small integer data.
inline revolutio::MultiPoly random_multi(Rng& rng, const std::vector<std::string>& vars, int terms, int max_exp) {
  revolutio::MultiPoly p;
  for (int k = 0; k < terms; ++k) {
    revolutio::MultiPoly m = revolutio::MultiPoly::constant(revolutio::FieldElement(Rational(rng.integer(-5, 5))));
    for (const auto& v : vars) m *= revolutio::MultiPoly::variable(v).pow(static_cast<unsigned>(rng.integer(0, max_exp)));
    p += m;
  }
  return p;
}

}  // namespace oracle
