#include "revolutio/algorithms.hpp"

#include <algorithm>
#include <set>

namespace revolutio {

namespace {

void require_rational(const UniPoly& f, const char* what) {
  if (!f.is_rational()) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " requires rational coefficients");
  }
}

int sign_at(const UniPoly& f, const Rational& x) { return sign(f.evaluate(x).rational_value()); }

int sign_at_infinity(const UniPoly& f, bool positive) {
  int s = sign(f.leading_coefficient().rational_value());
  if (!positive && f.degree() % 2 == 1) s = -s;
  return s;
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  std::vector<UniPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool upper) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(x ? sign_at(p, *x) : sign_at_infinity(p, upper));
  return variations(signs);
}

void check_squarefree(const UniPoly& f) {
  if (gcd(f, f.derivative()).degree() > 0) {
    throw Error(ErrorCode::kInvalidInput, "polynomial " + f.to_string() + " is not square-free");
  }
}

// Positive divisors of |n|. Trial division up to 10^6; a larger cofactor is
// treated as prime.
std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<std::pair<Integer, int>> primes;
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= m; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e > 0) primes.emplace_back(Integer(p), e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    std::size_t n0 = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Integer coefficients (low to high) of a rational polynomial, scaled by the
// lcm of the denominators.
std::vector<Integer> integer_coefficients(const UniPoly& f) {
  Integer lcm = 1;
  for (const auto& [e, c] : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::vector<Integer> out(static_cast<std::size_t>(f.degree()) + 1, 0);
  for (const auto& [e, c] : f.coeffs()) {
    Rational scaled = c.rational_value() * lcm;
    out[static_cast<std::size_t>(e)] = scaled.get_num();
  }
  return out;
}

std::vector<CoeffMap> to_coeff_maps(const UniPoly& p) {
  std::vector<CoeffMap> out;
  for (const auto& c : p.dense()) out.push_back(c.terms());
  return out;
}

}  // namespace

// ------------------------------------------------------------------ gcd

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidInput, "square-free part of zero");
  return f.divmod(gcd(f, f.derivative())).first.monic();
}

UniPoly SquarefreeDecomposition::expand(const std::string& var) const {
  UniPoly out = UniPoly::constant(var, FieldElement(content));
  for (const auto& [f, m] : factors) out = out * f.pow(static_cast<unsigned>(m));
  return out.renamed(var);
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidInput, "square-free decomposition of zero");
  require_rational(f, "square-free decomposition");
  SquarefreeDecomposition out;
  out.content = f.leading_coefficient().rational_value();
  if (f.degree() == 0) return out;

  UniPoly F = f.monic();
  UniPoly dF = F.derivative();
  UniPoly a0 = gcd(F, dF);
  UniPoly b = F.divmod(a0).first;
  UniPoly c = dF.divmod(a0).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.emplace_back(a.renamed(f.var()), i);
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidInput, "rational roots of zero");
  require_rational(f, "rational_roots");
  std::vector<Rational> roots;
  int low = f.coeffs().begin()->first;
  for (int i = 0; i < low; ++i) roots.emplace_back(0);
  UniPoly g(f.var());
  for (const auto& [e, c] : f.coeffs()) g += UniPoly::monomial(f.var(), c, e - low);
  if (g.degree() > 0) {
    auto ints = integer_coefficients(g);
    std::set<Rational> candidates;
    for (const auto& p : divisors(ints.front())) {
      for (const auto& q : divisors(ints.back())) {
        Rational r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    }
    for (const auto& r : candidates) {
      UniPoly linear = UniPoly::from_rationals(f.var(), {Rational(-r), Rational(1)});
      while (g.degree() > 0 && g.evaluate(r).is_zero()) {
        g = g.divmod(linear).first;
        roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<UniPoly> rational_quadratic_factors(const UniPoly& f, std::size_t budget) {
  require_rational(f, "rational_quadratic_factors");
  std::vector<UniPoly> out;
  if (f.degree() < 2) return out;
  auto ints = integer_coefficients(f);
  UniPoly g("t");
  for (std::size_t i = 0; i < ints.size(); ++i) g += UniPoly::monomial("t", FieldElement(Rational(ints[i])), static_cast<int>(i));
  if (f.degree() == 2) {
    UniPoly m = f.monic();
    Rational b = m.coeff(1).rational_value(), c = m.coeff(0).rational_value();
    if (b * b < 4 * c) out.push_back(m);
    return out;
  }
  Integer values[3];
  const Rational points[3] = {0, 1, -1};
  for (int k = 0; k < 3; ++k) {
    values[k] = g.evaluate(FieldElement(points[k])).rational_value().get_num();
    if (values[k] == 0) return out;  // a rational root; not the case we handle
  }
  auto d0 = divisors(values[0]), d1 = divisors(values[1]), dm = divisors(values[2]);
  if (d0.size() * d1.size() * dm.size() > budget) return out;
  std::set<std::vector<Rational>> seen;
  for (const auto& a0 : d0) {
    for (const auto& a1 : d1) {
      for (const auto& am : dm) {
        // A quadratic without real roots has constant sign; take it positive.
        Integer two_a = a1 + am - 2 * a0, two_b = a1 - am;
        if (two_a == 0 || two_a % 2 != 0 || two_b % 2 != 0) continue;
        Rational qa(Integer(two_a / 2)), qb(Integer(two_b / 2));
        std::vector<Rational> monic{Rational(a0) / qa, qb / qa, Rational(1)};
        if (!seen.insert(monic).second) continue;
        if (monic[1] * monic[1] >= 4 * monic[0]) continue;
        UniPoly q = UniPoly::from_rationals("t", monic);
        if (g.divmod(q).second.is_zero()) out.push_back(q.renamed(f.var()));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- Sturm

int sturm_real_root_count(const UniPoly& f, const RealInterval& interval) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidInput, "Sturm count of zero polynomial");
  require_rational(f, "Sturm counting");
  if (f.degree() == 0) return 0;
  check_squarefree(f);
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  auto chain = sturm_chain(f);
  int count = variations_at(chain, interval.lo, false) - variations_at(chain, interval.hi, true);
  if (interval.hi && sign_at(f, *interval.hi) == 0) --count;
  return count;
}

Rational root_bound(const UniPoly& f) {
  if (f.degree() <= 0) return 1;
  Rational lead = abs(f.leading_coefficient().rational_value());
  Rational best = 0;
  for (const auto& [e, c] : f.coeffs()) {
    if (e == f.degree()) continue;
    Rational r = abs(c.rational_value()) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UniPoly& f) {
  require_rational(f, "real root isolation");
  UniPoly g = squarefree_part(f);
  std::vector<std::pair<Rational, Rational>> out;
  if (g.degree() <= 0) return out;
  Rational bound = root_bound(g);
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = sturm_real_root_count(g, {lo, hi});
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    if (sign_at(g, mid) == 0) out.emplace_back(mid, mid);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------- substitution / division

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& bindings) {
  const auto& vars = f.vars();
  std::vector<const MultiPoly*> images(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it != bindings.end()) {
      images[i] = &it->second;
    } else if (f.uses(vars[i])) {
      throw Error(ErrorCode::kInvalidInput, "unbound variable '" + vars[i] + "' in substitution");
    }
  }
  std::vector<std::vector<MultiPoly>> powers(vars.size());
  auto power = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(FieldElement(1)));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *images[i]);
    return pw[static_cast<std::size_t>(e)];
  };
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term = term * power(i, m[i]);
    }
    out += term;
  }
  return out;
}

MultiPoly substitute(const UniPoly& f, const MultiPoly& image) {
  MultiPoly acc;
  if (f.is_zero()) return acc;
  int prev = f.degree();
  const auto& coeffs = f.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    for (int i = it->first; i < prev; ++i) acc = acc * image;
    acc += MultiPoly::constant(it->second);
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc = acc * image;
  return acc;
}

NotDivisibleError::NotDivisibleError(MultiPoly remainder)
    : Error(ErrorCode::kNotDivisible, "not divisible; remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::kInvalidInput, "exact division by zero polynomial");
  std::vector<std::string> vars = (f + g).vars();
  MultiPoly r = f.with_vars(vars);
  const MultiPoly d = g.with_vars(vars);
  auto [gm, gc] = d.leading_term();
  const FieldElement lead_inv = gc.inverse();
  std::map<Monomial, FieldElement> quotient, remainder;
  while (!r.is_zero()) {
    auto [m, c] = r.leading_term();
    bool divides = true;
    Monomial shift(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      shift[i] = m[i] - gm[i];
      if (shift[i] < 0) divides = false;
    }
    if (divides) {
      FieldElement k = c * lead_inv;
      MultiPoly t(vars, {{shift, k}});
      quotient[shift] += k;
      r = r - t * d;
    } else {
      remainder[m] += c;
      r = r - MultiPoly(vars, {{m, c}});
    }
  }
  MultiPoly rem(vars, remainder);
  if (!rem.is_zero()) throw NotDivisibleError(rem);
  return MultiPoly(vars, quotient);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m <= 0 && n <= 0) {
    throw Error(ErrorCode::kInvalidInput, "resultant: variable '" + var + "' absent from both polynomials");
  }
  if (f.is_zero() || g.is_zero()) return MultiPoly();
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));

  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> a(size, std::vector<MultiPoly>(size));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (int j = 0; j <= m; ++j) a[i][i + static_cast<std::size_t>(j)] = fc[static_cast<std::size_t>(m - j)];
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    for (int j = 0; j <= n; ++j) {
      a[static_cast<std::size_t>(n) + i][i + static_cast<std::size_t>(j)] = gc[static_cast<std::size_t>(n - j)];
    }
  }

  // Fraction-free Gaussian elimination (Bareiss).
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(FieldElement(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && a[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return MultiPoly();
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  MultiPoly det = a[size - 1][size - 1];
  return negate ? -det : det;
}

// ------------------------------------------------------------ towers

TowerPtr extend_tower(const TowerPtr& tower, const std::string& name, const UniPoly& min_poly,
                      const Embedding& embedding) {
  if (min_poly.degree() < 2) {
    throw Error(ErrorCode::kInvalidInput, "minimal polynomial must have degree >= 2");
  }
  join_towers(tower, min_poly.tower());
  UniPoly monic = min_poly.monic();
  if (gcd(monic, monic.derivative()).degree() > 0) {
    throw Error(ErrorCode::kInvalidInput, "minimal polynomial " + monic.to_string() + " is not square-free");
  }
  TowerStep step{tower->unique_name(name), to_coeff_maps(monic), embedding};
  return tower->with_step(std::move(step));
}

std::pair<TowerPtr, FieldElement> real_sqrt(const TowerPtr& tower, const Rational& c) {
  if (c <= 0) throw Error(ErrorCode::kInvalidInput, "real_sqrt of non-positive " + to_string(c));
  Integer n = c.get_num() * c.get_den();
  Integer r = square_part_root(n);
  Integer m = n / (r * r);
  Rational scale(r, c.get_den());
  scale.canonicalize();
  if (m == 1) return {tower, FieldElement(scale)};

  UniPoly mp = UniPoly::from_rationals("t", {Rational(-m), Rational(0), Rational(1)});
  auto maps = to_coeff_maps(mp);
  for (std::size_t k = 0; k < tower->height(); ++k) {
    const auto& s = tower->step(k);
    if (s.min_poly == maps && s.embedding.is_real() && s.embedding.lo >= 0) {
      return {tower, FieldElement::generator(tower, k) * FieldElement(scale)};
    }
  }
  TowerPtr out = extend_tower(tower, "sqrt" + m.get_str(), mp, Embedding::real(0, Rational(m + 1)));
  return {out, FieldElement::generator(out, out->height() - 1) * FieldElement(scale)};
}

std::pair<TowerPtr, FieldElement> imaginary_unit(const TowerPtr& tower) {
  UniPoly mp = UniPoly::from_rationals("t", {Rational(1), Rational(0), Rational(1)});
  auto maps = to_coeff_maps(mp);
  for (std::size_t k = 0; k < tower->height(); ++k) {
    const auto& s = tower->step(k);
    if (s.min_poly == maps && s.embedding.kind == Embedding::Kind::kImaginary) {
      return {tower, FieldElement::generator(tower, k)};
    }
  }
  TowerPtr out = extend_tower(tower, "i", mp, Embedding::imaginary(0, 2));
  return {out, FieldElement::generator(out, out->height() - 1)};
}

RootChoice choose_root(const TowerPtr& tower, const UniPoly& f, const std::string& name) {
  if (f.degree() < 1) throw Error(ErrorCode::kInvalidInput, "cannot choose a root of a constant");
  auto roots = rational_roots(f);
  if (!roots.empty()) {
    Rational best = roots.front();
    for (const auto& r : roots) {
      if (abs(r) < abs(best) || (abs(r) == abs(best) && r > best)) best = r;
    }
    return {tower, FieldElement(best), true, UniPoly(f.var())};
  }
  auto sqf = squarefree_decompose(f);
  const UniPoly* chosen = nullptr;
  std::vector<std::pair<Rational, Rational>> intervals;
  for (const auto& [factor, mult] : sqf.factors) {
    auto iso = isolate_real_roots(factor);
    if (!iso.empty() && (chosen == nullptr || intervals.empty() || factor.degree() < chosen->degree())) {
      chosen = &factor;
      intervals = std::move(iso);
    }
  }
  Embedding embedding = Embedding::complex();
  if (chosen != nullptr) {
    auto nearest = *std::min_element(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) {
      return abs(a.first + a.second) < abs(b.first + b.second);
    });
    embedding = Embedding::real(nearest.first, nearest.second);
  } else {
    for (const auto& [factor, mult] : sqf.factors) {
      if (chosen == nullptr || factor.degree() < chosen->degree()) chosen = &factor;
    }
  }
  TowerPtr out = extend_tower(tower, name, *chosen, embedding);
  return {out, FieldElement::generator(out, out->height() - 1), false, chosen->monic()};
}

}  // namespace revolutio
