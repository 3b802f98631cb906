#include "algdyn/multipoly.hpp"

#include "modular_gcd.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace algdyn {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint32_t e = std::uint32_t{a.exps[i]} + b.exps[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = static_cast<std::uint16_t>(b.exps[i] - a.exps[i]);
  m.degree = b.degree - a.degree;
  return m;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); }

std::size_t common_nvars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() == b.nvars() || b.nvars() == 0) return a.nvars();
  if (a.nvars() == 0) return b.nvars();
  throw DomainError("polynomials live in rings with different variable counts");
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t MultiPoly::check_nvars(std::size_t n) {
  if (n > kMaxVariables) throw DomainError("too many polynomial variables (max 16)");
  return n;
}

MultiPoly::MultiPoly(std::size_t nvars, const Rational& c) : nvars_(check_nvars(nvars)) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Monomial m;
  m.exps[index] = 1;
  m.degree = 1;
  return monomial(nvars, m, Rational(1));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MultiPoly p(nvars);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree == 0) return terms_.back().coeff;
  return Rational(0);
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exps[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

MultiPoly MultiPoly::with_nvars(std::size_t nvars) const {
  for (std::size_t v = nvars; v < nvars_; ++v)
    if (involves(v)) throw DomainError("cannot drop a variable that occurs");
  MultiPoly p = *this;
  p.nvars_ = check_nvars(nvars);
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = common_nvars(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = common_nvars(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = common_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(n);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    // Multiplying by one term preserves the order.
    MultiPoly out(n);
    out.terms_.reserve(large.size());
    for (const auto& t : large.terms_)
      out.terms_.push_back({t.mono * small.terms_[0].mono, t.coeff * small.terms_[0].coeff});
    return out;
  }
  // Each row is already sorted; merge them pairwise.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& s : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& t : large.terms_) row.push_back({t.mono * s.mono, t.coeff * s.coeff});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge(rows[i], rows[i + 1], false));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  MultiPoly out(n);
  out.terms_ = std::move(rows.front());
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly result(p.nvars(), Rational(1));
  if (n == 0) return result;
  MultiPoly base = p;
  while (true) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n == 0) break;
    base *= base;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.mono.exps[var];
    if (e == 0) continue;
    Term d{t.mono, t.coeff * static_cast<long>(e)};
    --d.mono.exps[var];
    --d.mono.degree;
    out.push_back(std::move(d));
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
  if (point.size() < p.nvars()) throw DomainError("evaluation point has too few coordinates");
  Rational acc(0);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono.exps[i] != 0) v *= power(point[i], t.mono.exps[i]);
    acc += v;
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values) {
  if (values.size() < p.nvars()) throw DomainError("substitution needs one value per variable");
  std::size_t target = 0;
  for (const auto& v : values) target = std::max(target, v.nvars());
  // Cached powers per variable.
  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    MultiPoly prod(target, t.coeff);
    for (std::size_t i = 0; i < p.nvars() && !prod.is_zero(); ++i)
      if (t.mono.exps[i] != 0) prod = prod * power_of(i, t.mono.exps[i]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return MultiPoly::from_terms(target, std::move(acc));
}

MultiPoly homogenize(const MultiPoly& p, int degree) {
  if (p.total_degree() > degree) throw DomainError("homogenizing degree below polynomial degree");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    if (p.nvars() + 1 > kMaxVariables) throw DomainError("too many polynomial variables (max 16)");
    for (std::size_t i = 0; i < p.nvars(); ++i) m.exps[i + 1] = t.mono.exps[i];
    m.exps[0] = static_cast<std::uint16_t>(degree - static_cast<int>(t.mono.degree));
    m.degree = static_cast<std::uint32_t>(degree);
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(p.nvars() + 1, std::move(out));
}

MultiPoly dehomogenize(const MultiPoly& p, std::size_t var) {
  if (p.nvars() == 0) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (i == var) continue;
      m.exps[k++] = t.mono.exps[i];
      m.degree += t.mono.exps[i];
    }
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(p.nvars() - 1, std::move(out));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  const int deg = p.degree_in(var);
  if (deg < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg + 1));
  for (const auto& t : p.terms()) {
    Term c = t;
    const auto e = c.mono.exps[var];
    c.mono.exps[var] = 0;
    c.mono.degree -= e;
    buckets[e].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.nvars(), std::move(b)));
  return out;
}

MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, std::size_t var, std::size_t nvars) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms()) {
      Term c = t;
      c.mono.exps[var] = static_cast<std::uint16_t>(c.mono.exps[var] + e);
      c.mono.degree += static_cast<std::uint32_t>(e);
      out.push_back(std::move(c));
    }
  }
  return MultiPoly::from_terms(nvars, std::move(out));
}

Monomial monomial_content(const MultiPoly& p) {
  Monomial m;
  if (p.is_zero()) return m;
  m = p.terms().front().mono;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exps[i] = std::min(m.exps[i], t.mono.exps[i]);
  m.degree = 0;
  for (auto e : m.exps) m.degree += e;
  return m;
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  const std::size_t n = common_nvars(p, q);
  if (p.is_zero()) return MultiPoly(n);
  const Term& lead = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    const Rational inv = 1 / lead.coeff;
    for (const auto& t : p.terms()) {
      if (!divides(lead.mono, t.mono)) throw DomainError("polynomial division is not exact");
      out.push_back({quotient(t.mono, lead.mono), t.coeff * inv});
    }
    MultiPoly r = MultiPoly::from_terms(n, std::move(out));
    return r;
  }
  // Remainder held in a map keyed by decreasing grlex so leading terms pop
  // in order.
  auto greater = [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); };
  std::map<Monomial, Rational, decltype(greater)> rem(greater);
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quot;
  const Rational inv = 1 / lead.coeff;
  while (!rem.empty()) {
    const auto it = rem.begin();
    if (!divides(lead.mono, it->first) || it->first.degree < lead.mono.degree) {
      throw DomainError("polynomial division is not exact");
    }
    const Monomial qm = quotient(it->first, lead.mono);
    const Rational qc = it->second * inv;
    for (const auto& t : q.terms()) {
      const Monomial m = t.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m, Rational(0));
      pos->second -= t.coeff * qc;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({qm, qc});
  }
  return MultiPoly::from_terms(n, std::move(quot));
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

// ---------------------------------------------------------------------------
// gcd

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t integer_mod(const Integer& z) {
  Integer r = z % Integer(kPrime);
  if (r < 0) r += kPrime;
  return r.convert_to<std::uint64_t>();
}

/// Coefficients reduced mod the prime; nullopt when a denominator vanishes.
std::optional<std::vector<std::uint64_t>> reduce_coefficients(const MultiPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::uint64_t den = integer_mod(denominator(t.coeff));
    if (den == 0) return std::nullopt;
    out.push_back(mul_mod(integer_mod(numerator(t.coeff)), inv_mod(den)));
  }
  return out;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly univariate_image(const MultiPoly& p, const std::vector<std::uint64_t>& coeffs, std::size_t var,
                         const std::vector<std::uint64_t>& point) {
  ModPoly out(static_cast<std::size_t>(p.degree_in(var) + 1), 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& m = p.terms()[k].mono;
    std::uint64_t v = coeffs[k];
    for (std::size_t i = 0; i < p.nvars() && v != 0; ++i)
      if (i != var && m.exps[i] != 0) v = mul_mod(v, pow_mod(point[i], m.exps[i]));
    out[m.exps[var]] = add_mod(out[m.exps[var]], v);
  }
  return out;
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(f, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

using UniVec = std::vector<MultiPoly>;

int deg(const UniVec& a) { return static_cast<int>(a.size()) - 1; }

void trim(UniVec& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UniVec pseudo_remainder(const UniVec& a, const UniVec& b) {
  UniVec r = a;
  const int db = deg(b);
  const MultiPoly& lb = b.back();
  int e = deg(a) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const MultiPoly lr = r.back();
    const int k = deg(r) - db;
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[k + j] -= lr * b[j];
    trim(r);
    --e;
  }
  if (e > 0) {
    const MultiPoly scale = pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c *= scale;
  }
  return r;
}

MultiPoly list_gcd(std::vector<MultiPoly> polys);

UniVec primitive(const UniVec& a, MultiPoly* content_out = nullptr) {
  const MultiPoly c = list_gcd(a);
  if (content_out) *content_out = c;
  UniVec out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(exact_divide(x, c));
  return out;
}

/// Subresultant PRS on primitive inputs; returns the primitive gcd.
UniVec subresultant_gcd(UniVec a, UniVec b, std::size_t nvars) {
  if (deg(a) < deg(b)) std::swap(a, b);
  if (deg(b) == 0) return {MultiPoly(nvars, Rational(1))};
  MultiPoly g(nvars, Rational(1));
  MultiPoly h(nvars, Rational(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    UniVec r = pseudo_remainder(a, b);
    if (r.empty()) return primitive(b);
    if (deg(r) == 0) return {MultiPoly(nvars, Rational(1))};
    a = std::move(b);
    const MultiPoly divisor = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = exact_divide(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) continue;
    h = exact_divide(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
}

MultiPoly gcd_core(const MultiPoly& p, const MultiPoly& q);

bool divides_exactly(const MultiPoly& d, const MultiPoly& p) {
  try {
    exact_divide(p, d);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

MultiPoly list_gcd(std::vector<MultiPoly> polys) {
  std::erase_if(polys, [](const MultiPoly& x) { return x.is_zero(); });
  if (polys.empty()) return MultiPoly(0);
  std::sort(polys.begin(), polys.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.total_degree() < b.total_degree();
  });
  if (polys.size() > 2) {
    // gcd(p0, sum c_i p_i) equals the gcd of the list for generic c_i;
    // accept it once it divides every member.
    std::mt19937_64 rng(0x11c0ffeeULL);
    std::uniform_int_distribution<int> pick(1, 97);
    for (int attempt = 0; attempt < 2; ++attempt) {
      MultiPoly combo = polys[1];
      for (std::size_t i = 2; i < polys.size(); ++i) combo += polys[i] * Rational(pick(rng));
      if (combo.is_zero()) continue;
      const MultiPoly g = gcd_multi(polys.front(), combo);
      if (g.is_constant()) return MultiPoly(g.nvars(), Rational(1));
      bool divides = true;
      for (std::size_t i = 1; i < polys.size() && divides; ++i) divides = divides_exactly(g, polys[i]);
      if (divides) return g;
    }
  }
  MultiPoly g = normalize(polys.front());
  for (std::size_t i = 1; i < polys.size() && !g.is_constant(); ++i) g = gcd_multi(g, polys[i]);
  return g.is_constant() ? MultiPoly(g.nvars(), Rational(1)) : g;
}

struct ImageProbe {
  std::mt19937_64 rng{0x5eed5eedULL};
};

/// True when a modular image proves the gcd does not involve `var`.
bool provably_free_of(const MultiPoly& p, const std::vector<std::uint64_t>& pc, const MultiPoly& q,
                      const std::vector<std::uint64_t>& qc, std::size_t var, ImageProbe& probe) {
  const std::size_t n = std::max(p.nvars(), q.nvars());
  const int dp = p.degree_in(var);
  const int dq = q.degree_in(var);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::uint64_t> point(n);
    for (auto& v : point) v = probe.rng() % kPrime;
    ModPoly a = univariate_image(p, pc, var, point);
    ModPoly b = univariate_image(q, qc, var, point);
    if (static_cast<int>(a.size()) - 1 != dp || a.back() == 0) continue;
    if (static_cast<int>(b.size()) - 1 != dq || b.back() == 0) continue;
    return mod_gcd_degree(std::move(a), std::move(b)) == 0;
  }
  return false;
}

/// p with `var` set to 1, keeping the ring.
MultiPoly set_to_one(const MultiPoly& p, std::size_t var) {
  std::vector<Term> out = p.terms();
  for (auto& t : out) {
    t.mono.degree -= t.mono.exps[var];
    t.mono.exps[var] = 0;
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

MultiPoly rehomogenize(const MultiPoly& p, std::size_t var) {
  const auto degree = static_cast<std::uint32_t>(p.total_degree());
  std::vector<Term> out = p.terms();
  for (auto& t : out) {
    t.mono.exps[var] = static_cast<std::uint16_t>(t.mono.exps[var] + degree - t.mono.degree);
    t.mono.degree = degree;
  }
  return MultiPoly::from_terms(p.nvars(), std::move(out));
}

/// Both inputs nonzero and free of monomial factors.
MultiPoly gcd_core(const MultiPoly& p, const MultiPoly& q) {
  const std::size_t n = std::max(p.nvars(), q.nvars());
  const MultiPoly one(n, Rational(1));
  if (p.is_constant() || q.is_constant()) return one;
  if (p * q.leading_coefficient() == q * p.leading_coefficient()) return normalize(p);

  const auto pc = reduce_coefficients(p);
  const auto qc = reduce_coefficients(q);
  ImageProbe probe;
  std::vector<std::size_t> dependent;
  std::vector<std::size_t> independent;
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_p = p.involves(v);
    const bool in_q = q.involves(v);
    if (!in_p && !in_q) continue;
    if (!in_p || !in_q || (pc && qc && provably_free_of(p, *pc, q, *qc, v, probe))) {
      independent.push_back(v);
    } else {
      dependent.push_back(v);
    }
  }
  if (dependent.empty()) return one;

  // Homogeneous and not divisible by any variable: the gcd is the
  // homogenization of the gcd of the affine charts.
  if (dependent.size() >= 2 && p.is_homogeneous() && q.is_homogeneous()) {
    std::size_t v = dependent.front();
    for (auto w : dependent)
      if (p.degree_in(w) + q.degree_in(w) > p.degree_in(v) + q.degree_in(v)) v = w;
    return normalize(rehomogenize(gcd_multi(set_to_one(p, v), set_to_one(q, v)), v));
  }

  if (!independent.empty()) {
    // The gcd lies in Q[dependent], hence divides every coefficient of p and
    // q taken with respect to the independent variables.
    auto split = [&](const MultiPoly& f, std::vector<MultiPoly>& out) {
      std::map<std::vector<std::uint16_t>, std::vector<Term>> groups;
      for (const auto& t : f.terms()) {
        std::vector<std::uint16_t> key;
        key.reserve(independent.size());
        Term c = t;
        for (auto v : independent) {
          key.push_back(t.mono.exps[v]);
          c.mono.degree -= c.mono.exps[v];
          c.mono.exps[v] = 0;
        }
        groups[key].push_back(std::move(c));
      }
      for (auto& [key, terms] : groups) out.push_back(MultiPoly::from_terms(n, std::move(terms)));
    };
    std::vector<MultiPoly> parts;
    split(p, parts);
    split(q, parts);
    return list_gcd(std::move(parts));
  }

  if (auto g = detail::modular_gcd(p, q, dependent)) return normalize(*g);

  // Main variable: the dependent one of least combined degree.
  std::size_t main = dependent.front();
  for (auto v : dependent)
    if (p.degree_in(v) + q.degree_in(v) < p.degree_in(main) + q.degree_in(main)) main = v;
  MultiPoly cont_p(n);
  MultiPoly cont_q(n);
  const UniVec a = primitive(coefficients_in(p, main), &cont_p);
  const UniVec b = primitive(coefficients_in(q, main), &cont_q);
  const MultiPoly content = gcd_multi(cont_p, cont_q);
  const UniVec g = subresultant_gcd(a, b, n);
  return normalize(content * from_coefficients(g, main, n));
}

}  // namespace

MultiPoly gcd_multi(const MultiPoly& p, const MultiPoly& q) {
  const std::size_t n = common_nvars(p, q);
  if (p.is_zero()) return normalize(q.with_nvars(std::max(n, q.nvars())));
  if (q.is_zero()) return normalize(p.with_nvars(std::max(n, p.nvars())));
  const Monomial mp_ = monomial_content(p);
  const Monomial mq = monomial_content(q);
  Monomial common;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    common.exps[i] = std::min(mp_.exps[i], mq.exps[i]);
    common.degree += common.exps[i];
  }
  const MultiPoly pr = mp_.degree ? exact_divide(p, MultiPoly::monomial(n, mp_, Rational(1))) : p;
  const MultiPoly qr = mq.degree ? exact_divide(q, MultiPoly::monomial(n, mq, Rational(1))) : q;
  MultiPoly g = gcd_core(pr, qr).with_nvars(n);
  if (common.degree) g = g * MultiPoly::monomial(n, common, Rational(1));
  return normalize(g);
}

MultiPoly gcd_multi(const std::vector<MultiPoly>& polys) { return list_gcd(polys); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::vector<std::string> projective_variable_names(std::size_t nvars) {
  std::vector<std::string> names{"W"};
  for (std::size_t i = 1; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const auto e = t.mono.exps[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_string(const MultiPoly& p) { return to_string(p, default_variable_names(p.nvars())); }

}  // namespace algdyn
