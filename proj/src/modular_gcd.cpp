#include "modular_gcd.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <mutex>
#include <random>

namespace algdyn::detail {

namespace {

using u64 = std::uint64_t;

struct Field {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e > 0) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& z) const {
    Integer r = z % Integer(p);
    if (r < 0) r += p;
    return r.convert_to<u64>();
  }
  /// nullopt when the denominator vanishes mod p.
  std::optional<u64> reduce(const Rational& q) const {
    const u64 den = reduce(denominator(q));
    if (den == 0) return std::nullopt;
    return mul(reduce(numerator(q)), inv(den));
  }
};

/// Primes just below 2^61, found once.
u64 nth_prime(std::size_t i) {
  static std::mutex lock;
  static std::vector<u64> primes;
  std::scoped_lock guard(lock);
  std::mt19937_64 witness_rng(12345);
  u64 candidate = primes.empty() ? (u64{1} << 61) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    if (boost::multiprecision::miller_rabin_test(Integer(candidate), 25, witness_rng)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Monic gcd; empty when both inputs are zero.
ModPoly gcd_monic(ModPoly a, ModPoly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      const u64 c = f.mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

/// Values at nodes -> monomial coefficients, in place.
void interpolate(std::vector<u64>& values, const std::vector<u64>& nodes, const Field& f) {
  const std::size_t n = nodes.size();
  std::vector<u64> c = values;  // divided differences
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      c[i] = f.mul(f.sub(c[i], c[i - 1]), f.inv(f.sub(nodes[i], nodes[i - j])));
  std::vector<u64> poly{c[n - 1]};
  for (std::size_t s = n - 1; s-- > 0;) {
    // poly <- poly * (y - nodes[s]) + c[s]
    std::vector<u64> next(poly.size() + 1, 0);
    const u64 neg = f.sub(0, nodes[s]);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.add(next[i], f.mul(poly[i], neg));
    }
    next[0] = f.add(next[0], c[s]);
    poly = std::move(next);
  }
  values = std::move(poly);
}

/// a/b with |a|, |b| <= sqrt(m/2) and a = b*u mod m.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1;
  const Integer bound = sqrt(m / 2);
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  return Rational(r1, t1);
}

struct PackedTerm {
  Rational coeff;
  unsigned main_exp;
  std::vector<unsigned> other_exps;
};

std::vector<PackedTerm> pack(const MultiPoly& a, std::size_t main, const std::vector<std::size_t>& others) {
  std::vector<PackedTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    PackedTerm pt{t.coeff, t.mono.exps[main], {}};
    for (auto v : others) pt.other_exps.push_back(t.mono.exps[v]);
    out.push_back(std::move(pt));
  }
  return out;
}

bool divides(const MultiPoly& d, const MultiPoly& p) {
  try {
    exact_divide(p, d);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

std::optional<MultiPoly> modular_gcd(const MultiPoly& p, const MultiPoly& q, const std::vector<std::size_t>& vars) {
  if (vars.empty()) return std::nullopt;
  const std::size_t n = std::max(p.nvars(), q.nvars());
  const std::size_t main = vars.front();
  const std::vector<std::size_t> others(vars.begin() + 1, vars.end());
  const std::size_t k = others.size();
  std::mt19937_64 rng(0x9cd5a1ULL + vars.size());

  // Shear y -> y + c x so the leading coefficient in x is a constant.
  std::vector<Rational> shift(n, Rational(0));
  MultiPoly a = p.with_nvars(n), b = q.with_nvars(n);
  if (k > 0) {
    bool ok = false;
    for (int attempt = 0; attempt < 6 && !ok; ++attempt) {
      std::vector<MultiPoly> values;
      for (std::size_t v = 0; v < n; ++v) values.push_back(MultiPoly::variable(n, v));
      for (auto y : others) {
        shift[y] = Rational(static_cast<long>(1 + rng() % 29));
        values[y] += MultiPoly::variable(n, main) * shift[y];
      }
      a = substitute(p.with_nvars(n), values);
      b = substitute(q.with_nvars(n), values);
      ok = a.degree_in(main) == a.total_degree() && b.degree_in(main) == b.total_degree();
    }
    if (!ok) return std::nullopt;
  }
  const std::vector<PackedTerm> ta = pack(a, main, others);
  const std::vector<PackedTerm> tb = pack(b, main, others);
  const std::size_t da = static_cast<std::size_t>(a.degree_in(main));
  const std::size_t db = static_cast<std::size_t>(b.degree_in(main));
  unsigned max_exp = 0;
  for (const auto* ts : {&ta, &tb})
    for (const auto& t : *ts)
      for (auto e : t.other_exps) max_exp = std::max(max_exp, e);

  std::optional<std::size_t> t_known;
  Integer modulus = 1;
  std::vector<std::vector<Integer>> crt;  // [j][grid monomial]
  std::optional<std::vector<std::vector<Rational>>> previous;

  for (std::size_t prime_index = 0; prime_index < 48; ++prime_index) {
    const Field f{nth_prime(prime_index)};
    auto reduce_all = [&](const std::vector<PackedTerm>& ts) -> std::optional<std::vector<u64>> {
      std::vector<u64> out;
      for (const auto& t : ts) {
        const auto r = f.reduce(t.coeff);
        if (!r) return std::nullopt;
        out.push_back(*r);
      }
      return out;
    };
    const auto ca = reduce_all(ta);
    const auto cb = reduce_all(tb);
    if (!ca || !cb) continue;

    auto image = [&](const std::vector<PackedTerm>& ts, const std::vector<u64>& cs, std::size_t deg,
                     const std::vector<std::vector<u64>>& powers) {
      ModPoly out(deg + 1, 0);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        u64 v = cs[i];
        for (std::size_t y = 0; y < k && v != 0; ++y) v = f.mul(v, powers[y][ts[i].other_exps[y]]);
        out[ts[i].main_exp] = f.add(out[ts[i].main_exp], v);
      }
      return out;
    };
    auto power_table = [&](u64 x) {
      std::vector<u64> pw(max_exp + 1, 1);
      for (unsigned e = 1; e <= max_exp; ++e) pw[e] = f.mul(pw[e - 1], x);
      return pw;
    };
    auto gcd_at = [&](const std::vector<u64>& point) {
      std::vector<std::vector<u64>> powers;
      for (auto x : point) powers.push_back(power_table(x));
      ModPoly ia = image(ta, *ca, da, powers);
      ModPoly ib = image(tb, *cb, db, powers);
      if (ia.back() == 0 || ib.back() == 0) return std::optional<ModPoly>{};
      return std::optional<ModPoly>(gcd_monic(std::move(ia), std::move(ib), f));
    };

    // Degree probe at a random point.
    std::vector<u64> probe(k);
    for (auto& x : probe) x = rng() % f.p;
    const auto g0 = gcd_at(probe);
    if (!g0) continue;
    const std::size_t t = g0->size() - 1;
    if (t == 0) return MultiPoly(n, Rational(1));
    if (t_known && t > *t_known) continue;  // unlucky prime
    if (!t_known || t < *t_known) {
      t_known = t;
      modulus = 1;
      crt.clear();
      previous.reset();
    }

    // Grid of (t + 1)^k points; each coefficient of the monic gcd has
    // degree at most t in every other variable.
    const std::size_t side = t + 1;
    std::size_t grid = 1;
    for (std::size_t y = 0; y < k; ++y) grid *= side;
    std::vector<std::vector<u64>> nodes(k, std::vector<u64>(side));
    for (auto& axis : nodes) {
      for (std::size_t s = 0; s < side; ++s) {
        u64 x;
        do {
          x = rng() % f.p;
        } while (std::find(axis.begin(), axis.begin() + static_cast<std::ptrdiff_t>(s), x) !=
                 axis.begin() + static_cast<std::ptrdiff_t>(s));
        axis[s] = x;
      }
    }
    std::vector<std::vector<u64>> values(t, std::vector<u64>(grid));
    bool lucky = true;
    std::vector<u64> point(k);
    for (std::size_t idx = 0; idx < grid && lucky; ++idx) {
      std::size_t rest = idx;
      for (std::size_t y = 0; y < k; ++y) {
        point[y] = nodes[y][rest % side];
        rest /= side;
      }
      const auto g = gcd_at(point);
      if (!g || g->size() - 1 != t) {
        lucky = false;
        break;
      }
      for (std::size_t j = 0; j < t; ++j) values[j][idx] = (*g)[j];
    }
    if (!lucky) continue;
    for (auto& v : values) {
      std::size_t stride = 1;
      for (std::size_t y = 0; y < k; ++y, stride *= side) {
        std::vector<u64> fiber(side);
        for (std::size_t base = 0; base < grid; ++base) {
          if ((base / stride) % side != 0) continue;
          for (std::size_t s = 0; s < side; ++s) fiber[s] = v[base + s * stride];
          interpolate(fiber, nodes[y], f);
          for (std::size_t s = 0; s < side; ++s) v[base + s * stride] = fiber[s];
        }
      }
    }

    // Chinese remaindering.
    if (crt.empty()) {
      crt.assign(t, std::vector<Integer>(grid));
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < grid; ++i) crt[j][i] = values[j][i];
      modulus = f.p;
    } else {
      const u64 minv = f.inv(f.reduce(modulus));
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < grid; ++i) {
          const u64 delta = f.mul(f.sub(values[j][i], f.reduce(crt[j][i])), minv);
          crt[j][i] += modulus * delta;
        }
      modulus *= f.p;
    }

    std::vector<std::vector<Rational>> recon(t, std::vector<Rational>(grid));
    bool ok = true;
    for (std::size_t j = 0; j < t && ok; ++j)
      for (std::size_t i = 0; i < grid && ok; ++i) {
        const auto r = rational_reconstruct(crt[j][i], modulus);
        if (!r) ok = false;
        else recon[j][i] = *r;
      }
    if (!ok) continue;
    const bool stable = previous && *previous == recon;
    previous = recon;
    if (!stable) continue;

    std::vector<Term> terms;
    Monomial lead;
    lead.exps[main] = static_cast<std::uint16_t>(t);
    lead.degree = static_cast<std::uint32_t>(t);
    terms.push_back({lead, Rational(1)});
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < grid; ++i) {
        if (recon[j][i] == 0) continue;
        Monomial m;
        m.exps[main] = static_cast<std::uint16_t>(j);
        std::size_t rest = i;
        for (std::size_t y = 0; y < k; ++y) {
          m.exps[others[y]] = static_cast<std::uint16_t>(rest % side);
          rest /= side;
        }
        for (auto e : m.exps) m.degree += e;
        terms.push_back({m, recon[j][i]});
      }
    MultiPoly g = MultiPoly::from_terms(n, std::move(terms));
    if (k > 0) {
      std::vector<MultiPoly> back;
      for (std::size_t v = 0; v < n; ++v) back.push_back(MultiPoly::variable(n, v));
      for (auto y : others) back[y] -= MultiPoly::variable(n, main) * shift[y];
      g = substitute(g, back);
    }
    g = normalize(g);
    if (divides(g, p.with_nvars(n)) && divides(g, q.with_nvars(n))) return g;
  }
  return std::nullopt;
}

}  // namespace algdyn::detail
