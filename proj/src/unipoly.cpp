#include "algdyn/unipoly.hpp"

#include <algorithm>

namespace algdyn {

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::identity() { return monomial(Rational(1), 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

UniPoly pow(const UniPoly& p, unsigned n) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

UniPoly derivative(const UniPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading_coefficient();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const Rational f = r[i] / lead;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coefficient(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = monic(a);
  UniPoly y = monic(b);
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= q;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

std::size_t squarefree_degree(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_degree of the zero polynomial");
  const UniPoly g = gcd(p, derivative(p));
  return static_cast<std::size_t>(p.degree() - std::max(g.degree(), 0));
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> factors;
  if (p.degree() == 0) return factors;
  // Yun's algorithm.
  const UniPoly f = monic(p);
  const UniPoly df = derivative(f);
  UniPoly a = gcd(f, df);
  UniPoly b = divmod(f, a).first;
  UniPoly c = divmod(df, a).first;
  UniPoly d = c - derivative(b);
  while (b.degree() > 0) {
    const UniPoly g = gcd(b, d);
    factors.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& a = c[i];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Rational mag = neg ? Rational(-a) : a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace algdyn
