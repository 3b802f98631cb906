#include "algdyn/rational_map.hpp"

#include <algorithm>

namespace algdyn {

namespace {

std::size_t ring_of(const MultiPoly& a, const MultiPoly& b) { return std::max(a.nvars(), b.nvars()); }

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(num_.nvars(), Rational(1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const std::size_t n = ring_of(num, den);
  num = num.with_nvars(n);
  den = den.with_nvars(n);
  if (num.is_zero()) {
    num_ = MultiPoly(n);
    den_ = MultiPoly(n, Rational(1));
    return;
  }
  const MultiPoly g = gcd_multi(num, den);
  if (!g.is_constant()) {
    num = exact_divide(num, g);
    den = exact_divide(den, g);
  }
  const Rational lead = den.leading_coefficient();
  num_ = num * Rational(1 / lead);
  den_ = den * Rational(1 / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  // Cross-cancel first to keep the products small.
  const MultiPoly g1 = gcd_multi(a.num_, b.den_);
  const MultiPoly g2 = gcd_multi(b.num_, a.den_);
  return RatFunc(exact_divide(a.num_, g1) * exact_divide(b.num_, g2),
                 exact_divide(a.den_, g2) * exact_divide(b.den_, g1));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return a * RatFunc(b.den_, b.num_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc substitute(const RatFunc& f, const std::vector<RatFunc>& values) {
  const std::size_t n = f.nvars();
  if (values.size() < n) throw DomainError("substitution needs one value per variable");
  std::size_t target = 0;
  for (const auto& v : values) target = std::max(target, v.nvars());
  if (f.is_polynomial() && std::all_of(values.begin(), values.begin() + static_cast<long>(n),
                                       [](const RatFunc& v) { return v.is_polynomial(); })) {
    std::vector<MultiPoly> polys;
    for (std::size_t i = 0; i < n; ++i) polys.push_back(values[i].num() * Rational(1 / values[i].den().constant_term()));
    return RatFunc(substitute(f.num(), polys) * Rational(1 / f.den().constant_term()),
                   MultiPoly(target, Rational(1)));
  }
  // Homogenize variable by variable: x_i -> p_i / q_i, multiply numerator and
  // denominator by q_i^{M_i} where M_i bounds the degree in x_i.
  std::vector<std::vector<MultiPoly>> num_pow(n);
  std::vector<std::vector<MultiPoly>> den_pow(n);
  std::vector<int> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = std::max(f.num().degree_in(i), f.den().degree_in(i));
    num_pow[i].push_back(MultiPoly(target, Rational(1)));
    den_pow[i].push_back(MultiPoly(target, Rational(1)));
    for (int e = 1; e <= bound[i]; ++e) {
      num_pow[i].push_back(num_pow[i].back() * values[i].num());
      den_pow[i].push_back(den_pow[i].back() * values[i].den());
    }
  }
  auto expand = [&](const MultiPoly& p) {
    std::vector<Term> acc;
    for (const auto& t : p.terms()) {
      MultiPoly prod(target, t.coeff);
      for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
        if (bound[i] == 0) continue;
        const int e = t.mono.exps[i];
        if (e > 0) prod = prod * num_pow[i][e];
        if (bound[i] - e > 0) prod = prod * den_pow[i][bound[i] - e];
      }
      acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return MultiPoly::from_terms(target, std::move(acc));
  };
  MultiPoly den = expand(f.den());
  if (den.is_zero()) throw IndeterminacyError("denominator vanishes identically after substitution");
  return RatFunc(expand(f.num()), std::move(den));
}

std::string to_string(const RatFunc& f, const std::vector<std::string>& names) {
  if (f.is_polynomial()) {
    return to_string(f.num() * Rational(1 / f.den().constant_term()), names);
  }
  return "(" + to_string(f.num(), names) + ")/(" + to_string(f.den(), names) + ")";
}

AffineRationalMap::AffineRationalMap(std::vector<RatFunc> coords) : coords_(std::move(coords)) {
  const std::size_t d = coords_.size();
  for (auto& c : coords_) {
    if (c.nvars() > d) throw DomainError("coordinate uses more variables than the map dimension");
    if (c.nvars() != d) c = RatFunc(c.num().with_nvars(d), c.den().with_nvars(d));
  }
}

AffineRationalMap AffineRationalMap::identity(std::size_t dim) {
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < dim; ++i) coords.emplace_back(MultiPoly::variable(dim, i));
  return AffineRationalMap(std::move(coords));
}

ProjectiveMap reduce_components(std::vector<MultiPoly> components) {
  if (std::all_of(components.begin(), components.end(), [](const MultiPoly& p) { return p.is_zero(); })) {
    throw DegenerateMapError("all homogeneous components vanish identically");
  }
  const MultiPoly g = gcd_multi(components);
  if (!g.is_constant()) {
    for (auto& c : components) c = exact_divide(c, g);
  }
  ProjectiveMap out;
  out.degree = 0;
  for (const auto& c : components) out.degree = std::max(out.degree, c.total_degree());
  out.components = std::move(components);
  return out;
}

ProjectiveMap homogenize_reduce(const AffineRationalMap& m) {
  const std::size_t d = m.dim();
  // Common denominator.
  MultiPoly common(d, Rational(1));
  for (const auto& c : m.coords()) {
    if (c.den().is_constant()) continue;
    const MultiPoly g = gcd_multi(common, c.den());
    common = common * exact_divide(c.den(), g);
  }
  std::vector<MultiPoly> affine{common};
  for (const auto& c : m.coords()) affine.push_back(c.num() * exact_divide(common, c.den()));
  int degree = 0;
  for (const auto& p : affine) degree = std::max(degree, p.total_degree());
  std::vector<MultiPoly> components;
  components.reserve(affine.size());
  for (const auto& p : affine) {
    components.push_back(p.is_zero() ? MultiPoly(d + 1) : homogenize(p, degree));
  }
  return reduce_components(std::move(components));
}

AffineRationalMap compose(const AffineRationalMap& first, const AffineRationalMap& second) {
  if (first.dim() != second.dim()) throw DomainError("composition of maps with different dimensions");
  std::vector<RatFunc> coords;
  coords.reserve(first.dim());
  for (const auto& c : first.coords()) coords.push_back(substitute(c, second.coords()));
  return AffineRationalMap(std::move(coords));
}

ProjectiveMap compose(const ProjectiveMap& first, const ProjectiveMap& second) {
  if (first.components.size() != second.components.size()) {
    throw DomainError("composition of maps with different dimensions");
  }
  std::vector<MultiPoly> out;
  out.reserve(first.components.size());
  for (const auto& c : first.components) out.push_back(substitute(c, second.components));
  return reduce_components(std::move(out));
}

int map_degree(const AffineRationalMap& m) { return homogenize_reduce(m).degree; }

AffineRationalMap dehomogenize(const ProjectiveMap& m) {
  const MultiPoly den = dehomogenize(m.components.front(), 0);
  if (den.is_zero()) throw DegenerateMapError("image lies in the hyperplane at infinity");
  std::vector<RatFunc> coords;
  for (std::size_t i = 1; i < m.components.size(); ++i) coords.emplace_back(dehomogenize(m.components[i], 0), den);
  return AffineRationalMap(std::move(coords));
}

std::vector<std::string> to_strings(const AffineRationalMap& m) {
  std::vector<std::string> out;
  const auto names = default_variable_names(m.dim());
  for (const auto& c : m.coords()) out.push_back(to_string(c, names));
  return out;
}

std::vector<std::string> to_strings(const ProjectiveMap& m) {
  std::vector<std::string> out;
  const auto names = projective_variable_names(m.components.size());
  for (const auto& c : m.components) out.push_back(to_string(c, names));
  return out;
}

}  // namespace algdyn
