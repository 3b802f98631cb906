#include "algdyn/induced.hpp"

namespace algdyn {

UniRationalFunction::UniRationalFunction(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const UniPoly g = gcd(num, den);
  if (!num.is_zero() && g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  if (num.is_zero()) den = UniPoly{1};
  const Rational lead = den.leading_coefficient();
  num_ = num * Rational(1 / lead);
  den_ = den * Rational(1 / lead);
}

int UniRationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

UniRationalFunction operator+(const UniRationalFunction& a, const UniRationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

UniRationalFunction operator-(const UniRationalFunction& a, const UniRationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

UniRationalFunction operator*(const UniRationalFunction& a, const UniRationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

UniRationalFunction operator/(const UniRationalFunction& a, const UniRationalFunction& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

UniRationalFunction compose(const UniRationalFunction& outer, const UniRationalFunction& inner) {
  // Homogenize: p(q/r) = (sum c_i q^i r^{D-i}) / r^D with D = deg(outer).
  const int big = outer.degree();
  auto expand = [&](const UniPoly& p) {
    UniPoly acc;
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coefficient(i) == 0) continue;
      acc += p.coefficient(i) * pow(inner.num(), static_cast<unsigned>(i)) *
             pow(inner.den(), static_cast<unsigned>(big - i));
    }
    return acc;
  };
  UniPoly den = expand(outer.den());
  if (den.is_zero()) throw IndeterminacyError("denominator vanishes after composition");
  return {expand(outer.num()), std::move(den)};
}

UniRationalFunction iterate(const UniRationalFunction& phi, unsigned n) {
  if (n == 0) return UniRationalFunction(UniPoly::identity());
  UniRationalFunction out = phi;
  for (unsigned i = 1; i < n; ++i) out = compose(phi, out);
  return out;
}

std::string to_string(const UniRationalFunction& phi, const std::string& var) {
  if (phi.is_polynomial()) return to_string(phi.num(), var);
  return "(" + to_string(phi.num(), var) + ")/(" + to_string(phi.den(), var) + ")";
}

namespace {

using Coords = std::vector<MultiPoly>;

Coords constant_coords(const std::vector<Rational>& c, std::size_t nvars) {
  Coords out;
  for (const auto& x : c) out.emplace_back(nvars, x);
  return out;
}

Coords symbolic_block(std::size_t dim, std::size_t nvars, std::size_t offset) {
  Coords out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(MultiPoly::variable(nvars, offset + i));
  return out;
}

Coords scale(const Coords& x, const Rational& c) {
  Coords out = x;
  for (auto& p : out) p *= c;
  return out;
}

Coords add(Coords a, const Coords& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_zero(const Coords& x) {
  for (const auto& p : x)
    if (!p.is_zero()) return false;
  return true;
}

/// P(v) by Horner in the algebra.
Coords evaluate_at(const Algebra& v, const UniPoly& p, const Coords& x, const Coords& unit) {
  const std::size_t n = x.empty() ? 0 : x.front().nvars();
  Coords acc(v.dim(), MultiPoly(n));
  for (int i = p.degree(); i >= 0; --i) {
    acc = multiply_coords(v, acc, x);
    acc = add(std::move(acc), scale(unit, p.coefficient(static_cast<std::size_t>(i))));
  }
  return acc;
}

Coords power_of(const Algebra& v, const Coords& x, unsigned e, const Coords& unit) {
  Coords result = unit;
  Coords base = x;
  bool first = true;
  while (e > 0) {
    if (e & 1u) {
      result = first ? base : multiply_coords(v, result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = multiply_coords(v, base, base);
  }
  return result;
}

Matrix<MultiPoly> left_mult_symbolic(const Algebra& v, const Coords& x) {
  const auto d = static_cast<Eigen::Index>(v.dim());
  const std::size_t n = x.front().nvars();
  Matrix<MultiPoly> l(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) l(r, c) = MultiPoly(n);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) {
        const Rational& a = v.constant(i, j, k);
        if (a != 0) l(k, j) += x[i] * a;
      }
  }
  return l;
}

/// Coordinates of y with x*y = b, by Cramer's rule on L_x.
std::vector<RatFunc> solve_left(const Algebra& v, const Coords& x, const Coords& b) {
  const Matrix<MultiPoly> l = left_mult_symbolic(v, x);
  const MultiPoly det = determinant<MultiPoly>(l);
  if (det.is_zero()) throw MapUndefinedError("left multiplication is identically singular; the map is not defined");
  std::vector<RatFunc> out;
  for (Eigen::Index i = 0; i < l.cols(); ++i) {
    Matrix<MultiPoly> li = l;
    for (Eigen::Index r = 0; r < l.rows(); ++r) li(r, i) = b[r];
    out.emplace_back(determinant<MultiPoly>(li), det);
  }
  return out;
}

void require_power_associative_unital(const Algebra& v) {
  if (!find_unit(v)) throw DomainError("algebra has no unit");
  if (!is_power_associative(v)) throw DomainError("algebra is not power-associative");
}

}  // namespace

AffineRationalMap induce_univariate(const Algebra& v, const UniRationalFunction& phi) {
  require_power_associative_unital(v);
  const std::size_t d = v.dim();
  const Coords x = symbolic_block(d, d, 0);
  const Coords unit = constant_coords(find_unit(v)->coord_list(), d);
  const Coords q = evaluate_at(v, phi.num(), x, unit);
  std::vector<RatFunc> coords;
  if (phi.is_polynomial()) {
    const Rational c = 1 / phi.den().coefficient(0);
    for (const auto& p : q) coords.emplace_back(p * c);
  } else {
    coords = solve_left(v, evaluate_at(v, phi.den(), x, unit), q);
  }
  return AffineRationalMap(std::move(coords));
}

bool coefficient_structure_check(const Algebra& v, const UniPoly& p) {
  const std::size_t m = v.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational expected = (i + j == k) ? 1 : 0;
        if (v.constant(i, j, k) != expected) throw DomainError("algebra is not Q[t]/(t^m) in its monomial basis");
      }
  const AffineRationalMap f = induce_univariate(v, UniRationalFunction(p));
  // P'(lambda_0) in the map's ring.
  MultiPoly slope(m);
  const UniPoly dp = derivative(p);
  for (int i = 0; i <= dp.degree(); ++i)
    slope += pow(MultiPoly::variable(m, 0), static_cast<unsigned>(i)) * dp.coefficient(static_cast<std::size_t>(i));
  for (std::size_t j = 1; j < m; ++j) {
    if (!f[j].is_polynomial()) return false;
    const MultiPoly c = f[j].num() * Rational(1 / f[j].den().constant_term());
    if (c.degree_in(j) > 1) return false;
    if (!(derivative(c, j) == slope)) return false;
  }
  return true;
}

AffineRationalMap induce_monomial(const IntMatrix& a, const Algebra& v) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("exponent matrix must be square");
  if (determinant<Integer>(a) == 0) throw DomainError("exponent matrix is singular");
  if (!predicates(v).abelian) throw DomainError("monomial maps need an abelian algebra");
  const auto d = static_cast<std::size_t>(a.rows());
  const std::size_t k = v.dim();
  const std::size_t n = d * k;
  const Coords unit = constant_coords(find_unit(v)->coord_list(), n);
  std::vector<Coords> x;
  for (std::size_t j = 0; j < d; ++j) x.push_back(symbolic_block(k, n, j * k));
  std::vector<RatFunc> coords;
  for (std::size_t r = 0; r < d; ++r) {
    Coords pos = unit;
    Coords neg = unit;
    bool has_neg = false;
    for (std::size_t j = 0; j < d; ++j) {
      const Integer e = a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
      if (e == 0) continue;
      const unsigned mag = static_cast<unsigned>(abs(e));
      if (e > 0) {
        pos = multiply_coords(v, pos, power_of(v, x[j], mag, unit));
      } else {
        neg = multiply_coords(v, neg, power_of(v, x[j], mag, unit));
        has_neg = true;
      }
    }
    if (!has_neg) {
      for (auto& p : pos) coords.emplace_back(std::move(p));
    } else {
      for (auto& c : solve_left(v, neg, pos)) coords.push_back(std::move(c));
    }
  }
  return AffineRationalMap(std::move(coords));
}

namespace {

// sum_{j >= 0} c_j h^j with h nilpotent; the sum stops once h^j vanishes.
template <class Coeff>
Coords nilpotent_series(const Algebra& v, const Coords& h, const Coords& unit, Coeff coeff) {
  Coords acc = scale(unit, coeff(0));
  Coords term = unit;
  for (std::size_t j = 1; j <= v.dim(); ++j) {
    term = multiply_coords(v, term, h);
    if (is_zero(term)) break;
    acc = add(std::move(acc), scale(term, coeff(j)));
  }
  return acc;
}

AlgElement to_element(const Algebra& v, const Coords& c) {
  RatVector out(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) out(static_cast<Eigen::Index>(i)) = c[i].constant_term();
  return AlgElement(v, std::move(out));
}

Rational exp_coefficient(std::size_t j) { return Rational(1) / Rational(factorial(static_cast<std::int64_t>(j))); }

}  // namespace

AlgElement exp_element(const AlgElement& h) {
  const Algebra& v = h.parent();
  if (!is_nilpotent(h)) throw DomainError("exp needs a nilpotent argument");
  const auto unit = find_unit(v);
  if (!unit) throw DomainError("exp needs a unitary algebra");
  const Coords series =
      nilpotent_series(v, constant_coords(h.coord_list(), 0), constant_coords(unit->coord_list(), 0), exp_coefficient);
  return to_element(v, series);
}

AlgElement log_element(const AlgElement& u) {
  const Algebra& v = u.parent();
  const auto unit = find_unit(v);
  if (!unit) throw DomainError("log needs a unitary algebra");
  const AlgElement n = u - *unit;
  if (!is_nilpotent(n)) throw DomainError("log needs an argument of the form 1 + nilpotent");
  const Coords series = nilpotent_series(v, constant_coords(n.coord_list(), 0), constant_coords(unit->coord_list(), 0),
                                         [](std::size_t j) {
                                           if (j == 0) return Rational(0);
                                           const Rational r(1, static_cast<long>(j));
                                           return j % 2 == 1 ? r : Rational(-r);
                                         });
  return to_element(v, series);
}

namespace {

Algebra block_algebra(const Algebra& v, std::size_t offset, std::size_t size) {
  Algebra b(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t k = 0; k < size; ++k) b.set_constant(i, j, k, v.constant(offset + i, offset + j, offset + k));
  return b;
}

}  // namespace

std::vector<LocalFactor> local_presentation(const Algebra& v) {
  if (!predicates(v).abelian) throw DomainError("local presentation needs an abelian algebra");
  std::vector<LocalFactor> factors;
  std::size_t offset = 0;
  for (std::size_t size : v.blocks()) {
    // Products between different blocks must vanish.
    for (std::size_t i = offset; i < offset + size; ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j >= offset && j < offset + size) continue;
        for (std::size_t k = 0; k < v.dim(); ++k)
          if (v.constant(i, j, k) != 0) throw DomainError("algebra blocks are not a product decomposition");
      }
    const Algebra b = block_algebra(v, offset, size);
    const auto unit = find_unit(b);
    if (!unit) throw DomainError("block has no unit");
    const Nilradical nil = nilradical_and_m(b);
    if (nil.reduced_dim != 1) throw DomainError("block is not a local algebra; supply the algebra as a product of local factors");
    auto embed = [&](const AlgElement& e) {
      RatVector c = RatVector::Constant(static_cast<Eigen::Index>(v.dim()), Rational(0));
      c.segment(static_cast<Eigen::Index>(offset), static_cast<Eigen::Index>(size)) = e.coords();
      return AlgElement(v, std::move(c));
    };
    LocalFactor f{embed(*unit), {}};
    for (const auto& m : nil.basis) f.maximal_ideal.push_back(embed(m));
    factors.push_back(std::move(f));
    offset += size;
  }
  return factors;
}

AffineRationalMap exp_conjugacy(const Algebra& v, std::size_t copies) {
  const auto factors = local_presentation(v);
  const std::size_t k = v.dim();
  const std::size_t n = copies * k;
  std::vector<RatFunc> coords;
  for (std::size_t j = 0; j < copies; ++j) {
    std::size_t var = j * k;
    Coords x(k, MultiPoly(n));
    for (const auto& f : factors) {
      const MultiPoly a = MultiPoly::variable(n, var++);
      Coords h(k, MultiPoly(n));
      for (const auto& m : f.maximal_ideal) {
        const MultiPoly coeff = MultiPoly::variable(n, var++);
        for (std::size_t i = 0; i < k; ++i)
          if (m.coords()(static_cast<Eigen::Index>(i)) != 0) h[i] += coeff * m.coords()(static_cast<Eigen::Index>(i));
      }
      const Coords e = nilpotent_series(v, h, constant_coords(f.idempotent.coord_list(), n), exp_coefficient);
      for (std::size_t i = 0; i < k; ++i) x[i] += a * e[i];
    }
    for (auto& c : x) coords.emplace_back(std::move(c));
  }
  return AffineRationalMap(std::move(coords));
}

AffineRationalMap monomial_linear_product(const Algebra& v, const IntMatrix& a) {
  const auto factors = local_presentation(v);
  const auto d = static_cast<std::size_t>(a.rows());
  const std::size_t k = v.dim();
  const std::size_t n = d * k;
  std::vector<RatFunc> coords(n);
  std::size_t local = 0;  // offset of the factor inside one copy
  for (const auto& f : factors) {
    for (std::size_t r = 0; r < d; ++r) {
      MultiPoly num(n, Rational(1));
      MultiPoly den(n, Rational(1));
      for (std::size_t j = 0; j < d; ++j) {
        const Integer e = a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
        const MultiPoly aj = MultiPoly::variable(n, j * k + local);
        if (e > 0) num *= pow(aj, static_cast<unsigned>(e));
        if (e < 0) den *= pow(aj, static_cast<unsigned>(-e));
      }
      coords[r * k + local] = RatFunc(num, den);
      for (std::size_t t = 0; t < f.maximal_ideal.size(); ++t) {
        MultiPoly lin(n);
        for (std::size_t j = 0; j < d; ++j) {
          const Integer e = a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
          if (e != 0) lin += MultiPoly::variable(n, j * k + local + 1 + t) * Rational(e);
        }
        coords[r * k + local + 1 + t] = RatFunc(lin);
      }
    }
    local += 1 + f.maximal_ideal.size();
  }
  return AffineRationalMap(std::move(coords));
}

bool conjugacy_check_local(const Algebra& v, const IntMatrix& a) {
  const auto d = static_cast<std::size_t>(a.rows());
  const AffineRationalMap phi = exp_conjugacy(v, d);
  const AffineRationalMap lhs = compose(induce_monomial(a, v), phi);
  const AffineRationalMap rhs = compose(phi, monomial_linear_product(v, a));
  return lhs == rhs;
}

}  // namespace algdyn
