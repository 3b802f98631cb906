#include "algdyn/algebra.hpp"

#include <random>
#include <set>

namespace algdyn {

Algebra::Algebra(std::vector<std::string> names, std::vector<RatMatrix> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const auto d = static_cast<Eigen::Index>(names_.size());
  if (d == 0) throw DomainError("algebra dimension must be positive");
  if (table_.size() != names_.size()) throw DomainError("structure tensor shape does not match dimension");
  for (const auto& t : table_)
    if (t.rows() != d || t.cols() != d) throw DomainError("structure tensor shape does not match dimension");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size()) {
    throw DomainError("basis names must be distinct");
  }
  blocks_ = {names_.size()};
}

Algebra::Algebra(std::size_t dim) {
  if (dim == 0) throw DomainError("algebra dimension must be positive");
  for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  const auto d = static_cast<Eigen::Index>(dim);
  table_.assign(dim, RatMatrix::Constant(d, d, Rational(0)));
  blocks_ = {dim};
}

void Algebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  table_.at(k)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
}

void Algebra::set_blocks(std::vector<std::size_t> blocks) {
  std::size_t total = 0;
  for (auto b : blocks) total += b;
  if (total != dim()) throw DomainError("block sizes do not add up to the dimension");
  blocks_ = std::move(blocks);
}

Algebra Algebra::quotient(const UniPoly& modulus, const std::string& var) {
  if (modulus.degree() < 1) throw DomainError("modulus polynomial must have positive degree");
  const UniPoly p = monic(modulus);
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
  }
  Algebra a(n);
  a.names_ = std::move(names);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const UniPoly r = divmod(UniPoly::monomial(Rational(1), i + j), p).second;
      for (std::size_t k = 0; k < n; ++k) a.set_constant(i, j, k, r.coefficient(k));
    }
  }
  return a;
}

Algebra Algebra::split(std::size_t n) {
  Algebra a(n);
  for (std::size_t i = 0; i < n; ++i) a.set_constant(i, i, i, Rational(1));
  a.blocks_.assign(n, 1);
  return a;
}

Algebra Algebra::matrices(std::size_t n) {
  if (n == 0) throw DomainError("matrix algebra size must be positive");
  Algebra a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.names_[i * n + j] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.set_constant(i * n + j, j * n + l, i * n + l, Rational(1));
  return a;
}

Algebra Algebra::product(const Algebra& x, const Algebra& y) {
  const std::size_t d = x.dim() + y.dim();
  Algebra out(d);
  std::set<std::string> seen(x.names_.begin(), x.names_.end());
  for (std::size_t i = 0; i < x.dim(); ++i) out.names_[i] = x.names_[i];
  for (std::size_t i = 0; i < y.dim(); ++i) {
    std::string name = y.names_[i];
    while (seen.count(name)) name += "'";
    seen.insert(name);
    out.names_[x.dim() + i] = name;
  }
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      for (std::size_t k = 0; k < x.dim(); ++k) out.set_constant(i, j, k, x.constant(i, j, k));
  const std::size_t o = x.dim();
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j)
      for (std::size_t k = 0; k < y.dim(); ++k) out.set_constant(o + i, o + j, o + k, y.constant(i, j, k));
  out.blocks_ = x.blocks_;
  out.blocks_.insert(out.blocks_.end(), y.blocks_.begin(), y.blocks_.end());
  return out;
}

Algebra Algebra::transported(const RatMatrix& m) const {
  const auto d = static_cast<Eigen::Index>(dim());
  if (m.rows() != d || m.cols() != d) throw DomainError("change of basis has the wrong size");
  const RatMatrix inv = inverse(m);
  Algebra out(dim());
  out.names_ = names_;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      std::vector<Rational> x(dim()), y(dim());
      for (Eigen::Index r = 0; r < d; ++r) {
        x[r] = inv(r, i);
        y[r] = inv(r, j);
      }
      const auto prod = multiply_coords(*this, x, y);
      RatVector pv(d);
      for (Eigen::Index r = 0; r < d; ++r) pv(r) = prod[r];
      const RatVector image = m * pv;
      for (Eigen::Index k = 0; k < d; ++k) out.set_constant(i, j, k, image(k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgElement::AlgElement(const Algebra& parent, RatVector coords) : parent_(&parent), coords_(std::move(coords)) {
  if (static_cast<std::size_t>(coords_.size()) != parent.dim()) {
    throw DomainError("element coordinate count does not match the algebra dimension");
  }
}

AlgElement AlgElement::zero(const Algebra& parent) {
  return AlgElement(parent, RatVector::Constant(static_cast<Eigen::Index>(parent.dim()), Rational(0)));
}

AlgElement AlgElement::basis(const Algebra& parent, std::size_t i) {
  AlgElement e = zero(parent);
  e.coords_(static_cast<Eigen::Index>(i)) = 1;
  return e;
}

std::vector<Rational> AlgElement::coord_list() const { return {coords_.begin(), coords_.end()}; }

bool AlgElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  if (a.parent_ != b.parent_) throw DomainError("elements of different algebras");
  return AlgElement(*a.parent_, a.coords_ + b.coords_);
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  if (a.parent_ != b.parent_) throw DomainError("elements of different algebras");
  return AlgElement(*a.parent_, a.coords_ - b.coords_);
}

AlgElement operator*(const Rational& c, const AlgElement& a) { return AlgElement(*a.parent_, a.coords_ * c); }

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  if (&a.parent() != &b.parent() && !(a.parent() == b.parent())) {
    throw DomainError("cannot multiply elements of different algebras");
  }
  const auto prod = multiply_coords(a.parent(), a.coord_list(), b.coord_list());
  RatVector v(static_cast<Eigen::Index>(prod.size()));
  for (std::size_t i = 0; i < prod.size(); ++i) v(static_cast<Eigen::Index>(i)) = prod[i];
  return AlgElement(a.parent(), std::move(v));
}

AlgElement power(const AlgElement& x, unsigned n) {
  if (n == 0) {
    auto u = find_unit(x.parent());
    if (!u) throw DomainError("x^0 needs a unit");
    return *u;
  }
  AlgElement r = x;
  for (unsigned i = 1; i < n; ++i) r = multiply(x, r);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> basis_coords(std::size_t d, std::size_t i) {
  std::vector<Rational> v(d, Rational(0));
  v[i] = 1;
  return v;
}

std::vector<MultiPoly> symbolic_element(std::size_t d) {
  std::vector<MultiPoly> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(MultiPoly::variable(d, i));
  return x;
}

std::vector<MultiPoly> lift(const std::vector<Rational>& v, std::size_t nvars) {
  std::vector<MultiPoly> out;
  for (const auto& c : v) out.emplace_back(nvars, c);
  return out;
}

}  // namespace

bool is_commutative(const Algebra& v) {
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (v.table(k) != v.table(k).transpose()) return false;
  return true;
}

bool is_associative(const Algebra& v) {
  const std::size_t d = v.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const auto ei = basis_coords(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto ej = basis_coords(d, j);
      const auto ij = multiply_coords(v, ei, ej);
      for (std::size_t l = 0; l < d; ++l) {
        const auto el = basis_coords(d, l);
        if (multiply_coords(v, ij, el) != multiply_coords(v, ei, multiply_coords(v, ej, el))) return false;
      }
    }
  }
  return true;
}

bool is_alternative(const Algebra& v) {
  // x symbolic; y is linear in both identities, so basis vectors suffice.
  const std::size_t d = v.dim();
  const auto x = symbolic_element(d);
  const auto x2 = multiply_coords(v, x, x);
  for (std::size_t k = 0; k < d; ++k) {
    const auto y = lift(basis_coords(d, k), d);
    if (multiply_coords(v, x, multiply_coords(v, x, y)) != multiply_coords(v, x2, y)) return false;
    if (multiply_coords(v, multiply_coords(v, y, x), x) != multiply_coords(v, y, x2)) return false;
  }
  return true;
}

bool is_power_associative(const Algebra& v) {
  // Characteristic 0: third- and fourth-power associativity suffice.
  const std::size_t d = v.dim();
  const auto x = symbolic_element(d);
  const auto x2 = multiply_coords(v, x, x);
  const auto x2x = multiply_coords(v, x2, x);
  if (x2x != multiply_coords(v, x, x2)) return false;
  return multiply_coords(v, x2x, x) == multiply_coords(v, x2, x2);
}

std::optional<AlgElement> find_unit(const Algebra& v) {
  const std::size_t d = v.dim();
  const auto n = static_cast<Eigen::Index>(d);
  RatMatrix sys = RatMatrix::Constant(2 * n * n, n, Rational(0));
  RatVector rhs = RatVector::Constant(2 * n * n, Rational(0));
  Eigen::Index row = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        sys(row, static_cast<Eigen::Index>(i)) = v.constant(i, j, k);      // u * e_j
        sys(row + 1, static_cast<Eigen::Index>(i)) = v.constant(j, i, k);  // e_j * u
      }
      rhs(row) = rhs(row + 1) = (j == k) ? 1 : 0;
      row += 2;
    }
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  return AlgElement(v, *sol);
}

bool unit_fixed_point_check(const Algebra& v) {
  const auto unit = find_unit(v);
  if (!unit) throw DomainError("unit_fixed_point_check needs a unitary algebra");
  const std::size_t d = v.dim();
  const auto z = symbolic_element(d);
  const auto f = multiply_coords(v, z, z);
  const auto u = unit->coord_list();
  for (std::size_t k = 0; k < d; ++k) {
    if (evaluate(f[k], u) != u[k]) return false;
    for (std::size_t j = 0; j < d; ++j) {
      const Rational entry = evaluate(derivative(f[k], j), u);
      if (entry != (j == k ? 2 : 0)) return false;
    }
  }
  return true;
}

RatMatrix left_mult_matrix(const AlgElement& x) {
  const Algebra& v = x.parent();
  const auto d = static_cast<Eigen::Index>(v.dim());
  RatMatrix l = RatMatrix::Constant(d, d, Rational(0));
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x.coords()(i) == 0) continue;
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) l(k, j) += x.coords()(i) * v.constant(i, j, k);
  }
  return l;
}

bool is_nilpotent(const AlgElement& x) {
  const RatMatrix p = matrix_power(left_mult_matrix(x), static_cast<unsigned>(x.parent().dim()));
  return p.isZero();
}

AlgebraFlags predicates(const Algebra& v) {
  AlgebraFlags f;
  f.unitary = find_unit(v).has_value();
  f.commutative = is_commutative(v);
  f.associative = is_associative(v);
  f.alternative = f.associative || is_alternative(v);
  f.power_associative = f.alternative || is_power_associative(v);
  f.abelian = f.unitary && f.commutative && f.associative;
  f.jordan = f.commutative && f.alternative;
  return f;
}

Nilradical nilradical_and_m(const Algebra& v) {
  if (!predicates(v).abelian) throw DomainError("nilradical_and_m needs an abelian algebra");
  const std::size_t d = v.dim();
  const auto n = static_cast<Eigen::Index>(d);
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const AlgElement prod = multiply(AlgElement::basis(v, i), AlgElement::basis(v, j));
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = left_mult_matrix(prod).trace();
    }
  }
  Nilradical out;
  for (auto& k : kernel_basis(gram)) {
    AlgElement x(v, std::move(k));
    if (!is_nilpotent(x)) throw ConsistencyError("trace-form kernel vector is not nilpotent");
    out.basis.push_back(std::move(x));
  }
  out.reduced_dim = d - out.basis.size();
  return out;
}

UniPoly element_min_poly(const AlgElement& x) {
  const Algebra& v = x.parent();
  const auto unit = find_unit(v);
  if (!unit) throw DomainError("element_min_poly needs a unitary algebra");
  if (!is_power_associative(v)) throw DomainError("element_min_poly needs a power-associative algebra");
  const auto n = static_cast<Eigen::Index>(v.dim());
  std::vector<AlgElement> powers{*unit};
  while (true) {
    const AlgElement next = multiply(x, powers.back());
    const auto k = static_cast<Eigen::Index>(powers.size());
    RatMatrix span(n, k);
    for (Eigen::Index c = 0; c < k; ++c) span.col(c) = powers[c].coords();
    if (auto sol = solve_linear(span, next.coords())) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(k + 1));
      for (Eigen::Index c = 0; c < k; ++c) coeffs[c] = -(*sol)(c);
      coeffs[k] = 1;
      return UniPoly(std::move(coeffs));
    }
    powers.push_back(next);
  }
}

GenericInvariants generic_invariants(const Algebra& v, std::uint64_t seed, std::size_t samples) {
  if (!find_unit(v)) throw DomainError("generic_invariants needs a unitary algebra");
  if (!is_power_associative(v)) throw DomainError("generic_invariants needs a power-associative algebra");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-10, 10);
  GenericInvariants out;
  out.seed = seed;
  out.samples = samples;
  const auto n = static_cast<Eigen::Index>(v.dim());
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = coord(rng);
    const UniPoly p = element_min_poly(AlgElement(v, std::move(c)));
    const auto delta = static_cast<std::size_t>(p.degree());
    const std::size_t k = squarefree_degree(p);
    if (delta > out.delta) {
      out.delta = delta;
      out.k = k;
    } else if (delta == out.delta) {
      out.k = std::max(out.k, k);
    }
  }
  return out;
}

AffineRationalMap squaring_map(const Algebra& v) {
  if (!is_commutative(v)) throw DomainError("squaring_map needs a commutative algebra");
  const auto z = symbolic_element(v.dim());
  std::vector<RatFunc> coords;
  for (auto& c : multiply_coords(v, z, z)) coords.emplace_back(std::move(c));
  return AffineRationalMap(std::move(coords));
}

Algebra algebra_from_quadratic(const AffineRationalMap& f) {
  const std::size_t d = f.dim();
  if (d == 0) throw DomainError("empty quadratic map");
  Algebra out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const RatFunc& c = f[k];
    if (!c.is_polynomial()) throw DomainError("coordinate is not a polynomial");
    const MultiPoly p = c.num() * Rational(1 / c.den().constant_term());
    for (const auto& t : p.terms()) {
      if (t.mono.degree != 2) throw DomainError("coordinate is not a homogeneous quadratic");
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < d; ++i)
        for (unsigned e = 0; e < t.mono.exps[i]; ++e) idx.push_back(i);
      if (idx[0] == idx[1]) {
        out.set_constant(idx[0], idx[0], k, t.coeff);
      } else {
        out.set_constant(idx[0], idx[1], k, t.coeff / 2);
        out.set_constant(idx[1], idx[0], k, t.coeff / 2);
      }
    }
  }
  return out;
}

bool check_isomorphism_witness(const Algebra& v, const Algebra& w, const RatMatrix& m) {
  const auto d = static_cast<Eigen::Index>(v.dim());
  if (v.dim() != w.dim() || m.rows() != d || m.cols() != d) throw DomainError("dimension mismatch");
  if (determinant<Rational>(m) == 0) throw DomainError("witness matrix is singular");
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto vij = multiply_coords(v, basis_coords(v.dim(), i), basis_coords(v.dim(), j));
      RatVector lhs = m * Eigen::Map<const RatVector>(vij.data(), d);
      std::vector<Rational> mi(m.col(i).begin(), m.col(i).end());
      std::vector<Rational> mj(m.col(j).begin(), m.col(j).end());
      const auto rhs = multiply_coords(w, mi, mj);
      for (Eigen::Index k = 0; k < d; ++k)
        if (lhs(k) != rhs[k]) return false;
    }
  }
  return true;
}

Dim2Type classify_dim2(const Algebra& v) {
  if (v.dim() != 2) throw DomainError("classify_dim2 needs a 2-dimensional algebra");
  if (!is_commutative(v)) throw DomainError("classify_dim2 needs a commutative algebra");
  const auto unit = find_unit(v);
  if (!unit) throw DomainError("classify_dim2 needs a unitary algebra");
  // Complete {1} to a basis {1, x} with a standard basis vector.
  std::size_t j = 0;
  RatMatrix pair(2, 2);
  for (; j < 2; ++j) {
    pair.col(0) = unit->coords();
    pair.col(1) = AlgElement::basis(v, j).coords();
    if (determinant<Rational>(pair) != 0) break;
  }
  const AlgElement x = AlgElement::basis(v, j);
  const auto sol = solve_linear(pair, multiply(x, x).coords());
  const Rational a = (*sol)(0);
  const Rational b = (*sol)(1);
  return a + b * b / 4 == 0 ? Dim2Type::nilpotent_type : Dim2Type::split_type;
}

std::string to_string(Dim2Type t) { return t == Dim2Type::nilpotent_type ? "nilpotent_type" : "split_type"; }

AlgebraProfile analyze(const Algebra& v, std::uint64_t seed, std::size_t samples) {
  AlgebraProfile p;
  p.flags = predicates(v);
  p.unit = find_unit(v);
  p.seed = seed;
  p.samples = samples;
  if (p.flags.abelian) {
    auto nil = nilradical_and_m(v);
    p.nilradical_basis = std::move(nil.basis);
    p.reduced_dim = nil.reduced_dim;
  }
  if (p.flags.unitary && p.flags.power_associative) {
    const auto g = generic_invariants(v, seed, samples);
    p.generic_delta = g.delta;
    p.generic_k = g.k;
  }
  if (v.dim() == 2 && p.flags.unitary && p.flags.commutative) p.dim2 = classify_dim2(v);
  return p;
}

}  // namespace algdyn
