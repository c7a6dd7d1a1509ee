#include "trideform/hochschild.hpp"

#include "trideform/errors.hpp"

#include <stdexcept>
#include <string>

namespace trideform {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(std::size_t arity, std::size_t dim_a, std::size_t dim_b)
    : arity_(arity), dim_a_(dim_a), dim_b_(dim_b), values_(ipow(dim_a, arity), ExtendedElement(dim_a, dim_b)) {
  if (arity == 0)
    throw InputError("cochains start in arity 1");
}

std::size_t Cochain::encode(std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity_)
    throw InputError("cochain tuple has length " + std::to_string(tuple.size()) + ", expected " +
                     std::to_string(arity_));
  std::size_t index = 0;
  for (std::size_t t : tuple) {
    if (t >= dim_a_)
      throw InputError("cochain tuple entry " + std::to_string(t) + " out of range");
    index = index * dim_a_ + t;
  }
  return index;
}

std::vector<std::size_t> Cochain::decode(std::size_t index) const {
  std::vector<std::size_t> tuple(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    tuple[k] = index % dim_a_;
    index /= dim_a_;
  }
  return tuple;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero())
      return false;
  return true;
}

bool Cochain::in_ideal() const {
  for (const auto& v : values_)
    if (!v.in_ideal())
      return false;
  return true;
}

Vector Cochain::coords() const {
  Vector out;
  out.reserve(values_.size() * dim_a_ * dim_b_);
  for (const auto& v : values_)
    out.insert(out.end(), v.coords().begin(), v.coords().end());
  return out;
}

Cochain Cochain::from_coords(std::size_t arity, std::size_t dim_a, std::size_t dim_b, const Vector& coords) {
  Cochain c(arity, dim_a, dim_b);
  const std::size_t block = dim_a * dim_b;
  if (coords.size() != c.tuple_count() * block)
    throw InputError("Cochain::from_coords: length mismatch");
  for (std::size_t t = 0; t < c.tuple_count(); ++t)
    c.values_[t] = ExtendedElement::from_coords(
        dim_a, dim_b, Vector(coords.begin() + static_cast<std::ptrdiff_t>(t * block),
                             coords.begin() + static_cast<std::ptrdiff_t>((t + 1) * block)));
  return c;
}

void Cochain::check_shape(const Cochain& o) const {
  if (o.arity_ != arity_ || o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("cochain shape mismatch");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  check_shape(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += o.values_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  check_shape(o);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= o.values_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  for (auto& v : values_)
    v *= s;
  return *this;
}

int bar_sign(std::size_t arity) { return (arity * (arity - 1) / 2) % 2 == 0 ? 1 : -1; }

Cochain to_bar(const Cochain& product_coords) {
  return Rational(bar_sign(product_coords.arity())) * product_coords;
}

Cochain from_bar(const Cochain& bar_coords) { return Rational(bar_sign(bar_coords.arity())) * bar_coords; }

Cochain product_cochain(const FiniteAlgebra& alg, std::size_t dim_b) {
  const std::size_t n = alg.dim();
  Cochain alpha(2, n, dim_b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& v = alpha.value(i * n + j);
      for (const auto& [l, c] : alg.product(i, j))
        v.at(l, 0) = c;
    }
  return alpha;
}

ExtendedElement apply_linear(const Cochain& f, const ExtendedElement& x, const ArtinLocalAlgebra& base) {
  if (f.arity() != 1)
    throw InputError("apply_linear: arity-1 cochain required");
  const std::size_t n = f.dim_a(), b = f.dim_b();
  ExtendedElement out(n, b);
  Vector coeff(b);
  for (std::size_t a = 0; a < n; ++a) {
    bool any = false;
    for (std::size_t p = 0; p < b; ++p) {
      coeff[p] = x.at(a, p);
      any = any || !coeff[p].is_zero();
    }
    if (any)
      out += f.value(a).scaled(coeff, base);
  }
  return out;
}

ExtendedElement apply_bilinear(const Cochain& mu, const ExtendedElement& x, const ExtendedElement& y,
                               const ArtinLocalAlgebra& base) {
  if (mu.arity() != 2)
    throw InputError("apply_bilinear: arity-2 cochain required");
  const std::size_t n = mu.dim_a(), b = mu.dim_b();
  ExtendedElement out(n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      // coefficient of e_a (x) e_c in x (x)_B y is x_a * y_c in B
      Vector xa(b), yc(b);
      bool xa_zero = true, yc_zero = true;
      for (std::size_t p = 0; p < b; ++p) {
        xa[p] = x.at(a, p);
        yc[p] = y.at(c, p);
        xa_zero = xa_zero && xa[p].is_zero();
        yc_zero = yc_zero && yc[p].is_zero();
      }
      if (xa_zero || yc_zero)
        continue;
      out += mu.value(a * n + c).scaled(base.multiply(xa, yc), base);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Coderivation

Coderivation::Coderivation(std::size_t dim_a, std::size_t dim_b, std::size_t max_arity)
    : dim_a_(dim_a), dim_b_(dim_b), max_arity_(max_arity) {}

Coderivation Coderivation::single(const Cochain& component, std::size_t max_arity) {
  Coderivation c(component.dim_a(), component.dim_b(), max_arity);
  c.add(component);
  return c;
}

Cochain Coderivation::component(std::size_t arity) const {
  const auto it = components_.find(arity);
  return it == components_.end() ? Cochain(arity, dim_a_, dim_b_) : it->second;
}

bool Coderivation::is_zero() const {
  for (const auto& [a, c] : components_)
    if (!c.is_zero())
      return false;
  return true;
}

void Coderivation::add(const Cochain& c) {
  if (c.dim_a() != dim_a_ || c.dim_b() != dim_b_)
    throw InputError("coderivation component shape mismatch");
  if (c.arity() > max_arity_)
    throw TruncationError("component of arity " + std::to_string(c.arity()) + " exceeds truncation bound " +
                          std::to_string(max_arity_));
  auto [it, inserted] = components_.try_emplace(c.arity(), c);
  if (!inserted)
    it->second += c;
}

Coderivation& Coderivation::operator+=(const Coderivation& o) {
  for (const auto& [a, c] : o.components_)
    add(c);
  return *this;
}

Coderivation& Coderivation::operator-=(const Coderivation& o) {
  for (const auto& [a, c] : o.components_)
    add(Rational(-1) * c);
  return *this;
}

Coderivation& Coderivation::operator*=(const Rational& s) {
  for (auto& [a, c] : components_)
    c *= s;
  return *this;
}

bool operator==(const Coderivation& a, const Coderivation& b) {
  if (a.dim_a_ != b.dim_a_ || a.dim_b_ != b.dim_b_)
    return false;
  for (const auto& [ar, c] : a.components_)
    if (c != b.component(ar))
      return false;
  for (const auto& [ar, c] : b.components_)
    if (c != a.component(ar))
      return false;
  return true;
}

Coderivation bar_codifferential(const FiniteAlgebra& alg, std::size_t dim_b, std::size_t max_arity) {
  alg.require_associative();
  if (max_arity < 2)
    throw TruncationError("bar codifferential needs arity bound >= 2");
  return Coderivation::single(to_bar(product_cochain(alg, dim_b)), max_arity);
}

// ---------------------------------------------------------------------------
// Bracket

Cochain compose(const Cochain& f, const Cochain& g, const ArtinLocalAlgebra& base) {
  if (f.dim_a() != g.dim_a() || f.dim_b() != g.dim_b() || f.dim_b() != base.dim())
    throw InputError("compose: shape mismatch");
  const std::size_t n = f.dim_a(), b = f.dim_b();
  const std::size_t p = f.arity(), q = g.arity();
  Cochain out(p + q - 1, n, b);
  std::vector<std::size_t> outer(p);
  Vector coeff(b);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    const auto tuple = out.decode(t);
    ExtendedElement& acc = out.value(t);
    for (std::size_t i = 0; i < p; ++i) {
      const ExtendedElement& inner = g.at(std::span(tuple).subspan(i, q));
      if (inner.is_zero())
        continue;
      const bool negative = (i * (q - 1)) % 2 == 1;
      for (std::size_t k = 0; k < i; ++k)
        outer[k] = tuple[k];
      for (std::size_t k = i + 1; k < p; ++k)
        outer[k] = tuple[k + q - 1];
      for (std::size_t l = 0; l < n; ++l) {
        bool any = false;
        for (std::size_t r = 0; r < b; ++r) {
          coeff[r] = inner.at(l, r);
          any = any || !coeff[r].is_zero();
        }
        if (!any)
          continue;
        outer[i] = l;
        const ExtendedElement term = f.at(outer).scaled(coeff, base);
        acc.add_scaled(term, Rational(negative ? -1 : 1));
      }
    }
  }
  return out;
}

Cochain bracket(const Cochain& f, const Cochain& g, const ArtinLocalAlgebra& base, std::size_t max_arity) {
  const std::size_t arity = f.arity() + g.arity() - 1;
  if (arity > max_arity)
    throw TruncationError("bracket of arities " + std::to_string(f.arity()) + " and " + std::to_string(g.arity()) +
                          " exceeds truncation bound " + std::to_string(max_arity));
  const bool both_odd = (f.degree() % 2 != 0) && (g.degree() % 2 != 0);
  Cochain fg = compose(f, g, base);
  const Cochain gf = compose(g, f, base);
  if (both_odd)
    fg += gf;
  else
    fg -= gf;
  return fg;
}

Coderivation gerstenhaber_bracket(const Coderivation& p, const Coderivation& q, const ArtinLocalAlgebra& base) {
  if (p.dim_a() != q.dim_a() || p.dim_b() != q.dim_b())
    throw InputError("gerstenhaber_bracket: shape mismatch");
  const std::size_t bound = std::max(p.max_arity(), q.max_arity());
  Coderivation out(p.dim_a(), p.dim_b(), bound);
  for (const auto& [pa, pc] : p.components())
    for (const auto& [qa, qc] : q.components())
      out.add(bracket(pc, qc, base, bound));
  return out;
}

Cochain hochschild_differential(const Cochain& c, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                std::size_t max_arity) {
  alg.require_associative();
  if (c.arity() + 1 > max_arity)
    throw TruncationError("d of an arity-" + std::to_string(c.arity()) + " cochain exceeds truncation bound " +
                          std::to_string(max_arity));
  const Cochain q = to_bar(product_cochain(alg, c.dim_b()));
  return bracket(q, c, base, max_arity);
}

// ---------------------------------------------------------------------------
// Maurer-Cartan

FiniteAlgebra deformed_algebra(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, const Cochain& beta) {
  const std::size_t n = alg.dim(), b = base.dim(), d = n * b;
  if (beta.arity() != 2 || beta.dim_a() != n || beta.dim_b() != b)
    throw InputError("deformed_algebra: beta must be an arity-2 cochain over A_B");
  const Cochain mu = product_cochain(alg, b) + beta;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < b; ++p)
      names.push_back(alg.basis_names()[a] + "*" + base.basis_names()[p]);
  std::vector<Rational> table(d * d * d);
  // (e_a f_p)(e_c f_q) = mu(e_a, e_c) f_p f_q
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q) {
          Vector fpq(b);
          for (const auto& [r, y] : base.product(p, q))
            fpq[r] += y;
          const ExtendedElement v = mu.value(a * n + c).scaled(fpq, base);
          const std::size_t i = a * b + p, j = c * b + q;
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t s = 0; s < b; ++s)
              table[(i * d + j) * d + l * b + s] = v.at(l, s);
        }
  return FiniteAlgebra(std::move(names), std::move(table));
}

McReport mc_check(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  alg.require_associative();
  base.require_valid();
  if (beta.arity() != 2 || beta.dim_a() != alg.dim() || beta.dim_b() != base.dim())
    throw InputError("mc_check: beta must be an arity-2 cochain over A_B");
  if (!beta.in_ideal())
    throw InputError("mc_check: beta must take values in A_m");
  const Cochain b = to_bar(beta);
  McReport report;
  report.residual = hochschild_differential(b, alg, base, 3) + Rational(1, 2) * bracket(b, b, base, 3);
  report.is_mc = report.residual.is_zero();
  const bool associative = deformed_algebra(alg, base, beta).associativity().associative;
  if (associative != report.is_mc)
    throw std::logic_error("mc_check: Maurer-Cartan residual disagrees with associativity of alpha + beta");
  return report;
}

bool is_mc(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  return mc_check(beta, alg, base).is_mc;
}

// ---------------------------------------------------------------------------
// Hochschild cohomology over Q

const ArtinLocalAlgebra& ground_field() {
  static const ArtinLocalAlgebra k({"1"}, {Rational(1)}, 1);
  return k;
}

SparseMatrix hochschild_matrix(const FiniteAlgebra& alg, std::size_t n, std::size_t max_arity) {
  alg.require_associative();
  if (n == 0)
    throw InputError("Hochschild cochains start in arity 1");
  if (n + 1 > max_arity)
    throw TruncationError("C^" + std::to_string(n + 1) + " lies beyond truncation bound " +
                          std::to_string(max_arity));
  const std::size_t dim = alg.dim();
  const Cochain proto(n, dim, 1);
  const std::size_t src = proto.tuple_count() * dim;
  const std::size_t dst = Cochain(n + 1, dim, 1).tuple_count() * dim;
  SparseMatrix m(dst, src);
  for (std::size_t col = 0; col < src; ++col) {
    Vector unit(src);
    unit[col] = Rational(1);
    const Vector image = hochschild_differential(Cochain::from_coords(n, dim, 1, unit), alg, ground_field(),
                                                 max_arity)
                             .coords();
    for (std::size_t row = 0; row < dst; ++row)
      if (!image[row].is_zero())
        m.set(row, col, image[row]);
  }
  return m;
}

std::size_t hh_dimension(const FiniteAlgebra& alg, std::size_t n, std::size_t max_arity) {
  const SparseMatrix d_n = hochschild_matrix(alg, n, max_arity);
  const std::size_t cocycles = d_n.cols() - rank(d_n);
  const std::size_t boundaries = n >= 2 ? rank(hochschild_matrix(alg, n - 1, max_arity)) : 0;
  return cocycles - boundaries;
}

} // namespace trideform
