#include "trideform/algebra.hpp"

#include "trideform/errors.hpp"

#include <string>

namespace trideform {

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> basis_names, std::vector<Rational> table)
    : names_(std::move(basis_names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  if (table_.size() != n * n * n)
    throw InputError("structure constants: expected " + std::to_string(n * n * n) + " entries, got " +
                     std::to_string(table_.size()));
  sparse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (const auto& c = coeff(i, j, l); !c.is_zero())
          sparse_[i * n + j].push_back({l, c});

  // (e_i e_j) e_l - e_i (e_j e_l), lexicographic scan
  for (std::size_t i = 0; i < n && assoc_.associative; ++i)
    for (std::size_t j = 0; j < n && assoc_.associative; ++j)
      for (std::size_t l = 0; l < n && assoc_.associative; ++l) {
        Vector diff(n);
        for (const auto& [k, c] : product(i, j))
          for (const auto& [r, d] : product(k, l))
            diff[r] += c * d;
        for (const auto& [k, c] : product(j, l))
          for (const auto& [r, d] : product(i, k))
            diff[r] -= c * d;
        if (!is_zero(diff)) {
          assoc_.associative = false;
          assoc_.witness = std::array<std::size_t, 3>{i, j, l};
          assoc_.associator = std::move(diff);
        }
      }
}

const Rational& FiniteAlgebra::coeff(std::size_t i, std::size_t j, std::size_t l) const {
  const std::size_t n = dim();
  return table_.at((i * n + j) * n + l);
}

const std::vector<ProductTerm>& FiniteAlgebra::product(std::size_t i, std::size_t j) const {
  return sparse_.at(i * dim() + j);
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw InputError("FiniteAlgebra::multiply: dimension mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero())
        continue;
      const Rational ab = a[i] * b[j];
      for (const auto& [l, c] : product(i, j))
        out[l] += ab * c;
    }
  }
  return out;
}

void FiniteAlgebra::require_associative() const {
  if (!assoc_.associative) {
    const auto& w = *assoc_.witness;
    throw InputError("algebra is not associative: associator of (" + names_[w[0]] + ", " + names_[w[1]] + ", " +
                     names_[w[2]] + ") is nonzero");
  }
}

AssociativityReport check_associative(const FiniteAlgebra& alg) { return alg.associativity(); }

// ---------------------------------------------------------------------------
// ArtinLocalAlgebra

namespace {

ArtinDiagnosis fail(std::string why) {
  ArtinDiagnosis d;
  d.valid = false;
  d.failure = std::move(why);
  return d;
}

} // namespace

ArtinLocalAlgebra::ArtinLocalAlgebra(std::vector<std::string> basis_names, std::vector<Rational> table,
                                     std::size_t nilpotency)
    : alg_(std::move(basis_names), std::move(table)), nilpotency_(nilpotency) {
  const std::size_t b = alg_.dim();
  diag_ = [&]() -> ArtinDiagnosis {
    if (b == 0)
      return fail("base has dimension 0");
    for (std::size_t p = 0; p < b; ++p)
      for (std::size_t q = 0; q < b; ++q) {
        const Rational expect = p == q ? Rational(1) : Rational(0);
        if (alg_.coeff(0, p, q) != expect || alg_.coeff(p, 0, q) != expect)
          return fail("basis vector 0 is not a two-sided unit");
      }
    for (std::size_t p = 0; p < b; ++p)
      for (std::size_t q = 0; q < b; ++q)
        for (std::size_t r = 0; r < b; ++r)
          if (alg_.coeff(p, q, r) != alg_.coeff(q, p, r))
            return fail("not commutative: " + alg_.basis_names()[p] + "*" + alg_.basis_names()[q]);
    if (!alg_.associativity().associative)
      return fail("not associative");
    for (std::size_t p = 1; p < b; ++p)
      for (std::size_t q = 1; q < b; ++q)
        if (!alg_.coeff(p, q, 0).is_zero())
          return fail("indices >= 1 do not span an ideal: " + alg_.basis_names()[p] + "*" +
                      alg_.basis_names()[q] + " has a unit component");

    // m^1, m^2, ... until zero
    std::vector<Vector> gens;
    for (std::size_t p = 1; p < b; ++p) {
      Vector v(b);
      v[p] = Rational(1);
      gens.push_back(std::move(v));
    }
    powers_.clear();
    powers_.push_back({}); // m^0 placeholder, unused
    std::vector<Vector> current = row_echelon_basis(b, gens);
    std::size_t k = 1;
    while (!current.empty()) {
      if (k > b)
        return fail("maximal ideal is not nilpotent");
      powers_.push_back(current);
      std::vector<Vector> next;
      for (const auto& x : current)
        for (const auto& y : gens)
          next.push_back(alg_.multiply(x, y));
      current = row_echelon_basis(b, next);
      ++k;
    }
    powers_.push_back({});
    ArtinDiagnosis ok;
    ok.computed_nilpotency = k;
    if (k != nilpotency_) {
      ok.valid = false;
      ok.failure = "stored nilpotency " + std::to_string(nilpotency_) + " differs from computed " + std::to_string(k);
    }
    return ok;
  }();
}

Filtration::Filtration(const ArtinLocalAlgebra& base) : dim_(base.dim()) {
  base.require_valid();
  const std::size_t n = base.nilpotency();
  std::vector<Vector> whole;
  for (std::size_t p = 0; p < dim_; ++p) {
    whole.emplace_back(dim_);
    whole.back()[p] = Rational(1);
  }
  powers_.push_back(std::move(whole));
  for (std::size_t r = 1; r <= n; ++r)
    powers_.push_back(base.ideal_power(r));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Vector> span = powers_[r + 1];
    std::vector<Vector> chosen;
    std::size_t current = rank(dim_, span);
    for (const auto& v : powers_[r]) {
      span.push_back(v);
      const std::size_t next = rank(dim_, span);
      if (next > current) {
        chosen.push_back(v);
        current = next;
      } else {
        span.pop_back();
      }
    }
    layers_.push_back(std::move(chosen));
  }
}

Vector Filtration::reduce(const Vector& x, std::size_t r) const {
  if (r >= powers_.size())
    return x;
  Vector v = x;
  for (const auto& row : powers_[r]) {
    std::size_t pivot = 0;
    while (row[pivot].is_zero())
      ++pivot;
    if (v[pivot].is_zero())
      continue;
    const Rational factor = v[pivot] / row[pivot];
    for (std::size_t i = 0; i < dim_; ++i)
      v[i] -= factor * row[i];
  }
  return v;
}

Vector ArtinLocalAlgebra::unit() const {
  Vector u(dim());
  u[0] = Rational(1);
  return u;
}

const std::vector<Vector>& ArtinLocalAlgebra::ideal_power(std::size_t k) const {
  require_valid();
  if (k == 0 || k >= powers_.size())
    throw std::out_of_range("ideal_power: exponent " + std::to_string(k) + " out of range");
  return powers_[k];
}

std::size_t ArtinLocalAlgebra::order(const Vector& x) const {
  require_valid();
  std::size_t r = 0;
  for (std::size_t k = 1; k <= nilpotency_; ++k) {
    const auto& basis = powers_[k];
    auto extended = basis;
    extended.push_back(x);
    if (rank(dim(), extended) == basis.size())
      r = k;
    else
      break;
  }
  return r;
}

void ArtinLocalAlgebra::require_valid() const {
  if (!diag_.valid)
    throw InputError("invalid Artin base: " + diag_.failure);
}

ArtinDiagnosis validate_artin(const ArtinLocalAlgebra& base) { return base.diagnosis(); }

// ---------------------------------------------------------------------------
// ExtendedElement

ExtendedElement::ExtendedElement(std::size_t dim_a, std::size_t dim_b)
    : dim_a_(dim_a), dim_b_(dim_b), data_(dim_a * dim_b) {}

ExtendedElement ExtendedElement::basis(std::size_t dim_a, std::size_t dim_b, std::size_t a, std::size_t p) {
  ExtendedElement e(dim_a, dim_b);
  e.at(a, p) = Rational(1);
  return e;
}

ExtendedElement ExtendedElement::from_algebra(const Vector& a, std::size_t dim_b) {
  ExtendedElement e(a.size(), dim_b);
  for (std::size_t i = 0; i < a.size(); ++i)
    e.at(i, 0) = a[i];
  return e;
}

ExtendedElement ExtendedElement::from_coords(std::size_t dim_a, std::size_t dim_b, Vector coords) {
  if (coords.size() != dim_a * dim_b)
    throw InputError("ExtendedElement: coordinate length mismatch");
  ExtendedElement e;
  e.dim_a_ = dim_a;
  e.dim_b_ = dim_b;
  e.data_ = std::move(coords);
  return e;
}

bool ExtendedElement::is_zero() const { return trideform::is_zero(data_); }

bool ExtendedElement::in_ideal() const {
  for (std::size_t a = 0; a < dim_a_; ++a)
    if (!at(a, 0).is_zero())
      return false;
  return true;
}

Vector ExtendedElement::reduce() const {
  Vector v(dim_a_);
  for (std::size_t a = 0; a < dim_a_; ++a)
    v[a] = at(a, 0);
  return v;
}

ExtendedElement ExtendedElement::scaled(const Vector& b, const ArtinLocalAlgebra& base) const {
  ExtendedElement out(dim_a_, dim_b_);
  for (std::size_t q = 0; q < dim_b_; ++q) {
    if (b[q].is_zero())
      continue;
    for (std::size_t p = 0; p < dim_b_; ++p)
      for (const auto& [r, c] : base.product(p, q)) {
        const Rational f = b[q] * c;
        for (std::size_t a = 0; a < dim_a_; ++a)
          if (!at(a, p).is_zero())
            out.at(a, r) += at(a, p) * f;
      }
  }
  return out;
}

ExtendedElement& ExtendedElement::operator+=(const ExtendedElement& o) {
  if (o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("ExtendedElement: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

ExtendedElement& ExtendedElement::operator-=(const ExtendedElement& o) {
  if (o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("ExtendedElement: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

ExtendedElement& ExtendedElement::operator*=(const Rational& s) {
  for (auto& x : data_)
    x *= s;
  return *this;
}

void ExtendedElement::add_scaled(const ExtendedElement& o, const Rational& s) {
  if (o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("ExtendedElement: shape mismatch");
  if (s.is_zero())
    return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero())
      data_[i] += s * o.data_[i];
}

// ---------------------------------------------------------------------------

FiniteAlgebra extend_scalars(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  const std::size_t n = alg.dim();
  const std::size_t b = base.dim();
  const std::size_t d = n * b;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < b; ++p)
      names.push_back(alg.basis_names()[a] + "*" + base.basis_names()[p]);
  std::vector<Rational> table(d * d * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [l, x] : alg.product(a, c))
        for (std::size_t p = 0; p < b; ++p)
          for (std::size_t q = 0; q < b; ++q)
            for (const auto& [r, y] : base.product(p, q)) {
              const std::size_t i = a * b + p, j = c * b + q, k = l * b + r;
              table[(i * d + j) * d + k] += x * y;
            }
  return FiniteAlgebra(std::move(names), std::move(table));
}

FiniteAlgebra reduce_mod_ideal(const FiniteAlgebra& extended, std::size_t dim_a, const ArtinLocalAlgebra& base) {
  const std::size_t b = base.dim();
  if (extended.dim() != dim_a * b)
    throw InputError("reduce_mod_ideal: dimension mismatch");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < dim_a; ++a) {
    const auto& full = extended.basis_names()[a * b];
    names.push_back(full.substr(0, full.rfind('*')));
  }
  std::vector<Rational> table(dim_a * dim_a * dim_a);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t c = 0; c < dim_a; ++c)
      for (std::size_t l = 0; l < dim_a; ++l)
        table[(a * dim_a + c) * dim_a + l] = extended.coeff(a * b, c * b, l * b);
  return FiniteAlgebra(std::move(names), std::move(table));
}

} // namespace trideform
