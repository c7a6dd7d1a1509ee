#include "trideform/sampling.hpp"

#include "trideform/errors.hpp"

#include <algorithm>
#include <numeric>

namespace trideform {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<std::string> letters(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < 6 ? names[i] : "e" + std::to_string(i));
  return out;
}

using Table = std::vector<Rational>;

Table empty_table(std::size_t n) { return Table(n * n * n, Rational(0)); }

void put(Table& t, std::size_t n, std::size_t i, std::size_t j, std::size_t l, const Rational& v = Rational(1)) {
  t[(i * n + j) * n + l] = v;
}

FiniteAlgebra zero_algebra(std::size_t n) { return {letters(n), empty_table(n)}; }

/// t k[t] / t^(n+1) on the basis t, ..., t^n.
FiniteAlgebra truncated_polynomial(std::size_t n) {
  Table t = empty_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j + 1 < n; ++j)
      put(t, n, i, j, i + j + 1);
  return {letters(n), t};
}

FiniteAlgebra idempotents(std::size_t n) {
  Table t = empty_table(n);
  for (std::size_t i = 0; i < n; ++i)
    put(t, n, i, i, i);
  return {letters(n), t};
}

FiniteAlgebra one_sided_zero(std::size_t n, bool left) {
  Table t = empty_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      put(t, n, i, j, left ? i : j);
  return {letters(n), t};
}

FiniteAlgebra dual_numbers() {
  Table t = empty_table(2);
  put(t, 2, 0, 0, 0);
  put(t, 2, 0, 1, 1);
  put(t, 2, 1, 0, 1);
  return {{"one", "t"}, t};
}

FiniteAlgebra upper_triangular() {
  // e11, e12, e22
  Table t = empty_table(3);
  put(t, 3, 0, 0, 0);
  put(t, 3, 0, 1, 1);
  put(t, 3, 1, 2, 1);
  put(t, 3, 2, 2, 2);
  return {{"e11", "e12", "e22"}, t};
}

FiniteAlgebra direct_sum(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  Table t = empty_table(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        put(t, d, i, j, l, a.coeff(i, j, l));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        put(t, d, n + i, n + j, n + l, b.coeff(i, j, l));
  return {letters(d), t};
}

FiniteAlgebra random_family(Rng& rng, std::size_t dim) {
  switch (uniform(rng, 0, dim >= 2 ? 6 : 4)) {
  case 0:
    return zero_algebra(dim);
  case 1:
    return truncated_polynomial(dim);
  case 2:
    return idempotents(dim);
  case 3:
    return one_sided_zero(dim, true);
  case 4:
    return one_sided_zero(dim, false);
  case 5:
    if (dim == 2)
      return dual_numbers();
    if (dim == 3)
      return upper_triangular();
    return truncated_polynomial(dim);
  default: {
    const auto left = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(dim) - 1));
    return direct_sum(random_family(rng, left), random_family(rng, dim - left));
  }
  }
}

Cochain reduce_cochain_mod(const Cochain& c, const Filtration& filt, std::size_t r) {
  Cochain out(c.arity(), c.dim_a(), c.dim_b());
  for (std::size_t t = 0; t < c.tuple_count(); ++t)
    for (std::size_t l = 0; l < c.dim_a(); ++l) {
      Vector coeff(c.dim_b());
      for (std::size_t p = 0; p < c.dim_b(); ++p)
        coeff[p] = c.value(t).at(l, p);
      const Vector red = filt.reduce(coeff, r);
      for (std::size_t p = 0; p < c.dim_b(); ++p)
        out.value(t).at(l, p) = red[p];
    }
  return out;
}

/// One attempt at lifting random cocycles order by order.
std::optional<Cochain> lift_mc(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, const Filtration& filt,
                               Rng& rng) {
  const std::size_t n = alg.dim(), b = base.dim();
  Cochain beta(2, n, b);
  for (std::size_t r = 1; r < base.nilpotency(); ++r) {
    std::vector<Cochain> unknowns;
    for (std::size_t t = 0; t < n * n; ++t)
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& v : filt.layer(r)) {
          Cochain chi(2, n, b);
          for (std::size_t p = 0; p < b; ++p)
            chi.value(t).at(l, p) = v[p];
          unknowns.push_back(std::move(chi));
        }
    std::vector<Vector> columns;
    for (const auto& chi : unknowns)
      columns.push_back(reduce_cochain_mod(hochschild_differential(to_bar(chi), alg, base), filt, r + 1).coords());
    Vector rhs = reduce_cochain_mod(mc_check(beta, alg, base).residual, filt, r + 1).coords();
    for (auto& x : rhs)
      x = -x;
    const auto sol = solve_linear(SparseMatrix::from_columns(rhs.size(), columns), rhs);
    if (!sol)
      return std::nullopt;
    Vector x = sol->particular;
    for (const auto& k : sol->kernel) {
      const Rational s(uniform(rng, -2, 2));
      for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += s * k[i];
    }
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      if (!x[i].is_zero())
        beta += x[i] * unknowns[i];
  }
  return beta;
}

} // namespace

FiniteAlgebra catalog_algebra(std::string_view name) {
  if (name == "E1")
    return zero_algebra(1);
  if (name == "E2")
    return truncated_polynomial(2);
  if (name == "E3")
    return truncated_polynomial(3);
  if (name == "K2")
    return idempotents(2);
  if (name == "U2")
    return upper_triangular();
  if (name == "D2")
    return dual_numbers();
  throw InputError("unknown algebra \"" + std::string(name) + "\"");
}

std::vector<std::string> catalog_algebra_names() { return {"E1", "E2", "E3", "K2", "U2", "D2"}; }

ArtinLocalAlgebra catalog_base(std::string_view name) {
  if (name == "B2") {
    Table t = empty_table(2);
    put(t, 2, 0, 0, 0);
    put(t, 2, 0, 1, 1);
    put(t, 2, 1, 0, 1);
    return {{"1", "e"}, t, 2};
  }
  if (name == "B3") {
    Table t = empty_table(3);
    put(t, 3, 0, 0, 0);
    put(t, 3, 0, 1, 1);
    put(t, 3, 1, 0, 1);
    put(t, 3, 0, 2, 2);
    put(t, 3, 2, 0, 2);
    put(t, 3, 1, 1, 2);
    return {{"1", "e", "e2"}, t, 3};
  }
  if (name == "B11") {
    Table t = empty_table(3);
    put(t, 3, 0, 0, 0);
    for (std::size_t p = 1; p < 3; ++p) {
      put(t, 3, 0, p, p);
      put(t, 3, p, 0, p);
    }
    return {{"1", "e", "h"}, t, 2};
  }
  throw InputError("unknown base \"" + std::string(name) + "\"");
}

std::vector<std::string> catalog_base_names() { return {"B2", "B3", "B11"}; }

SparseMatrix random_invertible(std::size_t n, Rng& rng) {
  SparseMatrix lower = SparseMatrix::identity(n), upper = SparseMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower.set(i, j, Rational(uniform(rng, -1, 1)));
      upper.set(j, i, Rational(uniform(rng, -1, 1)));
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SparseMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    p.set(i, perm[i], Rational(1));
  return p * lower * upper;
}

FiniteAlgebra change_of_basis(const FiniteAlgebra& alg, const SparseMatrix& g) {
  const std::size_t n = alg.dim();
  if (g.rows() != n || g.cols() != n)
    throw InputError("change_of_basis: matrix has the wrong size");
  std::vector<Vector> cols(n, Vector(n)), inv_cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cols[i][j] = g.at(j, i);
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = Rational(1);
    const auto sol = solve_linear(g, e);
    if (!sol || !sol->kernel.empty())
      throw InputError("change_of_basis: matrix is not invertible");
    inv_cols.push_back(sol->particular);
  }
  const SparseMatrix inv = SparseMatrix::from_columns(n, inv_cols);
  Table t = empty_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector w = inv.apply(alg.multiply(cols[i], cols[k]));
      for (std::size_t l = 0; l < n; ++l)
        put(t, n, i, k, l, w[l]);
    }
  return {alg.basis_names(), t};
}

FiniteAlgebra random_associative_algebra(Rng& rng, std::size_t max_dim) {
  if (max_dim == 0)
    throw InputError("random_associative_algebra: max_dim must be positive");
  const auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim)));
  const FiniteAlgebra base = random_family(rng, dim);
  return change_of_basis(base, random_invertible(dim, rng));
}

Cochain random_cochain(std::size_t arity, std::size_t dim_a, std::size_t dim_b, Rng& rng, bool m_only, int range) {
  Cochain c(arity, dim_a, dim_b);
  for (std::size_t t = 0; t < c.tuple_count(); ++t)
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t p = m_only ? 1 : 0; p < dim_b; ++p)
        if (uniform(rng, 0, 1) == 1)
          c.value(t).at(a, p) = Rational(uniform(rng, -range, range));
  return c;
}

Cochain random_mc(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, Rng& rng) {
  const Filtration filt(base);
  Cochain beta(2, alg.dim(), base.dim());
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (auto lifted = lift_mc(alg, base, filt, rng)) {
      beta = std::move(*lifted);
      break;
    }
  }
  const Cochain f = random_cochain(1, alg.dim(), base.dim(), rng, true, 1);
  beta = gauge_act(exp_gauge(f, base), beta, alg, base);
  if (!is_mc(beta, alg, base))
    throw std::logic_error("random_mc produced a non-MC element");
  return beta;
}

Derivation random_derivation(int degree, std::size_t dim_a, std::size_t dim_b, std::size_t word_bound,
                             std::size_t support, Rng& rng, bool m_only, int range) {
  Derivation d(degree, dim_a, dim_b, word_bound);
  for (std::size_t len = 1; len <= std::min(support, word_bound); ++len) {
    const int target = 1 - static_cast<int>(len) + degree;
    if (target > 0)
      continue;
    const auto words = enumerate_words(dim_a, len, target);
    if (words.empty())
      continue;
    for (const auto& gen : enumerate_words(dim_a, len, 1 - static_cast<int>(len))) {
      if (gen.blocks.size() != 1)
        continue;
      CobarSum value(dim_b);
      const int terms = uniform(rng, 0, 2);
      for (int k = 0; k < terms; ++k) {
        const auto& w = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words.size()) - 1))];
        Vector c(dim_b);
        for (std::size_t p = m_only ? 1 : 0; p < dim_b; ++p)
          c[p] = Rational(uniform(rng, -range, range));
        value.add(w, c);
      }
      d.set(gen.blocks[0], value);
    }
  }
  return d;
}

} // namespace trideform
