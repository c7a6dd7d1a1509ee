#include "trideform/gauge.hpp"

#include "trideform/errors.hpp"

#include <stdexcept>
#include <string>

namespace trideform {

namespace {

/// Matrix of multiplication by f_q on A_B.
SparseMatrix b_action(std::size_t dim_a, const ArtinLocalAlgebra& base, std::size_t q) {
  const std::size_t b = base.dim();
  SparseMatrix m(dim_a * b, dim_a * b);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t p = 0; p < b; ++p)
      for (const auto& [r, c] : base.product(q, p))
        m.add(a * b + r, a * b + p, c);
  return m;
}

SparseMatrix scaled(const SparseMatrix& m, const Rational& s) {
  SparseMatrix out(m.rows(), m.cols());
  if (s.is_zero())
    return out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      out.set(r, c, v * s);
  return out;
}

/// sum_{i=0}^{terms-1} coeff(i) x^i
template <class Coeff>
SparseMatrix power_series(const SparseMatrix& x, std::size_t terms, Coeff coeff) {
  const std::size_t n = x.rows();
  SparseMatrix sum(n, n);
  SparseMatrix power = SparseMatrix::identity(n);
  for (std::size_t i = 0; i < terms; ++i) {
    sum = sum + scaled(power, coeff(i));
    power = power * x;
    if (power.is_zero())
      break;
  }
  return sum;
}

Rational factorial(std::size_t i) {
  Rational f(1);
  for (std::size_t k = 2; k <= i; ++k)
    f *= Rational(static_cast<std::int64_t>(k));
  return f;
}

ExtendedElement column(const SparseMatrix& m, std::size_t col, std::size_t dim_a, std::size_t dim_b) {
  ExtendedElement out(dim_a, dim_b);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Rational v = m.at(r, col);
    if (!v.is_zero())
      out.at(r / dim_b, r % dim_b) = v;
  }
  return out;
}

void require_generator(const Cochain& f, const ArtinLocalAlgebra& base) {
  if (f.arity() != 1)
    throw InputError("gauge generator must have arity 1");
  if (f.dim_b() != base.dim())
    throw InputError("gauge generator has wrong coefficient ring");
  if (!f.in_ideal())
    throw InputError("gauge generator must take values in A (x) m");
}

} // namespace

SparseMatrix linear_operator(const Cochain& f, const ArtinLocalAlgebra& base) {
  if (f.arity() != 1)
    throw InputError("linear_operator: arity must be 1");
  const std::size_t n = f.dim_a(), b = base.dim();
  SparseMatrix m(n * b, n * b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < b; ++p) {
      const ExtendedElement img = apply_linear(f, ExtendedElement::basis(n, b, a, p), base);
      const Vector& c = img.coords();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero())
          m.set(i, a * b + p, c[i]);
    }
  return m;
}

// ---------------------------------------------------------------------------
// GaugeElement

GaugeElement::GaugeElement(SparseMatrix matrix, std::size_t dim_a, std::size_t dim_b, Trusted)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {}

GaugeElement::GaugeElement(SparseMatrix matrix, std::size_t dim_a, const ArtinLocalAlgebra& base)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(base.dim()) {
  const std::size_t n = dim_a_ * dim_b_;
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw InputError("gauge element must be a square matrix of size dim(A) * dim(B)");
  for (std::size_t q = 1; q < dim_b_; ++q) {
    const SparseMatrix s = b_action(dim_a_, base, q);
    if (!(matrix_ * s == s * matrix_))
      throw InputError("gauge element is not B-linear");
  }
  const SparseMatrix p = psi();
  for (std::size_t a = 0; a < dim_a_; ++a)
    if (!p.row(a * dim_b_).empty())
      throw InputError("gauge element is not of the form 1 + psi with psi landing in A_m");
}

GaugeElement GaugeElement::identity(std::size_t dim_a, std::size_t dim_b) {
  return {SparseMatrix::identity(dim_a * dim_b), dim_a, dim_b, Trusted{}};
}

SparseMatrix GaugeElement::psi() const { return matrix_ - SparseMatrix::identity(matrix_.rows()); }

ExtendedElement GaugeElement::apply(const ExtendedElement& x) const {
  if (x.dim_a() != dim_a_ || x.dim_b() != dim_b_)
    throw InputError("gauge element applied to an element of the wrong shape");
  return ExtendedElement::from_coords(dim_a_, dim_b_, matrix_.apply(x.coords()));
}

GaugeElement GaugeElement::inverse(const ArtinLocalAlgebra& base) const {
  const SparseMatrix minus_psi = scaled(psi(), Rational(-1));
  return {power_series(minus_psi, base.nilpotency(), [](std::size_t) { return Rational(1); }), dim_a_, dim_b_,
          Trusted{}};
}

GaugeElement GaugeElement::compose(const GaugeElement& o) const {
  if (o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("composing gauge elements of different shape");
  return {matrix_ * o.matrix_, dim_a_, dim_b_, Trusted{}};
}

GaugeElement exp_gauge(const Cochain& f, const ArtinLocalAlgebra& base) {
  require_generator(f, base);
  const SparseMatrix m = power_series(linear_operator(f, base), base.nilpotency(),
                                      [](std::size_t i) { return factorial(i).inverse(); });
  return GaugeElement(m, f.dim_a(), base);
}

Cochain log_gauge(const GaugeElement& phi, const ArtinLocalAlgebra& base) {
  if (phi.dim_b() != base.dim())
    throw InputError("log_gauge: base mismatch");
  const SparseMatrix psi = phi.psi();
  // sum_{i>=1} (-1)^(i-1) psi^i / i = psi * sum_{j>=0} (-1)^j psi^j / (j+1)
  const SparseMatrix tail = power_series(psi, base.nilpotency(), [](std::size_t j) {
    return Rational(j % 2 == 0 ? 1 : -1, static_cast<std::int64_t>(j + 1));
  });
  const SparseMatrix log = psi * tail;
  Cochain f(1, phi.dim_a(), phi.dim_b());
  for (std::size_t a = 0; a < phi.dim_a(); ++a)
    f.value(a) = column(log, a * phi.dim_b(), phi.dim_a(), phi.dim_b());
  return f;
}

Cochain gauge_act(const GaugeElement& phi, const Cochain& beta, const FiniteAlgebra& alg,
                  const ArtinLocalAlgebra& base) {
  if (phi.dim_a() != alg.dim() || phi.dim_b() != base.dim())
    throw InputError("gauge_act: gauge element shape does not match algebra and base");
  if (!is_mc(beta, alg, base))
    throw ContractError("gauge_act: beta is not a Maurer-Cartan element");
  const std::size_t n = alg.dim(), b = base.dim();
  const GaugeElement inv = phi.inverse(base);
  const Cochain alpha = product_cochain(alg, b);
  const Cochain mu = alpha + beta;
  std::vector<ExtendedElement> pulled;
  for (std::size_t a = 0; a < n; ++a)
    pulled.push_back(inv.apply(ExtendedElement::basis(n, b, a, 0)));
  Cochain out(2, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      out.value(a * n + c) =
          phi.apply(apply_bilinear(mu, pulled[a], pulled[c], base)) - alpha.value(a * n + c);
  return out;
}

// ---------------------------------------------------------------------------
// Relational gauge

RelGaugeElement::RelGaugeElement(std::size_t dim_a, std::size_t dim_b, std::size_t word_bound)
    : dim_a_(dim_a), dim_b_(dim_b), word_bound_(word_bound) {}

void RelGaugeElement::set(const BarWord& generator, const CobarSum& value) {
  if (generator.empty() || generator.size() > word_bound_)
    throw TruncationError("relational gauge element defined up to length " + std::to_string(word_bound_));
  if (value.dim_b() != dim_b_)
    throw InputError("relational gauge value has wrong coefficient ring");
  for (const auto& [w, c] : value.terms())
    if (w.degree() != generator_degree(generator))
      throw InputError("relational gauge element must preserve degree");
  const CobarSum identity = CobarSum::word(CobarWord{{generator}}, dim_b_);
  if (!(value - identity).in_ideal())
    throw InputError("relational gauge element is not 1 + psi with psi landing in R (x) m");
  if (value == identity)
    values_.erase(generator);
  else
    values_[generator] = value;
}

CobarSum RelGaugeElement::on_generator(const BarWord& generator) const {
  if (generator.size() > word_bound_)
    throw TruncationError("relational gauge element known only up to length " + std::to_string(word_bound_));
  const auto it = values_.find(generator);
  return it == values_.end() ? CobarSum::word(CobarWord{{generator}}, dim_b_) : it->second;
}

CobarSum RelGaugeElement::apply(const CobarWord& w, const ArtinLocalAlgebra& base) const {
  CobarSum out = CobarSum::word(CobarWord{}, dim_b_);
  for (const auto& block : w.blocks)
    out = out.times(on_generator(block), base);
  return out;
}

CobarSum RelGaugeElement::apply(const CobarSum& x, const ArtinLocalAlgebra& base) const {
  CobarSum out(dim_b_);
  for (const auto& [w, c] : x.terms())
    out.add_scaled(apply(w, base), c, base);
  return out;
}

namespace {

std::vector<BarWord> generators_up_to(std::size_t dim_a, std::size_t bound) {
  std::vector<BarWord> out;
  for (std::size_t k = 1; k <= bound; ++k)
    for (const auto& w : enumerate_words(dim_a, k, 1 - static_cast<int>(k)))
      if (w.blocks.size() == 1)
        out.push_back(w.blocks[0]);
  return out;
}

RelGaugeElement rel_inverse(const RelGaugeElement& phi, const ArtinLocalAlgebra& base) {
  return exp_gauge(Rational(-1) * log_gauge(phi, base), base);
}

} // namespace

RelGaugeElement exp_gauge(const Derivation& f, const ArtinLocalAlgebra& base) {
  if (f.degree() != 0)
    throw InputError("relational gauge generator must have degree 0");
  if (f.dim_b() != base.dim())
    throw InputError("relational gauge generator has wrong coefficient ring");
  if (!f.in_ideal())
    throw InputError("relational gauge generator must take values in R (x) m");
  if (!f.polydegree_nonincreasing())
    throw InputError("relational gauge generator must not raise polydegree");
  RelGaugeElement phi(f.dim_a(), f.dim_b(), f.word_bound());
  for (const auto& g : generators_up_to(f.dim_a(), f.word_bound())) {
    CobarSum term = CobarSum::word(CobarWord{{g}}, base.dim());
    CobarSum sum = term;
    for (std::size_t i = 1; i < base.nilpotency() && !term.is_zero(); ++i) {
      term = Rational(1, static_cast<std::int64_t>(i)) * f.apply(term, base);
      sum += term;
    }
    phi.set(g, sum);
  }
  return phi;
}

Derivation log_gauge(const RelGaugeElement& phi, const ArtinLocalAlgebra& base) {
  if (phi.dim_b() != base.dim())
    throw InputError("log_gauge: base mismatch");
  Derivation f(0, phi.dim_a(), phi.dim_b(), phi.word_bound());
  for (const auto& g : generators_up_to(phi.dim_a(), phi.word_bound())) {
    CobarSum term = CobarSum::word(CobarWord{{g}}, base.dim());
    CobarSum sum(base.dim());
    for (std::size_t i = 1; i < base.nilpotency(); ++i) {
      term = phi.apply(term, base) - term;
      if (term.is_zero())
        break;
      sum.add_scaled(term, Rational(i % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(i)));
    }
    f.set(g, sum);
  }
  return f;
}

Derivation gauge_act(const RelGaugeElement& phi, const Derivation& delta, const FiniteAlgebra& alg,
                     const ArtinLocalAlgebra& base) {
  if (phi.dim_a() != alg.dim() || phi.dim_b() != base.dim())
    throw InputError("gauge_act: gauge element shape does not match algebra and base");
  if (!mc_rel_check(delta, alg, base, delta.word_bound()).holds)
    throw ContractError("gauge_act: (s + delta)^2 != 0");
  const std::size_t bound = std::min(phi.word_bound(), delta.word_bound());
  const RelGaugeElement inv = rel_inverse(phi, base);
  const GeneratorMap s = cobar_generator_map(alg, base);
  const GeneratorMap d = delta.as_map();
  const GeneratorMap total = [&](const BarWord& g) { return s(g) + d(g); };
  Derivation out(1, alg.dim(), base.dim(), bound);
  for (const auto& g : generators_up_to(alg.dim(), bound)) {
    const CobarSum pulled = inv.on_generator(g);
    const CobarSum moved = apply_derivation(pulled, 1, total, base);
    out.set(g, phi.apply(moved, base) - s(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence solver

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::equivalent:
    return "equivalent";
  case Verdict::inequivalent:
    return "inequivalent";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

namespace {

/// Coordinates of a cochain modulo m^r.
Vector reduce_mod(const Cochain& c, const Filtration& filt, std::size_t r) {
  const std::size_t n = c.dim_a(), b = c.dim_b();
  Vector out;
  out.reserve(c.tuple_count() * n * b);
  for (std::size_t t = 0; t < c.tuple_count(); ++t)
    for (std::size_t l = 0; l < n; ++l) {
      Vector coeff(b);
      for (std::size_t p = 0; p < b; ++p)
        coeff[p] = c.value(t).at(l, p);
      const Vector red = filt.reduce(coeff, r);
      out.insert(out.end(), red.begin(), red.end());
    }
  return out;
}

/// phi o mu o (phi^-1 (x) phi^-1) on basis pairs.
Cochain conjugate(const GaugeElement& phi, const Cochain& mu, const ArtinLocalAlgebra& base) {
  const std::size_t n = mu.dim_a(), b = mu.dim_b();
  const GaugeElement inv = phi.inverse(base);
  std::vector<ExtendedElement> pulled;
  for (std::size_t a = 0; a < n; ++a)
    pulled.push_back(inv.apply(ExtendedElement::basis(n, b, a, 0)));
  Cochain out(2, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      out.value(a * n + c) = phi.apply(apply_bilinear(mu, pulled[a], pulled[c], base));
  return out;
}

/// Infinitesimal action: xi o mu - mu(xi, 1) - mu(1, xi).
Cochain infinitesimal(const Cochain& xi, const Cochain& mu, const ArtinLocalAlgebra& base) {
  const std::size_t n = mu.dim_a(), b = mu.dim_b();
  Cochain out(2, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      ExtendedElement v = apply_linear(xi, mu.value(a * n + c), base);
      v -= apply_bilinear(mu, xi.value(a), ExtendedElement::basis(n, b, c, 0), base);
      v -= apply_bilinear(mu, ExtendedElement::basis(n, b, a, 0), xi.value(c), base);
      out.value(a * n + c) = v;
    }
  return out;
}

} // namespace

// If phi0 solves the equation mod m^r, every solution mod m^(r+1) is
// exp(xi) phi0 with xi in Hom(A, A_m), and the condition on xi is linear:
// e + xi.mu2 = 0 mod m^(r+1), e = phi0.mu1 - mu2. So each order is an exact test.
GaugeEquivalence gauge_equivalent(const Cochain& beta1, const Cochain& beta2, const FiniteAlgebra& alg,
                                  const ArtinLocalAlgebra& base) {
  if (!is_mc(beta1, alg, base) || !is_mc(beta2, alg, base))
    throw ContractError("gauge_equivalent: both inputs must be Maurer-Cartan elements");
  const std::size_t n = alg.dim(), b = base.dim(), nil = base.nilpotency();
  const Filtration filt(base);
  const Cochain alpha = product_cochain(alg, b);
  const Cochain mu1 = alpha + beta1, mu2 = alpha + beta2;

  GaugeEquivalence result;
  GaugeElement phi = GaugeElement::identity(n, b);
  for (std::size_t r = 1; r < nil; ++r) {
    const Cochain err = conjugate(phi, mu1, base) - mu2;
    Vector rhs = reduce_mod(err, filt, r + 1);
    if (is_zero(rhs))
      continue;
    for (auto& x : rhs)
      x = -x;
    std::vector<Cochain> unknowns;
    std::vector<Vector> columns;
    for (std::size_t s = 1; s <= r; ++s)
      for (const auto& v : filt.layer(s))
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t l = 0; l < n; ++l) {
            Cochain xi(1, n, b);
            for (std::size_t p = 0; p < b; ++p)
              xi.value(a).at(l, p) = v[p];
            columns.push_back(reduce_mod(infinitesimal(xi, mu2, base), filt, r + 1));
            unknowns.push_back(std::move(xi));
          }
    const auto sol = solve_linear(SparseMatrix::from_columns(rhs.size(), columns), rhs);
    if (!sol) {
      result.verdict = Verdict::inequivalent;
      result.failed_order = r;
      result.reason = r == 1 ? "order-1 coboundary equation has no solution"
                             : "order-" + std::to_string(r) + " obstruction: no gauge lift exists";
      return result;
    }
    Cochain xi(1, n, b);
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      if (!sol->particular[i].is_zero())
        xi += sol->particular[i] * unknowns[i];
    phi = exp_gauge(xi, base).compose(phi);
  }

  Cochain f = log_gauge(phi, base);
  if (!(gauge_act(exp_gauge(f, base), beta1, alg, base) == beta2)) {
    result.reason = "solution failed replay";
    return result;
  }
  result.verdict = Verdict::equivalent;
  result.generator = std::move(f);
  return result;
}

} // namespace trideform
