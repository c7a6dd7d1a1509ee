#include "trideform/relations.hpp"

#include "trideform/errors.hpp"

#include <stdexcept>
#include <string>

namespace trideform {

namespace {

/// All generators up(m_1..m_k), 1 <= k <= bound, ordered by length then letters.
std::vector<BarWord> all_generators(std::size_t dim_a, std::size_t bound) {
  std::vector<BarWord> out;
  for (std::size_t k = 1; k <= bound; ++k) {
    BarWord w(k, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = k;
      while (i > 0 && w[i - 1] + 1 == dim_a)
        w[--i] = 0;
      if (i == 0)
        break;
      ++w[i - 1];
    }
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Derivation

Derivation::Derivation(int degree, std::size_t dim_a, std::size_t dim_b, std::size_t word_bound)
    : degree_(degree), dim_a_(dim_a), dim_b_(dim_b), word_bound_(word_bound) {}

void Derivation::set(const BarWord& generator, const CobarSum& value) {
  if (generator.empty() || generator.size() > word_bound_)
    throw TruncationError("generator of length " + std::to_string(generator.size()) +
                          " outside derivation bound " + std::to_string(word_bound_));
  for (std::size_t l : generator)
    if (l >= dim_a_)
      throw InputError("generator letter out of range");
  if (value.dim_b() != dim_b_)
    throw InputError("derivation value has wrong coefficient ring");
  const int target = generator_degree(generator) + degree_;
  for (const auto& [w, c] : value.terms()) {
    if (w.degree() != target)
      throw InputError("derivation of degree " + std::to_string(degree_) + " sends a generator of degree " +
                       std::to_string(generator_degree(generator)) + " to a word of degree " +
                       std::to_string(w.degree()));
    for (const auto& block : w.blocks)
      for (std::size_t l : block)
        if (l >= dim_a_)
          throw InputError("derivation value letter out of range");
  }
  if (value.is_zero())
    values_.erase(generator);
  else
    values_[generator] = value;
}

CobarSum Derivation::on_generator(const BarWord& generator) const {
  if (generator.size() > word_bound_)
    throw TruncationError("derivation is only known on generators of length <= " + std::to_string(word_bound_));
  const auto it = values_.find(generator);
  return it == values_.end() ? CobarSum(dim_b_) : it->second;
}

GeneratorMap Derivation::as_map() const {
  return [self = *this](const BarWord& g) { return self.on_generator(g); };
}

CobarSum Derivation::apply(const CobarWord& w, const ArtinLocalAlgebra& base) const {
  return apply_derivation(w, degree_, [this](const BarWord& g) { return on_generator(g); }, base);
}

CobarSum Derivation::apply(const CobarSum& x, const ArtinLocalAlgebra& base) const {
  return apply_derivation(x, degree_, [this](const BarWord& g) { return on_generator(g); }, base);
}

bool Derivation::is_zero() const { return values_.empty(); }

bool Derivation::in_ideal() const {
  for (const auto& [g, v] : values_)
    if (!v.in_ideal())
      return false;
  return true;
}

bool Derivation::polydegree_nonincreasing() const {
  for (const auto& [g, v] : values_)
    if (v.max_polydegree() > g.size())
      return false;
  return true;
}

void Derivation::check_compatible(const Derivation& o) const {
  if (o.degree_ != degree_ || o.dim_a_ != dim_a_ || o.dim_b_ != dim_b_)
    throw InputError("derivations of different shape");
}

Derivation& Derivation::operator+=(const Derivation& o) {
  check_compatible(o);
  word_bound_ = std::min(word_bound_, o.word_bound_);
  for (const auto& [g, v] : o.values_)
    if (g.size() <= word_bound_)
      set(g, on_generator(g) + v);
  std::erase_if(values_, [&](const auto& kv) { return kv.first.size() > word_bound_; });
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  return *this += Rational(-1) * o;
}

Derivation& Derivation::operator*=(const Rational& s) {
  if (s.is_zero()) {
    values_.clear();
    return *this;
  }
  for (auto& [g, v] : values_)
    v *= s;
  return *this;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.degree_ == b.degree_ && a.dim_a_ == b.dim_a_ && a.dim_b_ == b.dim_b_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

Derivation cobar_derivation(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, std::size_t word_bound,
                            const Cochain* beta) {
  const GeneratorMap s = cobar_generator_map(alg, base, beta);
  Derivation d(1, alg.dim(), base.dim(), word_bound);
  for (const auto& g : all_generators(alg.dim(), word_bound))
    d.set(g, s(g));
  return d;
}

Derivation derivation_bracket(const Derivation& a, const Derivation& b, const ArtinLocalAlgebra& base) {
  if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b())
    throw InputError("derivation_bracket: shape mismatch");
  const std::size_t bound = std::min(a.word_bound(), b.word_bound());
  Derivation out(a.degree() + b.degree(), a.dim_a(), a.dim_b(), bound);
  const bool both_odd = (a.degree() % 2 != 0) && (b.degree() % 2 != 0);
  for (const auto& g : all_generators(a.dim_a(), bound)) {
    CobarSum v = a.apply(b.on_generator(g), base);
    const CobarSum w = b.apply(a.on_generator(g), base);
    if (both_odd)
      v += w;
    else
      v -= w;
    out.set(g, v);
  }
  return out;
}

Derivation relative_differential(const Derivation& theta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  return derivation_bracket(cobar_derivation(alg, base, theta.word_bound()), theta, base);
}

Derivation delta_of_beta(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                         std::size_t word_bound) {
  if (!is_mc(beta, alg, base))
    throw ContractError("delta_of_beta: beta is not a Maurer-Cartan element");
  Derivation d(1, alg.dim(), base.dim(), word_bound);
  for (const auto& g : all_generators(alg.dim(), word_bound))
    if (g.size() >= 2)
      d.set(g, merge_component(g, beta));
  return d;
}

namespace {

GeneratorMap perturbed_map(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                           std::size_t word_bound) {
  if (delta.degree() != 1)
    throw InputError("a deformation of the relations has degree 1");
  if (delta.dim_a() != alg.dim() || delta.dim_b() != base.dim())
    throw InputError("derivation shape does not match algebra and base");
  if (!delta.in_ideal())
    throw InputError("a deformation of the relations takes values in R (x) m");
  if (delta.word_bound() < word_bound)
    throw TruncationError("derivation known only up to length " + std::to_string(delta.word_bound()) +
                          ", complex needs " + std::to_string(word_bound));
  GeneratorMap s = cobar_generator_map(alg, base);
  GeneratorMap d = delta.as_map();
  return [s = std::move(s), d = std::move(d)](const BarWord& g) { return s(g) + d(g); };
}

/// Cokernel of (s + delta) into degree 0, reduced to the single-letter basis.
class H0Reducer {
public:
  H0Reducer(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
            std::size_t word_bound)
      : complex_(alg.dim(), base, word_bound, perturbed_map(delta, alg, base, word_bound)),
        dim_a_(alg.dim()),
        dim_b_(base.dim()),
        solver_(build_solver()) {}

  [[nodiscard]] const TruncatedComplex& complex() const { return complex_; }
  [[nodiscard]] std::size_t relation_rank() const { return relation_rank_; }
  [[nodiscard]] std::size_t ambient() const { return complex_.basis(0).size() * dim_b_; }
  [[nodiscard]] std::size_t spanning_rank() const { return solver_.rank(); }

  [[nodiscard]] ExtendedElement reduce(const CobarSum& x) const {
    const auto coeffs = solver_.coefficients(complex_.coordinates(0, x));
    if (!coeffs)
      throw std::logic_error("H0: single-letter classes do not span the cokernel");
    ExtendedElement out(dim_a_, dim_b_);
    const std::size_t offset = relation_columns_;
    for (std::size_t a = 0; a < dim_a_; ++a)
      for (std::size_t p = 0; p < dim_b_; ++p)
        out.at(a, p) = (*coeffs)[offset + a * dim_b_ + p];
    return out;
  }

private:
  SpanSolver build_solver() {
    const SparseMatrix& d = complex_.differential(-1);
    const SparseMatrix t = d.transpose();
    std::vector<SparseMatrix::Row> gens;
    for (std::size_t c = 0; c < t.rows(); ++c)
      gens.push_back(t.row(c));
    relation_columns_ = gens.size();
    relation_rank_ = SpanSolver(d.rows(), gens).rank();
    for (std::size_t a = 0; a < dim_a_; ++a) {
      const std::size_t w = complex_.index(0, CobarWord{{BarWord{a}}});
      for (std::size_t p = 0; p < dim_b_; ++p) {
        SparseMatrix::Row unit;
        unit.emplace(w * dim_b_ + p, Rational(1));
        gens.push_back(std::move(unit));
      }
    }
    return SpanSolver(d.rows(), gens);
  }

  TruncatedComplex complex_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::size_t relation_columns_ = 0;
  std::size_t relation_rank_ = 0;
  SpanSolver solver_;
};

} // namespace

McRelReport mc_rel_check(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                         std::size_t word_bound) {
  alg.require_associative();
  base.require_valid();
  const TruncatedComplex complex(alg.dim(), base, word_bound, perturbed_map(delta, alg, base, word_bound));
  McRelReport report;
  report.residual = complex.square_residuals();
  report.holds = true;
  for (const auto& [deg, m] : report.residual)
    report.holds = report.holds && m.is_zero();
  return report;
}

H0Result h0_compute(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                    std::size_t word_bound) {
  if (word_bound < 3)
    throw InputError("H0 computation needs word bound >= 3");
  if (!mc_rel_check(delta, alg, base, word_bound).holds)
    throw ContractError("h0_compute: (s + delta)^2 != 0");
  const H0Reducer reducer(delta, alg, base, word_bound);
  if (reducer.spanning_rank() != reducer.ambient())
    throw std::logic_error("H0: single-letter classes do not span the cokernel");

  const std::size_t n = alg.dim(), b = base.dim();
  H0Result result;
  result.word_bound = word_bound;
  result.ambient_dimension = reducer.ambient();
  result.relation_rank = reducer.relation_rank();
  result.dimension = result.ambient_dimension - result.relation_rank;
  for (std::size_t a = 0; a < n; ++a)
    result.basis.push_back(CobarWord{{BarWord{a}}});
  result.product = Cochain(2, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      result.product.value(a * n + c) =
          reducer.reduce(CobarSum::word(CobarWord{{BarWord{a}, BarWord{c}}}, b));
  return result;
}

ExtendedElement h0_reduce(const CobarSum& x, const Derivation& delta, const FiniteAlgebra& alg,
                          const ArtinLocalAlgebra& base, std::size_t word_bound) {
  return H0Reducer(delta, alg, base, word_bound).reduce(x);
}

Coderivation project_derivation(const Derivation& theta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                std::size_t max_arity) {
  if (theta.degree() < 0)
    throw InputError("project_derivation: negative degree derivations project to zero arity");
  const std::size_t arity = static_cast<std::size_t>(theta.degree()) + 1;
  if (arity > max_arity)
    throw TruncationError("projected component of arity " + std::to_string(arity) + " exceeds bound " +
                          std::to_string(max_arity));
  Cochain naive(arity, alg.dim(), base.dim());
  for (std::size_t t = 0; t < naive.tuple_count(); ++t)
    naive.value(t) = projection_p(theta.on_generator(naive.decode(t)), alg, base);
  // Koszul sign of moving the shift past a degree-d map
  const int sign = bar_sign(static_cast<std::size_t>(theta.degree()));
  return Coderivation::single(Rational(sign) * to_bar(naive), max_arity);
}

} // namespace trideform
