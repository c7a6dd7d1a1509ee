#pragma once

#include "trideform/cobar.hpp"
#include "trideform/hochschild.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace trideform {

/// Derivation of the free algebra R_B = (cobar-of-bar of A) (x) B, recorded by
/// its values on generators up(m_1..m_n) with n <= word_bound. Generators
/// missing from the table map to zero.
class Derivation {
public:
  Derivation() = default;
  Derivation(int degree, std::size_t dim_a, std::size_t dim_b, std::size_t word_bound);

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] std::size_t word_bound() const { return word_bound_; }
  [[nodiscard]] const std::map<BarWord, CobarSum>& values() const { return values_; }

  /// Sets the value on a generator. Output words must have degree
  /// generator_degree(gen) + degree().
  void set(const BarWord& generator, const CobarSum& value);
  [[nodiscard]] CobarSum on_generator(const BarWord& generator) const;
  [[nodiscard]] GeneratorMap as_map() const;

  [[nodiscard]] CobarSum apply(const CobarWord& w, const ArtinLocalAlgebra& base) const;
  [[nodiscard]] CobarSum apply(const CobarSum& x, const ArtinLocalAlgebra& base) const;

  [[nodiscard]] bool is_zero() const;
  /// All coefficients lie in m.
  [[nodiscard]] bool in_ideal() const;
  /// No generator value has polydegree above the generator's length.
  [[nodiscard]] bool polydegree_nonincreasing() const;

  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  Derivation& operator*=(const Rational& s);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& s, Derivation a) { return a *= s; }
  friend bool operator==(const Derivation& a, const Derivation& b);

private:
  void check_compatible(const Derivation& o) const;

  int degree_ = 0;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 1;
  std::size_t word_bound_ = 0;
  std::map<BarWord, CobarSum> values_;
};

/// The cobar differential s (or that of alpha + beta) as an explicit derivation.
Derivation cobar_derivation(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, std::size_t word_bound,
                            const Cochain* beta = nullptr);

/// Graded commutator of derivations, evaluated on generators up to the smaller bound.
Derivation derivation_bracket(const Derivation& a, const Derivation& b, const ArtinLocalAlgebra& base);

/// d_rel(theta) = [s, theta].
Derivation relative_differential(const Derivation& theta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// The south-west perturbation induced by beta: on each generator the merge
/// formula with the adjacent product taken through beta alone.
Derivation delta_of_beta(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                         std::size_t word_bound);

struct McRelReport {
  bool holds = false;
  /// (s + delta)^2 per source degree, on polydegree <= bound.
  std::map<int, SparseMatrix> residual;
};

/// Checks (s + delta)^2 = 0 as matrices on polydegree <= word_bound.
McRelReport mc_rel_check(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                         std::size_t word_bound);

struct H0Result {
  std::size_t word_bound = 0;
  /// Q-dimension of the cokernel of (s + delta) into degree 0.
  std::size_t dimension = 0;
  /// Distinguished B-basis: the single-letter words up(e_a).
  std::vector<CobarWord> basis;
  /// Induced product on the B-basis in product coordinates:
  /// [up e_a][up e_c] = sum product(a, c)[l, p] f_p [up e_l].
  Cochain product;
  /// Rank of D plus dimension equals the ambient size; kept for reports.
  std::size_t relation_rank = 0;
  std::size_t ambient_dimension = 0;
};

/// H^0(R_B, s + delta) as a B-algebra on the single-letter basis.
H0Result h0_compute(const Derivation& delta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                    std::size_t word_bound);

/// Reduces a degree-0 element of R_B modulo the image of s + delta to the
/// distinguished basis; result in A_B coordinates.
ExtendedElement h0_reduce(const CobarSum& x, const Derivation& delta, const FiniteAlgebra& alg,
                          const ArtinLocalAlgebra& base, std::size_t word_bound);

/// Der(R) -> Coder(BA): composes generator values with p and reads the result
/// as a coderivation component (arity degree + 1).
Coderivation project_derivation(const Derivation& theta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                std::size_t max_arity = Coderivation::default_max_arity);

} // namespace trideform
