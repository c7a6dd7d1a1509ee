#pragma once

#include "trideform/algebra.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace trideform {

/// Multilinear map A^(x)n -> A_B, stored densely: one ExtendedElement per
/// basis n-tuple, tuples ordered lexicographically.
///
/// A Cochain is used in two coordinate systems:
///  - product coordinates: the literal map A^(x)n -> A_B (deformations beta,
///    gauge generators f);
///  - bar coordinates: a component Hom(M^(x)n, M), M = shifted A, of a
///    coderivation of the bar coalgebra.
/// `to_bar` / `from_bar` convert between them.
class Cochain {
public:
  Cochain() = default;
  Cochain(std::size_t arity, std::size_t dim_a, std::size_t dim_b);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] std::size_t tuple_count() const { return values_.size(); }
  /// Degree in the Hochschild DG Lie algebra: arity - 1.
  [[nodiscard]] int degree() const { return static_cast<int>(arity_) - 1; }

  [[nodiscard]] std::size_t encode(std::span<const std::size_t> tuple) const;
  [[nodiscard]] std::vector<std::size_t> decode(std::size_t index) const;

  [[nodiscard]] const ExtendedElement& value(std::size_t index) const { return values_.at(index); }
  ExtendedElement& value(std::size_t index) { return values_.at(index); }
  [[nodiscard]] const ExtendedElement& at(std::span<const std::size_t> tuple) const { return value(encode(tuple)); }
  ExtendedElement& at(std::span<const std::size_t> tuple) { return value(encode(tuple)); }

  [[nodiscard]] bool is_zero() const;
  /// Every value lies in A_m (zero coefficient at the unit of B).
  [[nodiscard]] bool in_ideal() const;
  /// Flat coordinates: tuple-major, then a * dim_b + p.
  [[nodiscard]] Vector coords() const;
  static Cochain from_coords(std::size_t arity, std::size_t dim_a, std::size_t dim_b, const Vector& coords);

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rational& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

private:
  void check_shape(const Cochain& o) const;

  std::size_t arity_ = 0;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  std::vector<ExtendedElement> values_;
};

/// Sign relating product and bar coordinates in arity n: the Koszul sign of
/// applying n shifts to n elements of degree -1, (-1)^(n(n-1)/2).
int bar_sign(std::size_t arity);
Cochain to_bar(const Cochain& product_coords);
Cochain from_bar(const Cochain& bar_coords);

/// The multiplication alpha as an arity-2 cochain in product coordinates, values e_l (x) 1.
Cochain product_cochain(const FiniteAlgebra& alg, std::size_t dim_b);

/// B-linear extension of an arity-1 cochain, applied to an element of A_B.
ExtendedElement apply_linear(const Cochain& f, const ExtendedElement& x, const ArtinLocalAlgebra& base);
/// B-bilinear extension of an arity-2 cochain, applied to a pair of elements of A_B.
ExtendedElement apply_bilinear(const Cochain& mu, const ExtendedElement& x, const ExtendedElement& y,
                               const ArtinLocalAlgebra& base);

/// Coderivation of the bar coalgebra of A_B, recorded by its corestrictions
/// (components in bar coordinates, at most one per arity).
class Coderivation {
public:
  static constexpr std::size_t default_max_arity = 5;

  Coderivation() = default;
  Coderivation(std::size_t dim_a, std::size_t dim_b, std::size_t max_arity = default_max_arity);
  static Coderivation single(const Cochain& component, std::size_t max_arity = default_max_arity);

  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] std::size_t max_arity() const { return max_arity_; }
  [[nodiscard]] const std::map<std::size_t, Cochain>& components() const { return components_; }
  /// Component of the given arity, or a zero cochain.
  [[nodiscard]] Cochain component(std::size_t arity) const;
  [[nodiscard]] bool is_zero() const;

  /// Adds `c` to the component of its arity. Throws TruncationError past max_arity.
  void add(const Cochain& c);

  Coderivation& operator+=(const Coderivation& o);
  Coderivation& operator-=(const Coderivation& o);
  Coderivation& operator*=(const Rational& s);
  friend Coderivation operator+(Coderivation a, const Coderivation& b) { return a += b; }
  friend Coderivation operator-(Coderivation a, const Coderivation& b) { return a -= b; }
  friend Coderivation operator*(const Rational& s, Coderivation a) { return a *= s; }
  friend bool operator==(const Coderivation& a, const Coderivation& b);

private:
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 1;
  std::size_t max_arity_ = default_max_arity;
  std::map<std::size_t, Cochain> components_;
};

/// The codifferential Q of the bar construction: single arity-2 component
/// m1 (x) m2 -> -shift(alpha(unshift m1, unshift m2)).
Coderivation bar_codifferential(const FiniteAlgebra& alg, std::size_t dim_b = 1,
                                std::size_t max_arity = Coderivation::default_max_arity);

/// Corestriction of f^ o g^ for coderivations with single components f, g
/// (bar coordinates): sum_i (-1)^(i |g|) f(m_1..m_i, g(...), ...).
Cochain compose(const Cochain& f, const Cochain& g, const ArtinLocalAlgebra& base);

/// Graded commutator of two homogeneous components.
Cochain bracket(const Cochain& f, const Cochain& g, const ArtinLocalAlgebra& base,
                std::size_t max_arity = Coderivation::default_max_arity);

/// Graded commutator [p, q] of coderivations. Throws TruncationError if a pair
/// of components would produce an arity above the bound.
Coderivation gerstenhaber_bracket(const Coderivation& p, const Coderivation& q, const ArtinLocalAlgebra& base);

/// d(c) = [Q, c], with c read in bar coordinates.
Cochain hochschild_differential(const Cochain& c, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                std::size_t max_arity = Coderivation::default_max_arity);

struct McReport {
  bool is_mc = false;
  /// d(b) + 1/2 [b, b] in bar coordinates, b = to_bar(beta); arity 3.
  Cochain residual;
};

/// Maurer-Cartan check for beta in product coordinates (arity 2, values in A_m).
/// Cross-checks the result against associativity of alpha + beta on A_B.
McReport mc_check(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);
bool is_mc(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// (A_B, alpha + beta) as a Q-algebra, basis index a * dim(B) + p.
FiniteAlgebra deformed_algebra(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, const Cochain& beta);

/// Matrix of d : C^n -> C^(n+1) over Q in Cochain::coords() order.
SparseMatrix hochschild_matrix(const FiniteAlgebra& alg, std::size_t n,
                               std::size_t max_arity = Coderivation::default_max_arity);

/// dim HH^n(A, A) of the non-unital complex starting in arity 1.
std::size_t hh_dimension(const FiniteAlgebra& alg, std::size_t n,
                         std::size_t max_arity = Coderivation::default_max_arity);

/// The one-dimensional base Q itself (m = 0).
const ArtinLocalAlgebra& ground_field();

} // namespace trideform
