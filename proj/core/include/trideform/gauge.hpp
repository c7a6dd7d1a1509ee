#pragma once

#include "trideform/hochschild.hpp"
#include "trideform/relations.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace trideform {

/// Matrix of the B-linear extension of an arity-1 cochain f: A -> A_B, acting
/// on A_B in coordinates a * dim(B) + p.
SparseMatrix linear_operator(const Cochain& f, const ArtinLocalAlgebra& base);

/// Element 1 + psi of the associative gauge group: a B-linear automorphism of
/// A_B with psi landing in A_m, stored as a matrix over Q.
class GaugeElement {
public:
  GaugeElement() = default;
  /// Validates shape, B-linearity and psi(A_B) in A_m; throws InputError otherwise.
  GaugeElement(SparseMatrix matrix, std::size_t dim_a, const ArtinLocalAlgebra& base);
  static GaugeElement identity(std::size_t dim_a, std::size_t dim_b);

  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] const SparseMatrix& matrix() const { return matrix_; }
  /// psi = phi - 1.
  [[nodiscard]] SparseMatrix psi() const;

  [[nodiscard]] ExtendedElement apply(const ExtendedElement& x) const;
  /// Finite geometric series in -psi (psi is nilpotent of order <= nilpotency).
  [[nodiscard]] GaugeElement inverse(const ArtinLocalAlgebra& base) const;
  /// (this * o)(x) = this(o(x)).
  [[nodiscard]] GaugeElement compose(const GaugeElement& o) const;

  friend bool operator==(const GaugeElement& a, const GaugeElement& b) = default;

private:
  struct Trusted {};
  GaugeElement(SparseMatrix matrix, std::size_t dim_a, std::size_t dim_b, Trusted);

  SparseMatrix matrix_;
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 1;
};

/// exp(f) = sum_{i < N} f^i / i! for f in Hom(A, A_m).
GaugeElement exp_gauge(const Cochain& f, const ArtinLocalAlgebra& base);
/// log(1 + psi) = sum_{i >= 1} (-1)^(i-1) psi^i / i, returned as an arity-1 cochain.
Cochain log_gauge(const GaugeElement& phi, const ArtinLocalAlgebra& base);

/// beta' = phi o (alpha + beta) o (phi^-1 (x) phi^-1) - alpha. beta must be MC
/// (ContractError otherwise).
Cochain gauge_act(const GaugeElement& phi, const Cochain& beta, const FiniteAlgebra& alg,
                  const ArtinLocalAlgebra& base);

/// Algebra automorphism 1 + psi of R_B, given by its values on generators, with
/// psi landing in R (x) m. Degree 0.
class RelGaugeElement {
public:
  RelGaugeElement() = default;
  RelGaugeElement(std::size_t dim_a, std::size_t dim_b, std::size_t word_bound);

  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] std::size_t word_bound() const { return word_bound_; }
  /// Non-identity generator values.
  [[nodiscard]] const std::map<BarWord, CobarSum>& values() const { return values_; }

  void set(const BarWord& generator, const CobarSum& value);
  [[nodiscard]] CobarSum on_generator(const BarWord& generator) const;
  [[nodiscard]] CobarSum apply(const CobarWord& w, const ArtinLocalAlgebra& base) const;
  [[nodiscard]] CobarSum apply(const CobarSum& x, const ArtinLocalAlgebra& base) const;

  friend bool operator==(const RelGaugeElement& a, const RelGaugeElement& b) = default;

private:
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 1;
  std::size_t word_bound_ = 0;
  std::map<BarWord, CobarSum> values_;
};

/// exp of a degree-0 derivation with values in R (x) m that does not raise polydegree.
RelGaugeElement exp_gauge(const Derivation& f, const ArtinLocalAlgebra& base);
/// Inverse of exp_gauge, as a degree-0 derivation.
Derivation log_gauge(const RelGaugeElement& phi, const ArtinLocalAlgebra& base);
/// delta' = phi (s + delta) phi^-1 - s on generators. delta must satisfy
/// (s + delta)^2 = 0 on the derivation's bound (ContractError otherwise).
Derivation gauge_act(const RelGaugeElement& phi, const Derivation& delta, const FiniteAlgebra& alg,
                     const ArtinLocalAlgebra& base);

enum class Verdict { equivalent, inequivalent, inconclusive };
std::string to_string(Verdict v);

struct GaugeEquivalence {
  Verdict verdict = Verdict::inconclusive;
  /// f with gauge_act(exp f, beta1) = beta2, replayed before being returned.
  std::optional<Cochain> generator;
  /// Order of m at which the solver stopped (0 when it ran to completion).
  std::size_t failed_order = 0;
  std::string reason;
};

/// Order-by-order search for phi with phi.(alpha + beta1) = alpha + beta2,
/// updating phi <- exp(xi) phi. Each order is a linear system over Q, so an
/// unsolvable order proves inequivalence. inconclusive only if replay fails.
GaugeEquivalence gauge_equivalent(const Cochain& beta1, const Cochain& beta2, const FiniteAlgebra& alg,
                                  const ArtinLocalAlgebra& base);

} // namespace trideform
