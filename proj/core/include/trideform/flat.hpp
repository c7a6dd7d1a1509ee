#pragma once

#include "trideform/gauge.hpp"
#include "trideform/relations.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trideform {

/// A B-algebra (carrier of Q-dimension carrier_dim) with a reduction onto A.
struct FlatDeformation {
  std::size_t carrier_dim = 0;
  /// One carrier endomorphism per basis element of B; entry 0 is the identity.
  std::vector<SparseMatrix> b_action;
  /// carrier_dim^3 structure constants, indexed (i * d + j) * d + l.
  std::vector<Rational> mul;
  /// dim(A) x carrier_dim matrix of the reduction map.
  SparseMatrix reduction;

  friend bool operator==(const FlatDeformation&, const FlatDeformation&) = default;
};

/// Throws InputError naming the first violated structural axiom: B-module,
/// associativity, B-bilinearity, reduction B-linear, multiplicative,
/// surjective, with kernel m times the carrier.
void validate_flat_structure(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

struct FlatnessReport {
  bool flat = false;
  std::string reason;
  /// Smallest-index lifts x_a of the basis of A (one carrier vector each).
  std::vector<Vector> lift;
  /// Q-rank of the B-span of the lifts.
  std::size_t span_rank = 0;
};

FlatnessReport flatness_check(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// A_B with the B-bilinear product mu (arity-2 cochain in product coordinates,
/// full product, not a perturbation), and reduction mod m.
FlatDeformation flat_from_product(const Cochain& mu, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);
/// (A_B, alpha + beta). beta must be MC (ContractError otherwise).
FlatDeformation functor_F(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);
/// H^0 of the deformed resolution on its single-letter basis.
FlatDeformation flat_from_h0(const H0Result& h0, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// The same deformation in new carrier coordinates y = g x (g invertible).
FlatDeformation change_carrier_basis(const FlatDeformation& t, const SparseMatrix& g);

struct FlatTransport {
  Cochain beta;
  /// T: A_B -> carrier, e_a (x) f_p -> f_p . x_a.
  SparseMatrix to_carrier;
  SparseMatrix from_carrier;
};

/// Transports the product along the lifted basis. Not flat: ContractError.
FlatTransport flat_transport(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);
Cochain flat_to_mc(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// Phi is a B-algebra isomorphism t1 -> t2 over the identity of A.
bool is_flat_isomorphism(const SparseMatrix& phi, const FlatDeformation& t1, const FlatDeformation& t2);

/// Gauge generator f with gauge_act(exp f, flat_to_mc(t1)) = flat_to_mc(t2),
/// read off from an isomorphism phi: t1 -> t2. InputError if phi is not one.
Cochain gauge_from_isomorphism(const SparseMatrix& phi, const FlatDeformation& t1, const FlatDeformation& t2,
                               const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

struct FlatEquivalence {
  Verdict verdict = Verdict::inconclusive;
  /// Carrier isomorphism t1 -> t2, verified with is_flat_isomorphism.
  std::optional<SparseMatrix> isomorphism;
  /// The gauge witness between the transported MC elements.
  std::optional<Cochain> generator;
  std::string reason;
};

FlatEquivalence flat_equivalent(const FlatDeformation& t1, const FlatDeformation& t2, const FiniteAlgebra& alg,
                                const ArtinLocalAlgebra& base);

} // namespace trideform
