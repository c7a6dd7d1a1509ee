#pragma once

#include "trideform/gauge.hpp"
#include "trideform/relations.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace trideform {

using Rng = std::mt19937_64;

/// Named algebras: E1 (x.x = 0), E2 (x.x = y), E3 (t k[t]/t^4), K2 (two
/// orthogonal idempotents), U2 (upper triangular 2x2), D2 (k[t]/t^2, unital).
FiniteAlgebra catalog_algebra(std::string_view name);
std::vector<std::string> catalog_algebra_names();

/// Named bases: B2 = k[e]/e^2, B3 = k[e]/e^3, B11 = k[e,h]/(e,h)^2.
ArtinLocalAlgebra catalog_base(std::string_view name);
std::vector<std::string> catalog_base_names();

/// Invertible integer matrix with integer inverse (permuted LU with unit diagonals).
SparseMatrix random_invertible(std::size_t n, Rng& rng);

/// Structure constants in the basis given by the columns of g.
FiniteAlgebra change_of_basis(const FiniteAlgebra& alg, const SparseMatrix& g);

/// Associative algebra of dimension <= max_dim from a fixed list of families
/// (zero, truncated polynomial, idempotents, one-sided zero, matrices, sums)
/// in a random basis.
FiniteAlgebra random_associative_algebra(Rng& rng, std::size_t max_dim = 3);

/// Random arity-n cochain with integer coefficients in [-range, range];
/// m_only zeroes the unit column of B.
Cochain random_cochain(std::size_t arity, std::size_t dim_a, std::size_t dim_b, Rng& rng, bool m_only,
                       int range = 2);

/// Random Maurer-Cartan element: order-by-order lift of random cocycles, then a
/// random gauge transformation.
Cochain random_mc(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, Rng& rng);

/// Random derivation supported on generators of length <= support, with values
/// of polydegree <= the generator's length.
Derivation random_derivation(int degree, std::size_t dim_a, std::size_t dim_b, std::size_t word_bound,
                             std::size_t support, Rng& rng, bool m_only, int range = 2);

} // namespace trideform
