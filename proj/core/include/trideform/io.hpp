#pragma once

#include "trideform/cobar.hpp"
#include "trideform/flat.hpp"
#include "trideform/gauge.hpp"
#include "trideform/relations.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace trideform {

using json = nlohmann::json;

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
json load_json_file(const std::filesystem::path& path);

/// "p/q" or "p". Parsing also accepts JSON integers.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t expected_size);

/// Dense nested arrays of rational strings.
json dense_matrix_to_json(const SparseMatrix& m);
SparseMatrix dense_matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
/// {"rows", "cols", "entries": [[row, col, value], ...]}.
json triplets_to_json(const SparseMatrix& m);

/// {"dim", "basis", "mul"[i][j][l]}; "unital": true is rejected.
json algebra_to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const json& j);

/// Algebra format plus {"unit_index": 0, "nilpotency": N}. Not validated here.
json base_to_json(const ArtinLocalAlgebra& base);
ArtinLocalAlgebra base_from_json(const json& j);

/// {"arity", "values": [{"in": [...], "out": dim(A) x dim(B) matrix}]}; zero tuples omitted.
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, std::size_t dim_a, std::size_t dim_b);

json word_to_json(const CobarWord& w);
CobarWord word_from_json(const json& j, std::size_t dim_a);
json cobar_sum_to_json(const CobarSum& x);
CobarSum cobar_sum_from_json(const json& j, std::size_t dim_a, std::size_t dim_b);

/// {"degree", "word_bound", "values": [{"generator": [[letters]], "out": [{"word", "coeff"}]}]}.
json derivation_to_json(const Derivation& d);
/// The bound is the largest of min_bound, the file's "word_bound" and the
/// longest generator listed.
Derivation derivation_from_json(const json& j, std::size_t dim_a, std::size_t dim_b, std::size_t min_bound = 0);

/// {"carrier_dim", "b_action", "mul", "reduction"}.
json flat_to_json(const FlatDeformation& t);
FlatDeformation flat_from_json(const json& j, std::size_t dim_a, std::size_t dim_b);

json complex_to_json(const TruncatedComplex& c);
json h0_to_json(const H0Result& h);
json verdict_to_json(Verdict v, const json& witness);

} // namespace trideform
