#pragma once

#include "trideform/algebra.hpp"
#include "trideform/hochschild.hpp"
#include "trideform/linalg.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trideform {

/// m_1 (x) ... (x) m_n in M^(x)n, letters are basis indices of A.
using BarWord = std::vector<std::size_t>;

/// A monomial up(w_1) (x) ... (x) up(w_k) of the cobar-of-bar algebra.
struct CobarWord {
  std::vector<BarWord> blocks;

  /// Total letter count (polynomial degree).
  [[nodiscard]] std::size_t polydegree() const;
  /// Number of blocks.
  [[nodiscard]] std::size_t arrows() const { return blocks.size(); }
  /// Cohomological degree: arrows - polydegree (always <= 0).
  [[nodiscard]] int degree() const {
    return static_cast<int>(arrows()) - static_cast<int>(polydegree());
  }
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const CobarWord&, const CobarWord&) = default;
  /// Lexicographic on (polydegree, block lengths, letters).
  friend std::strong_ordering operator<=>(const CobarWord& a, const CobarWord& b);

  friend CobarWord operator*(const CobarWord& a, const CobarWord& b);
};

/// Degree of a single generator up(m_1 .. m_n): 1 - n.
inline int generator_degree(const BarWord& w) { return 1 - static_cast<int>(w.size()); }

/// Finite formal sum of cobar words with coefficients in B (vectors of length dim B).
class CobarSum {
public:
  CobarSum() = default;
  explicit CobarSum(std::size_t dim_b) : dim_b_(dim_b) {}
  static CobarSum word(const CobarWord& w, std::size_t dim_b, const Rational& coeff = Rational(1));

  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] const std::map<CobarWord, Vector>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool in_ideal() const;
  [[nodiscard]] std::size_t max_polydegree() const;

  void add(const CobarWord& w, const Vector& coeff);
  void add(const CobarWord& w, const Rational& coeff);
  void add_scaled(const CobarSum& o, const Rational& s);
  /// Adds coeff * o, coeff in B.
  void add_scaled(const CobarSum& o, const Vector& coeff, const ArtinLocalAlgebra& base);

  CobarSum& operator+=(const CobarSum& o);
  CobarSum& operator-=(const CobarSum& o);
  CobarSum& operator*=(const Rational& s);
  friend CobarSum operator+(CobarSum a, const CobarSum& b) { return a += b; }
  friend CobarSum operator-(CobarSum a, const CobarSum& b) { return a -= b; }
  friend CobarSum operator*(const Rational& s, CobarSum a) { return a *= s; }
  friend bool operator==(const CobarSum&, const CobarSum&) = default;

  /// Concatenation product in the free algebra R_B.
  [[nodiscard]] CobarSum times(const CobarSum& o, const ArtinLocalAlgebra& base) const;

private:
  std::size_t dim_b_ = 1;
  std::map<CobarWord, Vector> terms_;
};

/// Values of a derivation on generators up(m_1..m_n).
using GeneratorMap = std::function<CobarSum(const BarWord&)>;

/// Extends generator values to a word by the Leibniz rule: passing a generator
/// of degree g contributes (-1)^(derivation_degree * g).
CobarSum apply_derivation(const CobarWord& w, int derivation_degree, const GeneratorMap& on_generator,
                          const ArtinLocalAlgebra& base);
CobarSum apply_derivation(const CobarSum& x, int derivation_degree, const GeneratorMap& on_generator,
                          const ArtinLocalAlgebra& base);

/// All cobar words of the given degree with polydegree <= word_bound, ordered.
std::vector<CobarWord> enumerate_words(std::size_t dim_a, std::size_t word_bound, int degree);
/// All cobar words with exactly the given polydegree, every degree, ordered.
std::vector<CobarWord> enumerate_row(std::size_t dim_a, std::size_t polydegree);

/// d_s on a generator: sum_j (-1)^j up(m_1..m_j) (x) up(m_j+1..m_n).
CobarSum split_component(const BarWord& gen, std::size_t dim_b);
/// d_sw on a generator with the adjacent product taken through `mu`
/// (arity-2 cochain in product coordinates over A_B):
/// sum_j (-1)^(j-1) up(m_1 .. mu(m_j, m_j+1) .. m_n).
CobarSum merge_component(const BarWord& gen, const Cochain& mu);

/// The differential of the cobar-of-bar construction of (A_B, alpha + beta) on
/// a word (beta absent means beta = 0).
CobarSum cobar_differential(const CobarWord& w, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                            const Cochain* beta = nullptr);

/// Generator values of the undeformed differential s (or of the alpha+beta one).
GeneratorMap cobar_generator_map(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                 const Cochain* beta = nullptr);

/// The augmentation p: degree-0 words go to the product of their letters,
/// every other word to 0.
Vector projection_p(const CobarWord& w, const FiniteAlgebra& alg);
/// B-linear extension of p to a formal sum.
ExtendedElement projection_p(const CobarSum& x, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// Contraction of the polydegree rows: zero unless the first block is a single
/// letter, in which case that letter is prepended to the second block, with sign -1.
CobarSum splitting_homotopy(const CobarWord& w);

/// Polydegree-truncated complex: words of polydegree <= word_bound, with a
/// degree-one differential given on generators.
class TruncatedComplex {
public:
  TruncatedComplex(std::size_t dim_a, const ArtinLocalAlgebra& base, std::size_t word_bound,
                   const GeneratorMap& differential);
  static TruncatedComplex undeformed(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                     std::size_t word_bound, const Cochain* beta = nullptr);

  [[nodiscard]] std::size_t word_bound() const { return word_bound_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] int min_degree() const { return 1 - static_cast<int>(word_bound_); }
  [[nodiscard]] const std::vector<CobarWord>& basis(int degree) const { return basis_.at(degree); }
  [[nodiscard]] std::size_t index(int degree, const CobarWord& w) const;
  /// Matrix of the differential from `degree` to `degree + 1` over Q; column
  /// (word index) * dim_b + p.
  [[nodiscard]] const SparseMatrix& differential(int degree) const { return matrices_.at(degree); }
  /// d_(i+1) * d_i for every i; all zero iff the differential squares to zero.
  [[nodiscard]] std::map<int, SparseMatrix> square_residuals() const;
  [[nodiscard]] bool squares_to_zero() const;

  /// Coordinates of a formal sum in the given degree.
  [[nodiscard]] Vector coordinates(int degree, const CobarSum& x) const;

private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::size_t word_bound_;
  std::map<int, std::vector<CobarWord>> basis_;
  std::map<int, std::map<CobarWord, std::size_t>> lookup_;
  std::map<int, SparseMatrix> matrices_;
};

struct HomotopyReport {
  bool holds = false;
  std::size_t polydegree = 0;
  /// h d_s + d_s h - id on the row (all degrees), zero when `holds`.
  SparseMatrix residual;
};

/// Checks h d_s + d_s h = id on the polydegree row (over Q).
HomotopyReport homotopy_check(std::size_t dim_a, std::size_t polydegree);

} // namespace trideform
