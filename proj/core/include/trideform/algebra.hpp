#pragma once

#include "trideform/linalg.hpp"
#include "trideform/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace trideform {

/// One nonzero structure constant: e_i * e_j contributes `coeff * e_index`.
struct ProductTerm {
  std::size_t index;
  Rational coeff;
};

struct AssociativityReport {
  bool associative = true;
  /// First basis triple (i, j, l), in lexicographic order, whose associator is nonzero.
  std::optional<std::array<std::size_t, 3>> witness;
  /// (e_i e_j) e_l - e_i (e_j e_l) for the witness triple.
  Vector associator;
};

/// Finite-dimensional (not necessarily unital) algebra over Q given by
/// structure constants: e_i * e_j = sum_l c[i][j][l] e_l.
///
/// The associator scan runs once at construction; an instance may hold a
/// non-associative table, which `check_associative` reports.
class FiniteAlgebra {
public:
  FiniteAlgebra() = default;
  /// `table` has dim^3 entries indexed (i * dim + j) * dim + l.
  FiniteAlgebra(std::vector<std::string> basis_names, std::vector<Rational> table);

  [[nodiscard]] std::size_t dim() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] const Rational& coeff(std::size_t i, std::size_t j, std::size_t l) const;
  [[nodiscard]] const std::vector<Rational>& table() const { return table_; }
  /// Sparse form of e_i * e_j.
  [[nodiscard]] const std::vector<ProductTerm>& product(std::size_t i, std::size_t j) const;
  [[nodiscard]] Vector multiply(const Vector& a, const Vector& b) const;
  [[nodiscard]] const AssociativityReport& associativity() const { return assoc_; }

  /// Throws InputError unless the product is associative.
  void require_associative() const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

private:
  std::vector<std::string> names_;
  std::vector<Rational> table_;
  std::vector<std::vector<ProductTerm>> sparse_;
  AssociativityReport assoc_;
};

AssociativityReport check_associative(const FiniteAlgebra& alg);

struct ArtinDiagnosis {
  bool valid = true;
  /// Empty when valid; otherwise names the failing axiom.
  std::string failure;
  /// Smallest N with m^N = 0, if m turned out to be nilpotent at all.
  std::optional<std::size_t> computed_nilpotency;
};

/// Commutative local Artin algebra (B, m) with B/m = Q. Basis index 0 is the
/// unit and indices >= 1 span the maximal ideal m.
class ArtinLocalAlgebra {
public:
  ArtinLocalAlgebra() = default;
  ArtinLocalAlgebra(std::vector<std::string> basis_names, std::vector<Rational> table,
                    std::size_t nilpotency);

  [[nodiscard]] std::size_t dim() const { return alg_.dim(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return alg_.basis_names(); }
  [[nodiscard]] const FiniteAlgebra& as_algebra() const { return alg_; }
  [[nodiscard]] std::size_t nilpotency() const { return nilpotency_; }
  [[nodiscard]] const std::vector<ProductTerm>& product(std::size_t p, std::size_t q) const {
    return alg_.product(p, q);
  }
  [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const { return alg_.multiply(x, y); }
  [[nodiscard]] Vector unit() const;
  [[nodiscard]] const ArtinDiagnosis& diagnosis() const { return diag_; }
  /// Echelon basis of m^k, for 1 <= k <= nilpotency (m^N is empty). Valid bases only.
  [[nodiscard]] const std::vector<Vector>& ideal_power(std::size_t k) const;
  /// Largest r with x in m^r (x in m assumed nonzero); nilpotency() for x == 0.
  [[nodiscard]] std::size_t order(const Vector& x) const;

  void require_valid() const;

  friend bool operator==(const ArtinLocalAlgebra& a, const ArtinLocalAlgebra& b) {
    return a.alg_ == b.alg_ && a.nilpotency_ == b.nilpotency_;
  }

private:
  FiniteAlgebra alg_;
  std::size_t nilpotency_ = 1;
  ArtinDiagnosis diag_;
  std::vector<std::vector<Vector>> powers_;
};

ArtinDiagnosis validate_artin(const ArtinLocalAlgebra& base);

/// The m-adic filtration B = m^0 > m^1 > ... > m^N = 0 with chosen complements.
class Filtration {
public:
  explicit Filtration(const ArtinLocalAlgebra& base);

  [[nodiscard]] std::size_t nilpotency() const { return layers_.size(); }
  /// Vectors of m^r whose classes form a basis of m^r / m^(r+1); r = 0 gives the unit.
  [[nodiscard]] const std::vector<Vector>& layer(std::size_t r) const { return layers_.at(r); }
  /// Normal form of x modulo m^r (zero iff x in m^r). Linear in x.
  [[nodiscard]] Vector reduce(const Vector& x, std::size_t r) const;

private:
  std::size_t dim_;
  std::vector<std::vector<Vector>> layers_;
  /// Reduced echelon bases of m^r, r = 0..N.
  std::vector<std::vector<Vector>> powers_;
};

/// Element of A_B = A (x) B stored as a dim(A) x dim(B) coefficient array.
class ExtendedElement {
public:
  ExtendedElement() = default;
  ExtendedElement(std::size_t dim_a, std::size_t dim_b);
  static ExtendedElement basis(std::size_t dim_a, std::size_t dim_b, std::size_t a, std::size_t p);
  /// e_a (x) 1 with e_a given as a vector over A.
  static ExtendedElement from_algebra(const Vector& a, std::size_t dim_b);

  [[nodiscard]] std::size_t dim_a() const { return dim_a_; }
  [[nodiscard]] std::size_t dim_b() const { return dim_b_; }
  [[nodiscard]] const Rational& at(std::size_t a, std::size_t p) const { return data_[a * dim_b_ + p]; }
  Rational& at(std::size_t a, std::size_t p) { return data_[a * dim_b_ + p]; }
  /// Flat coordinates, index a * dim_b + p.
  [[nodiscard]] const Vector& coords() const { return data_; }
  static ExtendedElement from_coords(std::size_t dim_a, std::size_t dim_b, Vector coords);

  [[nodiscard]] bool is_zero() const;
  /// True iff every coefficient at the unit of B vanishes, i.e. the element lies in A_m.
  [[nodiscard]] bool in_ideal() const;
  /// Image in A under B -> B/m = Q.
  [[nodiscard]] Vector reduce() const;
  /// Multiplies by a scalar from B.
  [[nodiscard]] ExtendedElement scaled(const Vector& b, const ArtinLocalAlgebra& base) const;

  ExtendedElement& operator+=(const ExtendedElement& o);
  ExtendedElement& operator-=(const ExtendedElement& o);
  ExtendedElement& operator*=(const Rational& s);
  void add_scaled(const ExtendedElement& o, const Rational& s);
  friend ExtendedElement operator+(ExtendedElement a, const ExtendedElement& b) { return a += b; }
  friend ExtendedElement operator-(ExtendedElement a, const ExtendedElement& b) { return a -= b; }
  friend ExtendedElement operator*(const Rational& s, ExtendedElement a) { return a *= s; }
  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) = default;

private:
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  Vector data_;
};

/// A_B as a Q-algebra of dimension dim(A) * dim(B) with the B-bilinear product
/// (a (x) b)(a' (x) b') = aa' (x) bb'. Basis index a * dim(B) + p.
FiniteAlgebra extend_scalars(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base);

/// Structure constants of A_B modulo m, i.e. the product of the classes of e_a (x) 1.
FiniteAlgebra reduce_mod_ideal(const FiniteAlgebra& extended, std::size_t dim_a, const ArtinLocalAlgebra& base);

} // namespace trideform
