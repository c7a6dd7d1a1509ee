#pragma once

#include "trideform/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace trideform {

using Vector = std::vector<Rational>;

/// Row-major sparse matrix over Q. Zero entries are never stored.
class SparseMatrix {
public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  [[nodiscard]] const Row& row(std::size_t r) const { return rows_.at(r); }

  [[nodiscard]] Vector apply(const Vector& x) const;
  [[nodiscard]] SparseMatrix transpose() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
  void check_index(std::size_t r, std::size_t c) const;

  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Solves m * x = rhs exactly. Returns nullopt when the system is inconsistent.
/// The particular solution sets every free variable to zero; the kernel basis is
/// the reduced-echelon one (one vector per free column, that column set to 1).
std::optional<LinearSolution> solve_linear(const SparseMatrix& m, const Vector& rhs);

std::vector<Vector> kernel_basis(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);
std::size_t rank(std::size_t ambient_dim, const std::vector<Vector>& vectors);

struct Quotient {
  std::size_t dimension = 0;
  /// Ambient coordinates whose unit vectors project to a basis of the quotient
  /// (the non-pivot columns of the reduced echelon form of the generators).
  std::vector<std::size_t> section;
};

Quotient quotient(std::size_t ambient_dim, const std::vector<Vector>& subspace_gens);
std::size_t quotient_dimension(std::size_t ambient_dim, const std::vector<Vector>& subspace_gens);

/// Reduced row echelon basis of span(vectors); pivots ascending.
std::vector<Vector> row_echelon_basis(std::size_t ambient_dim, const std::vector<Vector>& vectors);

/// Expresses vectors as combinations of a fixed generator list. The generators
/// are eliminated once; each query then costs one reduction.
class SpanSolver {
public:
  SpanSolver(std::size_t ambient_dim, const std::vector<SparseMatrix::Row>& generators);
  /// Generators are the columns of `m`.
  static SpanSolver from_columns(const SparseMatrix& m);

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
  [[nodiscard]] std::size_t generator_count() const { return generator_count_; }
  /// Coefficients c with sum_i c_i g_i = v, or nullopt if v is outside the span.
  [[nodiscard]] std::optional<Vector> coefficients(const Vector& v) const;

private:
  struct Pivot {
    SparseMatrix::Row row;
    SparseMatrix::Row combination;
  };
  std::size_t ambient_dim_;
  std::size_t generator_count_;
  std::map<std::size_t, Pivot> pivots_;
};

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

} // namespace trideform
