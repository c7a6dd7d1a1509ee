#include "trideform/linalg.hpp"

#include "trideform/errors.hpp"

#include <algorithm>
#include <string>

namespace trideform {

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.rows_[i].emplace(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  SparseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw InputError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (!columns[c][r].is_zero())
        m.rows_[r].emplace(c, columns[c][r]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      if (!rows[r][c].is_zero())
        m.rows_[r].emplace(c, rows[r][c]);
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_)
    n += r.size();
  return n;
}

void SparseMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_)
    throw std::out_of_range("SparseMatrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_.size()) + "x" + std::to_string(cols_));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v.is_zero())
    rows_[r].erase(c);
  else
    rows_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  if (v.is_zero())
    return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero())
      rows_[r].erase(it);
  }
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw InputError("SparseMatrix::apply: dimension mismatch");
  Vector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r])
      if (!x[c].is_zero())
        y[r] += v * x[c];
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r])
      t.rows_[c].emplace(r, v);
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows())
    throw InputError("SparseMatrix product: dimension mismatch");
  SparseMatrix out(a.rows(), b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.rows_[r])
      for (const auto& [c, bv] : b.rows_[k])
        out.add(r, c, av * bv);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_)
    throw InputError("SparseMatrix sum: dimension mismatch");
  SparseMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.rows_[r])
      out.add(r, c, v);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_)
    throw InputError("SparseMatrix difference: dimension mismatch");
  SparseMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.rows_[r])
      out.add(r, c, -v);
  return out;
}

// ---------------------------------------------------------------------------
// Gauss-Jordan elimination on sparse rows

namespace {

using Row = SparseMatrix::Row;

void axpy(Row& target, const Rational& factor, const Row& source) {
  for (const auto& [c, v] : source) {
    auto [it, inserted] = target.try_emplace(c, factor * v);
    if (!inserted) {
      it->second += factor * v;
      if (it->second.is_zero())
        target.erase(it);
    }
  }
}

/// Incrementally built echelon basis. Every stored row has a distinct leading
/// column and is scaled so that entry is 1.
class Echelon {
public:
  /// Reduces `row` against the current pivots and, if anything survives, adds it.
  /// Returns true iff the row was independent.
  bool insert(Row row) {
    reduce(row);
    if (row.empty())
      return false;
    const std::size_t lead = row.begin()->first;
    const Rational scale = row.begin()->second.inverse();
    for (auto& [c, v] : row)
      v *= scale;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  /// Eliminates every pivot column from `row`.
  void reduce(Row& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      const auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rational factor = -it->second;
      axpy(row, factor, pivot->second);
      it = row.upper_bound(col);
    }
  }

  /// Back-substitution to reduced echelon form.
  void make_reduced() {
    for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
      const std::size_t col = p->first;
      for (auto& [other_col, other] : pivots_) {
        if (other_col >= col)
          break;
        const auto hit = other.find(col);
        if (hit != other.end()) {
          const Rational factor = -hit->second;
          axpy(other, factor, p->second);
        }
      }
    }
  }

  [[nodiscard]] const std::map<std::size_t, Row>& pivots() const { return pivots_; }

private:
  std::map<std::size_t, Row> pivots_;
};

Row to_row(const Vector& v) {
  Row r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      r.emplace(i, v[i]);
  return r;
}

} // namespace

std::optional<LinearSolution> solve_linear(const SparseMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows())
    throw InputError("solve_linear: rhs length " + std::to_string(rhs.size()) + " != rows " +
                     std::to_string(m.rows()));
  const std::size_t n = m.cols();
  Echelon ech;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Row row = m.row(r);
    if (!rhs[r].is_zero())
      row.emplace(n, rhs[r]);
    ech.insert(std::move(row));
  }
  if (ech.pivots().contains(n))
    return std::nullopt;
  ech.make_reduced();

  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (const auto& [col, row] : ech.pivots()) {
    is_pivot[col] = true;
    const auto rhs_it = row.find(n);
    if (rhs_it != row.end())
      sol.particular[col] = rhs_it->second;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(n);
    v[free] = Rational(1);
    for (const auto& [col, row] : ech.pivots()) {
      const auto it = row.find(free);
      if (it != row.end())
        v[col] = -it->second;
    }
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  return solve_linear(m, Vector(m.rows()))->kernel;
}

std::size_t rank(const SparseMatrix& m) {
  Echelon ech;
  for (std::size_t r = 0; r < m.rows(); ++r)
    ech.insert(m.row(r));
  return ech.pivots().size();
}

std::size_t rank(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return ambient_dim - quotient(ambient_dim, vectors).dimension;
}

Quotient quotient(std::size_t ambient_dim, const std::vector<Vector>& subspace_gens) {
  Echelon ech;
  for (const auto& g : subspace_gens) {
    if (g.size() != ambient_dim)
      throw InputError("quotient: generator length mismatch");
    ech.insert(to_row(g));
  }
  Quotient q;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!ech.pivots().contains(i))
      q.section.push_back(i);
  q.dimension = q.section.size();
  return q;
}

std::size_t quotient_dimension(std::size_t ambient_dim, const std::vector<Vector>& subspace_gens) {
  return quotient(ambient_dim, subspace_gens).dimension;
}

std::vector<Vector> row_echelon_basis(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Echelon ech;
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw InputError("row_echelon_basis: length mismatch");
    ech.insert(to_row(v));
  }
  ech.make_reduced();
  std::vector<Vector> out;
  for (const auto& [col, row] : ech.pivots()) {
    Vector v(ambient_dim);
    for (const auto& [c, x] : row)
      v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SpanSolver

SpanSolver::SpanSolver(std::size_t ambient_dim, const std::vector<SparseMatrix::Row>& generators)
    : ambient_dim_(ambient_dim), generator_count_(generators.size()) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Pivot cand{generators[g], {}};
    cand.combination.emplace(g, Rational(1));
    auto it = cand.row.begin();
    while (it != cand.row.end()) {
      if (it->first >= ambient_dim_)
        throw InputError("SpanSolver: generator index out of range");
      const auto hit = pivots_.find(it->first);
      if (hit == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rational factor = -it->second;
      axpy(cand.row, factor, hit->second.row);
      axpy(cand.combination, factor, hit->second.combination);
      it = cand.row.upper_bound(col);
    }
    if (cand.row.empty())
      continue;
    const std::size_t lead = cand.row.begin()->first;
    const Rational scale = cand.row.begin()->second.inverse();
    for (auto& [c, v] : cand.row)
      v *= scale;
    for (auto& [c, v] : cand.combination)
      v *= scale;
    pivots_.emplace(lead, std::move(cand));
  }
}

SpanSolver SpanSolver::from_columns(const SparseMatrix& m) {
  const SparseMatrix t = m.transpose();
  std::vector<SparseMatrix::Row> gens;
  gens.reserve(t.rows());
  for (std::size_t c = 0; c < t.rows(); ++c)
    gens.push_back(t.row(c));
  return SpanSolver(m.rows(), gens);
}

std::optional<Vector> SpanSolver::coefficients(const Vector& v) const {
  if (v.size() != ambient_dim_)
    throw InputError("SpanSolver: vector length mismatch");
  Row rest = to_row(v);
  Row combo;
  auto it = rest.begin();
  while (it != rest.end()) {
    const auto hit = pivots_.find(it->first);
    if (hit == pivots_.end())
      return std::nullopt;
    const std::size_t col = it->first;
    const Rational factor = it->second;
    axpy(rest, -factor, hit->second.row);
    axpy(combo, factor, hit->second.combination);
    it = rest.upper_bound(col);
  }
  Vector out(generator_count_);
  for (const auto& [g, c] : combo)
    out[g] = c;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw InputError("vector sum: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw InputError("vector difference: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] -= b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out)
    x *= s;
  return out;
}

} // namespace trideform
