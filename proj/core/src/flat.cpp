#include "trideform/flat.hpp"

#include "trideform/errors.hpp"

#include <string>

namespace trideform {

namespace {

FiniteAlgebra carrier_algebra(const FlatDeformation& t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.carrier_dim; ++i)
    names.push_back("c" + std::to_string(i));
  return {std::move(names), t.mul};
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Rational(1);
  return v;
}

Vector column_of(const SparseMatrix& m, std::size_t c) {
  Vector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    v[r] = m.at(r, c);
  return v;
}

std::optional<SparseMatrix> invert(const SparseMatrix& m) {
  if (m.rows() != m.cols() || rank(m) != m.rows())
    return std::nullopt;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m.rows(); ++i)
    cols.push_back(solve_linear(m, unit_vector(m.rows(), i))->particular);
  return SparseMatrix::from_columns(m.rows(), cols);
}

[[noreturn]] void invalid(const std::string& what) { throw InputError("flat deformation: " + what); }

} // namespace

void validate_flat_structure(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  const std::size_t d = t.carrier_dim, n = alg.dim(), b = base.dim();
  if (t.b_action.size() != b)
    invalid("expected one action matrix per basis element of B");
  for (const auto& m : t.b_action)
    if (m.rows() != d || m.cols() != d)
      invalid("action matrix has the wrong size");
  if (t.mul.size() != d * d * d)
    invalid("product table has the wrong size");
  if (t.reduction.rows() != n || t.reduction.cols() != d)
    invalid("reduction matrix must be dim(A) x carrier_dim");
  if (!(t.b_action[0] == SparseMatrix::identity(d)))
    invalid("the unit of B does not act as the identity");
  for (std::size_t p = 0; p < b; ++p)
    for (std::size_t q = 0; q < b; ++q) {
      SparseMatrix rhs(d, d);
      for (const auto& [r, c] : base.product(p, q))
        for (std::size_t i = 0; i < d; ++i)
          for (const auto& [j, v] : t.b_action[r].row(i))
            rhs.add(i, j, c * v);
      if (!(t.b_action[p] * t.b_action[q] == rhs))
        invalid("action of B is not multiplicative");
    }
  const FiniteAlgebra carrier = carrier_algebra(t);
  if (!carrier.associativity().associative)
    invalid("product is not associative");
  for (std::size_t p = 1; p < b; ++p)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
        const Vector mid = t.b_action[p].apply(carrier.multiply(ei, ej));
        if (carrier.multiply(t.b_action[p].apply(ei), ej) != mid || carrier.multiply(ei, t.b_action[p].apply(ej)) != mid)
          invalid("product is not B-bilinear");
      }
  for (std::size_t p = 1; p < b; ++p)
    if (!(t.reduction * t.b_action[p]).is_zero())
      invalid("reduction is not B-linear (m must act as zero on A)");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector lhs = t.reduction.apply(carrier.multiply(unit_vector(d, i), unit_vector(d, j)));
      const Vector rhs = alg.multiply(column_of(t.reduction, i), column_of(t.reduction, j));
      if (lhs != rhs)
        invalid("reduction is not multiplicative");
    }
  if (rank(t.reduction) != n)
    invalid("reduction is not surjective");
  std::vector<Vector> m_image;
  for (std::size_t p = 1; p < b; ++p)
    for (std::size_t i = 0; i < d; ++i)
      m_image.push_back(column_of(t.b_action[p], i));
  if (rank(d, m_image) != d - n)
    invalid("kernel of the reduction is not m times the carrier");
}

FlatnessReport flatness_check(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  validate_flat_structure(t, alg, base);
  const std::size_t d = t.carrier_dim, n = alg.dim(), b = base.dim();
  FlatnessReport report;
  for (std::size_t a = 0; a < n; ++a)
    report.lift.push_back(solve_linear(t.reduction, unit_vector(n, a))->particular);
  std::vector<Vector> span;
  for (const auto& x : report.lift)
    for (std::size_t p = 0; p < b; ++p)
      span.push_back(t.b_action[p].apply(x));
  report.span_rank = rank(d, span);
  if (report.span_rank != d) {
    report.reason = "lifted basis does not span the carrier over B";
  } else if (d != n * b) {
    report.reason = "carrier dimension " + std::to_string(d) + " differs from dim(A) * dim(B) = " +
                    std::to_string(n * b);
  } else {
    report.flat = true;
  }
  return report;
}

FlatDeformation flat_from_product(const Cochain& mu, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  const std::size_t n = alg.dim(), b = base.dim(), d = n * b;
  if (mu.arity() != 2 || mu.dim_a() != n || mu.dim_b() != b)
    throw InputError("flat_from_product: product cochain has the wrong shape");
  FlatDeformation t;
  t.carrier_dim = d;
  for (std::size_t q = 0; q < b; ++q) {
    SparseMatrix m(d, d);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t p = 0; p < b; ++p)
        for (const auto& [r, c] : base.product(q, p))
          m.add(a * b + r, a * b + p, c);
    t.b_action.push_back(std::move(m));
  }
  t.mul.assign(d * d * d, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const ExtendedElement& v = mu.value(a * n + c);
      for (std::size_t p = 0; p < b; ++p)
        for (std::size_t q = 0; q < b; ++q) {
          const std::size_t i = a * b + p, j = c * b + q;
          for (const auto& [pq, x] : base.product(p, q))
            for (std::size_t l = 0; l < n; ++l)
              for (std::size_t s = 0; s < b; ++s) {
                if (v.at(l, s).is_zero())
                  continue;
                for (const auto& [r, y] : base.product(s, pq))
                  t.mul[(i * d + j) * d + l * b + r] += v.at(l, s) * x * y;
              }
        }
    }
  t.reduction = SparseMatrix(n, d);
  for (std::size_t a = 0; a < n; ++a)
    t.reduction.set(a, a * b, Rational(1));
  return t;
}

FlatDeformation functor_F(const Cochain& beta, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  if (!is_mc(beta, alg, base))
    throw ContractError("functor_F: beta is not a Maurer-Cartan element");
  return flat_from_product(product_cochain(alg, base.dim()) + beta, alg, base);
}

FlatDeformation flat_from_h0(const H0Result& h0, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  return flat_from_product(h0.product, alg, base);
}

FlatDeformation change_carrier_basis(const FlatDeformation& t, const SparseMatrix& g) {
  const std::size_t d = t.carrier_dim;
  if (g.rows() != d || g.cols() != d)
    throw InputError("change_carrier_basis: matrix has the wrong size");
  const auto inv = invert(g);
  if (!inv)
    throw InputError("change_carrier_basis: matrix is not invertible");
  FlatDeformation out;
  out.carrier_dim = d;
  for (const auto& m : t.b_action)
    out.b_action.push_back(g * m * *inv);
  out.reduction = t.reduction * *inv;
  const FiniteAlgebra carrier = carrier_algebra(t);
  out.mul.assign(d * d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector w = g.apply(carrier.multiply(column_of(*inv, i), column_of(*inv, j)));
      for (std::size_t l = 0; l < d; ++l)
        out.mul[(i * d + j) * d + l] = w[l];
    }
  return out;
}

FlatTransport flat_transport(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  const FlatnessReport report = flatness_check(t, alg, base);
  if (!report.flat)
    throw ContractError("flat_to_mc: deformation is not flat (" + report.reason + ")");
  const std::size_t n = alg.dim(), b = base.dim(), d = t.carrier_dim;
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t p = 0; p < b; ++p)
      cols.push_back(t.b_action[p].apply(report.lift[a]));
  FlatTransport tr;
  tr.to_carrier = SparseMatrix::from_columns(d, cols);
  tr.from_carrier = *invert(tr.to_carrier);
  const FiniteAlgebra carrier = carrier_algebra(t);
  const Cochain alpha = product_cochain(alg, b);
  tr.beta = Cochain(2, n, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const Vector prod = tr.from_carrier.apply(carrier.multiply(report.lift[a], report.lift[c]));
      tr.beta.value(a * n + c) = ExtendedElement::from_coords(n, b, prod) - alpha.value(a * n + c);
    }
  return tr;
}

Cochain flat_to_mc(const FlatDeformation& t, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  return flat_transport(t, alg, base).beta;
}

bool is_flat_isomorphism(const SparseMatrix& phi, const FlatDeformation& t1, const FlatDeformation& t2) {
  const std::size_t d = t1.carrier_dim;
  if (t2.carrier_dim != d || phi.rows() != d || phi.cols() != d || rank(phi) != d)
    return false;
  if (t1.b_action.size() != t2.b_action.size())
    return false;
  for (std::size_t p = 0; p < t1.b_action.size(); ++p)
    if (!(phi * t1.b_action[p] == t2.b_action[p] * phi))
      return false;
  if (!(t2.reduction * phi == t1.reduction))
    return false;
  const FiniteAlgebra c1 = carrier_algebra(t1), c2 = carrier_algebra(t2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
      if (phi.apply(c1.multiply(ei, ej)) != c2.multiply(phi.apply(ei), phi.apply(ej)))
        return false;
    }
  return true;
}

Cochain gauge_from_isomorphism(const SparseMatrix& phi, const FlatDeformation& t1, const FlatDeformation& t2,
                               const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  if (!is_flat_isomorphism(phi, t1, t2))
    throw InputError("gauge_from_isomorphism: matrix is not an isomorphism of flat deformations");
  const FlatTransport tr1 = flat_transport(t1, alg, base);
  const FlatTransport tr2 = flat_transport(t2, alg, base);
  const GaugeElement g(tr2.from_carrier * phi * tr1.to_carrier, alg.dim(), base);
  return log_gauge(g, base);
}

FlatEquivalence flat_equivalent(const FlatDeformation& t1, const FlatDeformation& t2, const FiniteAlgebra& alg,
                                const ArtinLocalAlgebra& base) {
  const FlatTransport tr1 = flat_transport(t1, alg, base);
  const FlatTransport tr2 = flat_transport(t2, alg, base);
  const GaugeEquivalence g = gauge_equivalent(tr1.beta, tr2.beta, alg, base);
  FlatEquivalence out;
  out.verdict = g.verdict;
  out.reason = g.reason;
  if (g.verdict != Verdict::equivalent)
    return out;
  const SparseMatrix phi = tr2.to_carrier * exp_gauge(*g.generator, base).matrix() * tr1.from_carrier;
  if (!is_flat_isomorphism(phi, t1, t2)) {
    out.verdict = Verdict::inconclusive;
    out.reason = "composite isomorphism failed verification";
    return out;
  }
  out.isomorphism = phi;
  out.generator = g.generator;
  return out;
}

} // namespace trideform
