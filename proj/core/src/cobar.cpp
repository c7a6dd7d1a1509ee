#include "trideform/cobar.hpp"

#include "trideform/errors.hpp"

#include <algorithm>
#include <string>

namespace trideform {

// ---------------------------------------------------------------------------
// CobarWord

std::size_t CobarWord::polydegree() const {
  std::size_t n = 0;
  for (const auto& b : blocks)
    n += b.size();
  return n;
}

std::string CobarWord::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (const auto& block : blocks) {
    out += '(';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0)
        out += ',';
      out += block[i] < names.size() ? names[block[i]] : std::to_string(block[i]);
    }
    out += ')';
  }
  return out;
}

std::strong_ordering operator<=>(const CobarWord& a, const CobarWord& b) {
  if (auto c = a.polydegree() <=> b.polydegree(); c != 0)
    return c;
  const std::size_t k = std::min(a.blocks.size(), b.blocks.size());
  for (std::size_t i = 0; i < k; ++i)
    if (auto c = a.blocks[i].size() <=> b.blocks[i].size(); c != 0)
      return c;
  if (auto c = a.blocks.size() <=> b.blocks.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < k; ++i)
    if (auto c = a.blocks[i] <=> b.blocks[i]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

CobarWord operator*(const CobarWord& a, const CobarWord& b) {
  CobarWord w = a;
  w.blocks.insert(w.blocks.end(), b.blocks.begin(), b.blocks.end());
  return w;
}

// ---------------------------------------------------------------------------
// CobarSum

CobarSum CobarSum::word(const CobarWord& w, std::size_t dim_b, const Rational& coeff) {
  CobarSum s(dim_b);
  s.add(w, coeff);
  return s;
}

bool CobarSum::in_ideal() const {
  for (const auto& [w, c] : terms_)
    if (!c[0].is_zero())
      return false;
  return true;
}

std::size_t CobarSum::max_polydegree() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_)
    m = std::max(m, w.polydegree());
  return m;
}

void CobarSum::add(const CobarWord& w, const Vector& coeff) {
  if (coeff.size() != dim_b_)
    throw InputError("CobarSum: coefficient length mismatch");
  if (trideform::is_zero(coeff))
    return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    for (std::size_t p = 0; p < dim_b_; ++p)
      it->second[p] += coeff[p];
    if (trideform::is_zero(it->second))
      terms_.erase(it);
  }
}

void CobarSum::add(const CobarWord& w, const Rational& coeff) {
  Vector c(dim_b_);
  c[0] = coeff;
  add(w, c);
}

void CobarSum::add_scaled(const CobarSum& o, const Rational& s) {
  if (s.is_zero())
    return;
  for (const auto& [w, c] : o.terms_)
    add(w, s * c);
}

void CobarSum::add_scaled(const CobarSum& o, const Vector& coeff, const ArtinLocalAlgebra& base) {
  if (trideform::is_zero(coeff))
    return;
  for (const auto& [w, c] : o.terms_)
    add(w, base.multiply(coeff, c));
}

CobarSum& CobarSum::operator+=(const CobarSum& o) {
  for (const auto& [w, c] : o.terms_)
    add(w, c);
  return *this;
}

CobarSum& CobarSum::operator-=(const CobarSum& o) {
  for (const auto& [w, c] : o.terms_)
    add(w, Rational(-1) * c);
  return *this;
}

CobarSum& CobarSum::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_)
    for (auto& x : c)
      x *= s;
  return *this;
}

CobarSum CobarSum::times(const CobarSum& o, const ArtinLocalAlgebra& base) const {
  CobarSum out(dim_b_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_)
      out.add(w1 * w2, base.multiply(c1, c2));
  return out;
}

// ---------------------------------------------------------------------------
// Derivation extension

CobarSum apply_derivation(const CobarWord& w, int derivation_degree, const GeneratorMap& on_generator,
                          const ArtinLocalAlgebra& base) {
  CobarSum out(base.dim());
  int passed = 0;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    const CobarSum value = on_generator(w.blocks[i]);
    const bool negative = ((derivation_degree * passed) % 2) != 0;
    for (const auto& [v, c] : value.terms()) {
      CobarWord u;
      u.blocks.reserve(w.blocks.size() + v.blocks.size());
      u.blocks.insert(u.blocks.end(), w.blocks.begin(), w.blocks.begin() + static_cast<std::ptrdiff_t>(i));
      u.blocks.insert(u.blocks.end(), v.blocks.begin(), v.blocks.end());
      u.blocks.insert(u.blocks.end(), w.blocks.begin() + static_cast<std::ptrdiff_t>(i + 1), w.blocks.end());
      out.add(u, negative ? Rational(-1) * c : c);
    }
    passed += generator_degree(w.blocks[i]);
  }
  return out;
}

CobarSum apply_derivation(const CobarSum& x, int derivation_degree, const GeneratorMap& on_generator,
                          const ArtinLocalAlgebra& base) {
  CobarSum out(base.dim());
  for (const auto& [w, c] : x.terms())
    out.add_scaled(apply_derivation(w, derivation_degree, on_generator, base), c, base);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void compositions(std::size_t n, std::size_t parts, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (n == 0)
      out.push_back(current);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= n; ++first) {
    current.push_back(first);
    compositions(n - first, parts - 1, current, out);
    current.pop_back();
  }
}

void fill_words(std::size_t dim_a, std::size_t n, const std::vector<std::size_t>& composition,
                std::vector<CobarWord>& out) {
  std::vector<std::size_t> letters(n, 0);
  while (true) {
    CobarWord w;
    std::size_t pos = 0;
    for (std::size_t len : composition) {
      w.blocks.emplace_back(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                            letters.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
    out.push_back(std::move(w));
    std::size_t k = n;
    while (k > 0 && letters[k - 1] + 1 == dim_a)
      letters[--k] = 0;
    if (k == 0)
      return;
    ++letters[k - 1];
  }
}

} // namespace

std::vector<CobarWord> enumerate_words(std::size_t dim_a, std::size_t word_bound, int degree) {
  if (degree > 0)
    throw InputError("cobar words have degree <= 0");
  std::vector<CobarWord> out;
  if (dim_a == 0)
    return out;
  for (std::size_t n = 1; n <= word_bound; ++n) {
    const long k = static_cast<long>(n) + degree;
    if (k < 1)
      continue;
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> current;
    compositions(n, static_cast<std::size_t>(k), current, comps);
    for (const auto& comp : comps)
      fill_words(dim_a, n, comp, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CobarWord> enumerate_row(std::size_t dim_a, std::size_t polydegree) {
  std::vector<CobarWord> out;
  if (dim_a == 0)
    return out;
  for (std::size_t k = 1; k <= polydegree; ++k) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> current;
    compositions(polydegree, k, current, comps);
    for (const auto& comp : comps)
      fill_words(dim_a, polydegree, comp, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Differential components

CobarSum split_component(const BarWord& gen, std::size_t dim_b) {
  CobarSum out(dim_b);
  for (std::size_t j = 1; j < gen.size(); ++j) {
    CobarWord w;
    w.blocks.emplace_back(gen.begin(), gen.begin() + static_cast<std::ptrdiff_t>(j));
    w.blocks.emplace_back(gen.begin() + static_cast<std::ptrdiff_t>(j), gen.end());
    out.add(w, Rational(j % 2 == 0 ? 1 : -1));
  }
  return out;
}

CobarSum merge_component(const BarWord& gen, const Cochain& mu) {
  if (mu.arity() != 2)
    throw InputError("merge_component: arity-2 product required");
  const std::size_t n = mu.dim_a(), b = mu.dim_b();
  CobarSum out(b);
  for (std::size_t j = 1; j < gen.size(); ++j) {
    const Rational sign(j % 2 == 1 ? 1 : -1);
    const ExtendedElement& v = mu.value(gen[j - 1] * n + gen[j]);
    for (std::size_t l = 0; l < n; ++l) {
      Vector coeff(b);
      bool any = false;
      for (std::size_t p = 0; p < b; ++p) {
        coeff[p] = sign * v.at(l, p);
        any = any || !coeff[p].is_zero();
      }
      if (!any)
        continue;
      BarWord merged;
      merged.reserve(gen.size() - 1);
      merged.insert(merged.end(), gen.begin(), gen.begin() + static_cast<std::ptrdiff_t>(j - 1));
      merged.push_back(l);
      merged.insert(merged.end(), gen.begin() + static_cast<std::ptrdiff_t>(j + 1), gen.end());
      out.add(CobarWord{{merged}}, coeff);
    }
  }
  return out;
}

GeneratorMap cobar_generator_map(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base, const Cochain* beta) {
  alg.require_associative();
  Cochain mu = product_cochain(alg, base.dim());
  if (beta != nullptr)
    mu += *beta;
  const std::size_t b = base.dim();
  return [mu = std::move(mu), b](const BarWord& gen) {
    CobarSum out = split_component(gen, b);
    out += merge_component(gen, mu);
    return out;
  };
}

CobarSum cobar_differential(const CobarWord& w, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                            const Cochain* beta) {
  return apply_derivation(w, 1, cobar_generator_map(alg, base, beta), base);
}

Vector projection_p(const CobarWord& w, const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (w.degree() != 0 || w.blocks.empty())
    return Vector(n);
  Vector acc(n);
  acc[w.blocks[0][0]] = Rational(1);
  for (std::size_t i = 1; i < w.blocks.size(); ++i) {
    Vector letter(n);
    letter[w.blocks[i][0]] = Rational(1);
    acc = alg.multiply(acc, letter);
  }
  return acc;
}

ExtendedElement projection_p(const CobarSum& x, const FiniteAlgebra& alg, const ArtinLocalAlgebra& base) {
  ExtendedElement out(alg.dim(), base.dim());
  for (const auto& [w, c] : x.terms()) {
    const Vector v = projection_p(w, alg);
    for (std::size_t a = 0; a < alg.dim(); ++a)
      if (!v[a].is_zero())
        for (std::size_t p = 0; p < base.dim(); ++p)
          out.at(a, p) += v[a] * c[p];
  }
  return out;
}

CobarSum splitting_homotopy(const CobarWord& w) {
  CobarSum out(1);
  if (w.blocks.size() < 2 || w.blocks[0].size() != 1)
    return out;
  CobarWord merged;
  BarWord first = w.blocks[0];
  first.insert(first.end(), w.blocks[1].begin(), w.blocks[1].end());
  merged.blocks.push_back(std::move(first));
  merged.blocks.insert(merged.blocks.end(), w.blocks.begin() + 2, w.blocks.end());
  out.add(merged, Rational(-1));
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedComplex

TruncatedComplex::TruncatedComplex(std::size_t dim_a, const ArtinLocalAlgebra& base, std::size_t word_bound,
                                   const GeneratorMap& differential)
    : dim_a_(dim_a), dim_b_(base.dim()), word_bound_(word_bound) {
  if (word_bound == 0)
    throw InputError("word bound must be >= 1");
  for (int deg = min_degree(); deg <= 0; ++deg) {
    basis_[deg] = enumerate_words(dim_a_, word_bound_, deg);
    auto& lk = lookup_[deg];
    for (std::size_t i = 0; i < basis_[deg].size(); ++i)
      lk.emplace(basis_[deg][i], i);
  }
  for (int deg = min_degree(); deg < 0; ++deg) {
    const auto& src = basis_[deg];
    const auto& dst_lookup = lookup_[deg + 1];
    SparseMatrix m(basis_[deg + 1].size() * dim_b_, src.size() * dim_b_);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const CobarSum image = apply_derivation(src[i], 1, differential, base);
      for (const auto& [u, c] : image.terms()) {
        const auto hit = dst_lookup.find(u);
        if (hit == dst_lookup.end())
          throw TruncationError("differential leaves the polydegree <= " + std::to_string(word_bound_) +
                                " truncation (word of polydegree " + std::to_string(u.polydegree()) +
                                ", degree " + std::to_string(u.degree()) + ")");
        for (std::size_t p = 0; p < dim_b_; ++p) {
          // D(w f_p) = D(w) f_p
          for (std::size_t q = 0; q < dim_b_; ++q) {
            if (c[q].is_zero())
              continue;
            for (const auto& [r, y] : base.product(q, p))
              m.add(hit->second * dim_b_ + r, i * dim_b_ + p, c[q] * y);
          }
        }
      }
    }
    matrices_.emplace(deg, std::move(m));
  }
}

TruncatedComplex TruncatedComplex::undeformed(const FiniteAlgebra& alg, const ArtinLocalAlgebra& base,
                                              std::size_t word_bound, const Cochain* beta) {
  return TruncatedComplex(alg.dim(), base, word_bound, cobar_generator_map(alg, base, beta));
}

std::size_t TruncatedComplex::index(int degree, const CobarWord& w) const {
  const auto& lk = lookup_.at(degree);
  const auto it = lk.find(w);
  if (it == lk.end())
    throw TruncationError("word " + w.to_string({}) + " is not in the truncated basis");
  return it->second;
}

std::map<int, SparseMatrix> TruncatedComplex::square_residuals() const {
  std::map<int, SparseMatrix> out;
  for (int deg = min_degree(); deg + 1 < 0; ++deg)
    out.emplace(deg, matrices_.at(deg + 1) * matrices_.at(deg));
  return out;
}

bool TruncatedComplex::squares_to_zero() const {
  for (const auto& [deg, m] : square_residuals())
    if (!m.is_zero())
      return false;
  return true;
}

Vector TruncatedComplex::coordinates(int degree, const CobarSum& x) const {
  Vector v(basis_.at(degree).size() * dim_b_);
  for (const auto& [w, c] : x.terms()) {
    if (w.degree() != degree)
      throw InputError("coordinates: word of degree " + std::to_string(w.degree()) + " in degree " +
                       std::to_string(degree) + " request");
    const std::size_t i = index(degree, w);
    for (std::size_t p = 0; p < dim_b_; ++p)
      v[i * dim_b_ + p] += c[p];
  }
  return v;
}

HomotopyReport homotopy_check(std::size_t dim_a, std::size_t polydegree) {
  const auto words = enumerate_row(dim_a, polydegree);
  std::map<CobarWord, std::size_t> lookup;
  for (std::size_t i = 0; i < words.size(); ++i)
    lookup.emplace(words[i], i);
  const ArtinLocalAlgebra& k = ground_field();
  const GeneratorMap split = [](const BarWord& g) { return split_component(g, 1); };

  const std::size_t n = words.size();
  SparseMatrix d(n, n), h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CobarSum dw = apply_derivation(words[i], 1, split, k);
    for (const auto& [u, c] : dw.terms())
      d.add(lookup.at(u), i, c[0]);
    const CobarSum hw = splitting_homotopy(words[i]);
    for (const auto& [u, c] : hw.terms())
      h.add(lookup.at(u), i, c[0]);
  }
  HomotopyReport report;
  report.polydegree = polydegree;
  report.residual = h * d + d * h - SparseMatrix::identity(n);
  report.holds = report.residual.is_zero();
  return report;
}

} // namespace trideform
