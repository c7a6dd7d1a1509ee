#include "trideform/linalg.hpp"
#include "trideform/sampling.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trideform;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(Rational::parse("3/6").to_string(), "1/2");
  EXPECT_EQ(Rational::parse("-4/2").to_string(), "-2");
  EXPECT_EQ(Rational::parse("0").to_string(), "0");
  EXPECT_EQ(Rational(7, -14).to_string(), "-1/2");
  EXPECT_TRUE(Rational::parse("5").is_integer());
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2/3/4"})
    EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
}

TEST(Rational, FieldAxiomsOnSamples) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), 1 + std::abs(d(rng))), b(d(rng), 1 + std::abs(d(rng))), c(d(rng), 1 + std::abs(d(rng)));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Rational(1));
    }
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(Rational, NoOverflow) {
  Rational x(1);
  for (int i = 0; i < 100; ++i)
    x *= Rational(1'000'000'007);
  for (int i = 0; i < 100; ++i)
    x /= Rational(1'000'000'007);
  EXPECT_EQ(x, Rational(1));
}

namespace {

SparseMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int density = 2) {
  std::uniform_int_distribution<int> v(-3, 3), keep(0, density);
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0)
        m.set(i, j, Rational(v(rng)));
  return m;
}

std::vector<std::vector<Rational>> dense(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i))
      out[i][j] = v;
  return out;
}

} // namespace

TEST(Linalg, RankMatchesDenseOracle) {
  std::mt19937 rng(2);
  for (int i = 0; i < 100; ++i) {
    const SparseMatrix m = random_matrix(1 + rng() % 7, 1 + rng() % 7, rng);
    EXPECT_EQ(rank(m), oracle::rank(dense(m)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Linalg, SolveAndKernel) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const SparseMatrix m = random_matrix(r, c, rng);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const auto& k : ker)
      EXPECT_TRUE(is_zero(m.apply(k)));
    Vector x(c);
    for (auto& e : x)
      e = Rational(static_cast<int>(rng() % 5) - 2);
    const Vector b = m.apply(x);
    const auto sol = solve_linear(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(sol->particular), b);
    EXPECT_EQ(sol->kernel.size(), ker.size());
  }
}

TEST(Linalg, InconsistentSystem) {
  SparseMatrix m(2, 1);
  m.set(0, 0, Rational(1));
  m.set(1, 0, Rational(1));
  EXPECT_FALSE(solve_linear(m, Vector{Rational(1), Rational(2)}).has_value());
}

TEST(Linalg, SpanSolverReconstructs) {
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    const SparseMatrix m = random_matrix(5, 4, rng, 1);
    const SpanSolver s = SpanSolver::from_columns(m);
    EXPECT_EQ(s.rank(), rank(m));
    Vector x(4);
    for (auto& e : x)
      e = Rational(static_cast<int>(rng() % 7) - 3);
    const auto coeffs = s.coefficients(m.apply(x));
    ASSERT_TRUE(coeffs.has_value());
    EXPECT_EQ(m.apply(*coeffs), m.apply(x));
  }
}

TEST(Linalg, QuotientSectionComplementsSubspace) {
  const std::vector<Vector> sub = {{Rational(1), Rational(1), Rational(0)}, {Rational(2), Rational(2), Rational(0)}};
  const Quotient q = quotient(3, sub);
  EXPECT_EQ(q.dimension, 2u);
  std::vector<Vector> all = sub;
  for (auto i : q.section) {
    Vector e(3);
    e[i] = Rational(1);
    all.push_back(e);
  }
  EXPECT_EQ(rank(3, all), 3u);
}

TEST(Linalg, RandomInvertibleHasIntegerInverse) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const SparseMatrix g = random_invertible(5, rng);
    EXPECT_EQ(rank(g), 5u);
    for (std::size_t c = 0; c < 5; ++c) {
      Vector e(5);
      e[c] = Rational(1);
      const auto sol = solve_linear(g, e);
      ASSERT_TRUE(sol);
      for (const auto& x : sol->particular)
        EXPECT_TRUE(x.is_integer());
    }
  }
}
