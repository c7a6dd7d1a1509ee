#include "trideform/errors.hpp"
#include "trideform/io.hpp"
#include "trideform/sampling.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace trideform;

namespace {

std::vector<Rational> random_table(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rational> t(n * n * n);
  for (auto& x : t)
    x = rng() % 3 == 0 ? Rational(static_cast<int>(rng() % 3) - 1) : Rational(0);
  return t;
}

ArtinLocalAlgebra make_base(std::vector<Rational> t, std::size_t n, std::size_t nil) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("f" + std::to_string(i));
  return {names, std::move(t), nil};
}

} // namespace

TEST(Algebra, CatalogIsAssociative) {
  for (const auto& name : catalog_algebra_names()) {
    const FiniteAlgebra a = catalog_algebra(name);
    EXPECT_TRUE(a.associativity().associative) << name;
    EXPECT_TRUE(oracle::associative(a.table(), a.dim())) << name;
  }
}

TEST(Algebra, AssociativityAgreesWithBruteForce) {
  Rng rng(11);
  int non_assoc = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const FiniteAlgebra a(std::vector<std::string>(n, "e"), random_table(n, rng));
    const bool brute = oracle::associative(a.table(), n);
    EXPECT_EQ(check_associative(a).associative, brute);
    non_assoc += !brute;
  }
  EXPECT_GT(non_assoc, 50);
}

TEST(Algebra, RandomFamiliesAreAssociative) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const FiniteAlgebra a = random_associative_algebra(rng, 3);
    EXPECT_LE(a.dim(), 3u);
    EXPECT_TRUE(oracle::associative(a.table(), a.dim()));
  }
}

TEST(Algebra, NonAssociativeWitness) {
  std::vector<Rational> t(8);
  t[(0 * 2 + 0) * 2 + 1] = 1; // x x = y
  t[(0 * 2 + 1) * 2 + 0] = 1; // x y = x
  const FiniteAlgebra a({"x", "y"}, t);
  const auto r = check_associative(a);
  ASSERT_FALSE(r.associative);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_THROW(a.require_associative(), InputError);
}

TEST(Algebra, MultiplyIsBilinear) {
  const FiniteAlgebra e2 = catalog_algebra("E2");
  const Vector x = {Rational(2), Rational(5)};
  EXPECT_EQ(e2.multiply(x, x), (Vector{Rational(0), Rational(4)}));
}

TEST(Base, CatalogIsValid) {
  for (const auto& name : catalog_base_names()) {
    const ArtinLocalAlgebra b = catalog_base(name);
    EXPECT_TRUE(b.diagnosis().valid) << name << ": " << b.diagnosis().failure;
  }
  EXPECT_EQ(catalog_base("B3").nilpotency(), 3u);
  EXPECT_EQ(catalog_base("B11").dim(), 3u);
}

TEST(Base, RejectsInvalid) {
  // e^2 = 1: not local
  std::vector<Rational> t = {1, 0, 0, 1, 0, 1, 1, 0};
  EXPECT_FALSE(make_base(t, 2, 2).diagnosis().valid);
  EXPECT_THROW(make_base(t, 2, 2).require_valid(), InputError);
  // unit not at index 0
  t = {0, 0, 1, 0, 1, 0, 0, 1};
  EXPECT_FALSE(make_base(t, 2, 2).diagnosis().valid);
  // wrong stored nilpotency
  t = {1, 0, 0, 1, 0, 1, 0, 0};
  EXPECT_TRUE(make_base(t, 2, 2).diagnosis().valid);
  const auto wrong = make_base(t, 2, 3);
  EXPECT_FALSE(wrong.diagnosis().valid);
  EXPECT_EQ(wrong.diagnosis().computed_nilpotency, std::optional<std::size_t>(2));
  // non-commutative: k<1, e, h> with e h = e2, h e = 0
  std::vector<Rational> nc(4 * 4 * 4);
  auto set = [&](std::size_t i, std::size_t j, std::size_t l) { nc[(i * 4 + j) * 4 + l] = 1; };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i);
    if (i != 0)
      set(i, 0, i);
  }
  set(1, 2, 3);
  EXPECT_FALSE(make_base(nc, 4, 3).diagnosis().valid);
}

TEST(Base, FiltrationLayersSplitTheIdeal) {
  for (const auto& name : catalog_base_names()) {
    const ArtinLocalAlgebra b = catalog_base(name);
    const Filtration f(b);
    std::size_t total = 0;
    for (std::size_t r = 0; r < b.nilpotency(); ++r)
      total += f.layer(r).size();
    EXPECT_EQ(total, b.dim()) << name;
    // reduce(x, r) kills exactly m^r
    for (std::size_t r = 1; r < b.nilpotency(); ++r)
      for (const auto& v : b.ideal_power(r))
        EXPECT_TRUE(is_zero(f.reduce(v, r)));
    EXPECT_EQ(f.reduce(b.unit(), 1), b.unit());
  }
}

TEST(Base, ExtendScalarsMatchesOracle) {
  const FiniteAlgebra e2 = catalog_algebra("E2");
  const ArtinLocalAlgebra b3 = catalog_base("B3");
  const FiniteAlgebra ext = extend_scalars(e2, b3);
  const std::vector<Rational> zero_beta(2 * 2 * 2 * 3);
  EXPECT_EQ(ext.table(), oracle::deformed(e2.table(), 2, b3.as_algebra().table(), 3, zero_beta));
  EXPECT_EQ(reduce_mod_ideal(ext, 2, b3).table(), e2.table());
}

TEST(Io, AlgebraRoundTripIsBitExact) {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const FiniteAlgebra a = random_associative_algebra(rng, 3);
    const json j = algebra_to_json(a);
    EXPECT_EQ(algebra_from_json(j), a);
    EXPECT_EQ(algebra_to_json(algebra_from_json(j)).dump(), j.dump());
  }
  for (const auto& name : catalog_base_names()) {
    const ArtinLocalAlgebra b = catalog_base(name);
    EXPECT_EQ(base_from_json(base_to_json(b)), b);
  }
}

TEST(Io, MalformedAlgebraIsInputError) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 2, "mul": [[["0"]]]})")), InputError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"mul": [[["0"]]]})")), InputError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "mul": [[["x"]]]})")), std::exception);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"dim": 1, "unital": true, "mul": [[["1"]]]})")), InputError);
  EXPECT_THROW(base_from_json(json::parse(R"({"dim": 1, "unit_index": 1, "nilpotency": 1, "mul": [[["1"]]]})")),
               InputError);
}
