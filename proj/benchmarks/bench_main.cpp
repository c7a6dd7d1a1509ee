#include "trideform/flat.hpp"
#include "trideform/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace trideform;

namespace {

Cochain beta_xx(std::size_t na, std::size_t nb) {
  Cochain beta(2, na, nb);
  beta.value(0).at(0, 1) = Rational(1);
  return beta;
}

void BM_ComplexAssembly(benchmark::State& state) {
  const FiniteAlgebra alg = catalog_algebra("E2");
  const auto w = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(TruncatedComplex::undeformed(alg, catalog_base("B2"), w).squares_to_zero());
}
BENCHMARK(BM_ComplexAssembly)->Arg(3)->Arg(4);

void BM_H0(benchmark::State& state) {
  const FiniteAlgebra alg = catalog_algebra("E2");
  const ArtinLocalAlgebra b2 = catalog_base("B2");
  const auto w = static_cast<std::size_t>(state.range(0));
  const Derivation delta = delta_of_beta(beta_xx(2, 2), alg, b2, w);
  for (auto _ : state)
    benchmark::DoNotOptimize(h0_compute(delta, alg, b2, w).dimension);
}
BENCHMARK(BM_H0)->Arg(3)->Arg(4);

void BM_GerstenhaberBracket(benchmark::State& state) {
  Rng rng(1);
  const auto a = static_cast<std::size_t>(state.range(0));
  const Coderivation p = Coderivation::single(random_cochain(a, 2, 1, rng, false), 8);
  const Coderivation q = Coderivation::single(random_cochain(a, 2, 1, rng, false), 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(gerstenhaber_bracket(p, q, ground_field()));
}
BENCHMARK(BM_GerstenhaberBracket)->Arg(2)->Arg(3);

void BM_GaugeEquivalent(benchmark::State& state) {
  Rng rng(2);
  const FiniteAlgebra alg = catalog_algebra("U2");
  const ArtinLocalAlgebra b3 = catalog_base("B3");
  const Cochain beta = random_mc(alg, b3, rng);
  const Cochain moved = gauge_act(exp_gauge(random_cochain(1, alg.dim(), b3.dim(), rng, true), b3), beta, alg, b3);
  for (auto _ : state)
    benchmark::DoNotOptimize(gauge_equivalent(beta, moved, alg, b3).verdict);
}
BENCHMARK(BM_GaugeEquivalent);

} // namespace

BENCHMARK_MAIN();
