#include <benchmark/benchmark.h>

#include "qlift/dilation.hpp"
#include "qlift/factorization.hpp"
#include "qlift/qalgebra.hpp"

namespace {

using namespace qlift;

MatrixOp contraction(Index dim, std::uint64_t seed, double norm) {
  GeneratorSpec spec;
  spec.dim = dim;
  spec.seed = seed;
  spec.norm = norm;
  return random_contraction(spec);
}

void BM_DouglasSolve(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(1);
  const MatrixOp b = ginibre(n, n, rng);
  const MatrixOp a = b * contraction(n, 2, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(douglas_solve(a, b));
}
BENCHMARK(BM_DouglasSolve)->RangeMultiplier(2)->Range(4, 64);

void BM_ParrottComplete(benchmark::State& state) {
  const Index n = state.range(0);
  std::mt19937_64 rng(3);
  const MatrixOp a = ginibre(n, n, rng);
  const MatrixOp b = ginibre(n, n, rng);
  const MatrixOp c = ginibre(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(parrott_complete(a, b, c));
}
BENCHMARK(BM_ParrottComplete)->RangeMultiplier(2)->Range(4, 64);

void BM_SchaefferIsometric(benchmark::State& state) {
  const MatrixOp t = contraction(state.range(0), 4, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(schaeffer_isometric(t, state.range(1)));
}
BENCHMARK(BM_SchaefferIsometric)->ArgsProduct({{4, 16}, {4, 16}});

void BM_UnitaryDilation(benchmark::State& state) {
  const MatrixOp t = contraction(state.range(0), 5, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(unitary_dilation(t, state.range(1)));
}
BENCHMARK(BM_UnitaryDilation)->ArgsProduct({{4, 16}, {4, 16}});

void BM_CommutantBasis(benchmark::State& state) {
  GeneratorSpec spec;
  spec.dim = state.range(0);
  spec.q = Complex(0.0, 1.0);
  spec.seed = 6;
  const QPair p = random_qpair(spec);
  for (auto _ : state) benchmark::DoNotOptimize(q_commutant_basis(p.t1, p.q));
}
BENCHMARK(BM_CommutantBasis)->DenseRange(2, 8, 2);

}  // namespace
