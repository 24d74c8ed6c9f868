#include <benchmark/benchmark.h>

#include "qlift/coextension.hpp"
#include "qlift/lifting.hpp"
#include "qlift/qalgebra.hpp"

namespace {

using namespace qlift;

QPair pair(Index dim) {
  GeneratorSpec spec;
  spec.dim = dim;
  spec.q = std::polar(1.0, 0.7);
  spec.seed = 11;
  return random_qpair(spec);
}

void BM_IsometricLift(benchmark::State& state) {
  const QPair p = pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isometric_lift_q(p, state.range(1)));
}
BENCHMARK(BM_IsometricLift)->ArgsProduct({{2, 4}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_CoisoLift(benchmark::State& state) {
  const QPair p = pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coiso_lift_q(p, state.range(1)));
}
BENCHMARK(BM_CoisoLift)->ArgsProduct({{2, 4}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_UnitaryLift(benchmark::State& state) {
  const QPair p = pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unitary_q_lift(p, state.range(1)));
}
BENCHMARK(BM_UnitaryLift)->ArgsProduct({{2, 4}, {2, 4}})->Unit(benchmark::kMillisecond);

void BM_QCoextension(benchmark::State& state) {
  const QPair p = pair(2);
  for (auto _ : state) benchmark::DoNotOptimize(q_coextension(p, state.range(0), state.range(1)));
}
BENCHMARK(BM_QCoextension)->ArgsProduct({{2, 4}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace
