#include <benchmark/benchmark.h>

#include "todaslice/mfshift.hpp"
#include "todaslice/sampling.hpp"
#include "todaslice/slodowy.hpp"
#include "todaslice/toda.hpp"

using namespace todaslice;

namespace {

LieAlgebra algebra(int r) {
  return LieAlgebra::build(RootSystem::build(CartanType::A, r));
}

void BM_CharPoly(benchmark::State& state) {
  const LieAlgebra L = algebra(static_cast<int>(state.range(0)));
  Rng rng(1);
  const Eigen::MatrixXcd m = L.to_matrix(random_algvec(L, rng));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(1, 7, 2);

void BM_ShiftGradients(benchmark::State& state) {
  const LieAlgebra L = algebra(static_cast<int>(state.range(0)));
  const ShiftFamily sf(InvariantFamily(L), zeta(L));
  Rng rng(2);
  const AlgVec x = random_algvec(L, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sf.gradients(x));
}
BENCHMARK(BM_ShiftGradients)->DenseRange(1, 3);

void BM_GradedKostantInverse(benchmark::State& state) {
  const Slice S(InvariantFamily(algebra(static_cast<int>(state.range(0)))));
  const LieAlgebra& L = S.algebra();
  Rng rng(3);
  const AlgVec w = S.triple().xi + L.project_b(random_algvec(L, rng));
  for (auto _ : state) benchmark::DoNotOptimize(S.graded_kostant_inverse(w));
}
BENCHMARK(BM_GradedKostantInverse)->DenseRange(1, 4);

void BM_Kappa(benchmark::State& state) {
  const Slice S(InvariantFamily(algebra(static_cast<int>(state.range(0)))));
  Rng rng(4);
  const TodaPoint v = random_toda_point(S.algebra(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(S.kappa(v));
}
BENCHMARK(BM_Kappa)->DenseRange(1, 3);

void BM_TodaFlow(benchmark::State& state) {
  const LieAlgebra L = algebra(static_cast<int>(state.range(0)));
  const TodaSystem toda{InvariantFamily(L)};
  Rng rng(5);
  const TodaPoint v = random_real_toda_point(L, rng);
  for (auto _ : state) benchmark::DoNotOptimize(toda.flow(0, v, 0.1, 10));
}
BENCHMARK(BM_TodaFlow)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
