#include <benchmark/benchmark.h>

#include "splab/coefficients.hpp"
#include "splab/gradmod.hpp"
#include "splab/holomap.hpp"
#include "splab/inequalities.hpp"
#include "splab/mapgen.hpp"
#include "splab/rng.hpp"

using namespace splab;

namespace {

MapHandle dense_cubic() {
  GenConfig cfg;
  cfg.n = 3;
  cfg.m = 2;
  cfg.maxdeg = 3;
  cfg.seed = 1;
  return make_map(random_polymap(cfg));
}

PolydiskPoint sample_point(int n) {
  SplitMix64 rng(7);
  return random_interior_point(n, rng, 0.1);
}

void BM_PolyEvaluate(benchmark::State& state) {
  const MapHandle f = dense_cubic();
  const PolydiskPoint z = sample_point(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(f, z));
  }
}
BENCHMARK(BM_PolyEvaluate);

void BM_PolyJacobian(benchmark::State& state) {
  const MapHandle f = dense_cubic();
  const PolydiskPoint z = sample_point(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian(f, z));
  }
}
BENCHMARK(BM_PolyJacobian);

void BM_MoebiusEvaluate(benchmark::State& state) {
  const MapHandle f = catalog("equality-8");
  const PolydiskPoint z = sample_point(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(f, z));
  }
}
BENCHMARK(BM_MoebiusEvaluate);

void BM_Operator2Norm(benchmark::State& state) {
  SplitMix64 rng(3);
  CMatrix a(4, 3);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = Complex(rng.next_symmetric(), rng.next_symmetric());
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(operator_2norm(a));
  }
}
BENCHMARK(BM_Operator2Norm);

void BM_GradModulus(benchmark::State& state) {
  const MapHandle f = catalog("equality-8");
  const PolydiskPoint z = sample_point(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grad_modulus(f, z));
  }
}
BENCHMARK(BM_GradModulus);

void BM_PolydiskBallCheck(benchmark::State& state) {
  const MapHandle f = dense_cubic();
  const PolydiskPoint z = sample_point(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_polydisk_ball(f, z));
  }
}
BENCHMARK(BM_PolydiskBallCheck);

void BM_TorusMean(benchmark::State& state) {
  const MapHandle f = dense_cubic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_mean_sq(f, 0.6, 32));
  }
}
BENCHMARK(BM_TorusMean);

void BM_GradOracle(benchmark::State& state) {
  const MapHandle f = catalog("pavlovic");
  const PolydiskPoint z = sample_point(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grad_modulus_oracle(f, z));
  }
}
BENCHMARK(BM_GradOracle);

}  // namespace

BENCHMARK_MAIN();
