#include <benchmark/benchmark.h>

#include "xsigma/cli.hpp"
#include "xsigma/compact.hpp"
#include "xsigma/orderchain.hpp"
#include "xsigma/repthy.hpp"

using namespace xsigma;

static void BM_BuildRootSystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rootsys::RootSystem::build("E6"));
}
BENCHMARK(BM_BuildRootSystem);

static void BM_WeightTable(benchmark::State& state) {
  auto f4 = rootsys::RootSystem::build("F4");
  auto lambda = f4->weight({1, 0, 0, 1});
  for (auto _ : state) {
    repthy::Oracle oracle(f4);
    benchmark::DoNotOptimize(oracle.weight_table(lambda).size());
  }
}
BENCHMARK(BM_WeightTable);

static void BM_TensorDecompose(benchmark::State& state) {
  auto f4 = rootsys::RootSystem::build("F4");
  auto eta = f4->fundamental_weight(3);
  auto big = f4->fundamental_weight(1);
  for (auto _ : state) {
    repthy::Oracle oracle(f4);
    benchmark::DoNotOptimize(oracle.tensor_decompose(eta, big).entries.size());
  }
}
BENCHMARK(BM_TensorDecompose);

static void BM_DominantIdeal(benchmark::State& state) {
  auto b4 = rootsys::RootSystem::build("B4");
  auto lambda = b4->weight({2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(orderchain::dominant_ideal(lambda).size());
}
BENCHMARK(BM_DominantIdeal);

static void BM_ExtremalRaysGeneric(benchmark::State& state) {
  auto e6 = rootsys::RootSystem::build("E6");
  auto lambda = e6->weight({0, 1, 0, 0, 1, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(compact::extremal_rays_generic(compact::colored_cone(lambda)).size());
}
BENCHMARK(BM_ExtremalRaysGeneric);

static void BM_SweepE6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::sweep_table("E6", "json").size());
}
BENCHMARK(BM_SweepE6);

BENCHMARK_MAIN();
