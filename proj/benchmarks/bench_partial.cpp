#include <benchmark/benchmark.h>

#include <cmath>

#include "qdwh/fullsolve.hpp"
#include "qdwh/kernels.hpp"
#include "qdwh/matgen.hpp"
#include "qdwh/partial.hpp"

using namespace qdwh;

static void BM_PartialEig(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SymEigTestMatrix gen = gen_sym_eig_test(n, n / 10, Seed{1});
    const ShiftPlan plan = choose_shift(3);
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_partial_eig(gen.a, plan));
}
BENCHMARK(BM_PartialEig)->Arg(128)->Arg(256);

static void BM_FullEig(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SymEigTestMatrix gen = gen_sym_eig_test(n, n / 10, Seed{1});
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_eig_full(gen.a));
}
BENCHMARK(BM_FullEig)->Arg(128)->Arg(256);

static void BM_PartialSvd(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const double s = 1.0 / std::pow(10.0, static_cast<double>(state.range(1)));
    const SvdTestMatrix gen = gen_svd_test(n, Seed{2});
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_partial_svd(gen.a, s));
}
BENCHMARK(BM_PartialSvd)->Args({128, 1})->Args({128, 4})->Args({256, 1})->Args({256, 4});

static void BM_FullSvd(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SvdTestMatrix gen = gen_svd_test(n, Seed{2});
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_svd_full(gen.a));
}
BENCHMARK(BM_FullSvd)->Arg(128);

BENCHMARK_MAIN();
