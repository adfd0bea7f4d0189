#include <benchmark/benchmark.h>

#include "qdwh/kernels.hpp"
#include "qdwh/matrix.hpp"

using namespace qdwh;

static void BM_QrFactorFull(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = gaussian_matrix(n, n, Seed{1});
    for (auto _ : state) benchmark::DoNotOptimize(qr_factor(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QrFactorFull)->Arg(64)->Arg(128)->Arg(256)->Complexity(benchmark::oNCubed);

static void BM_Cholesky(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix b = gaussian_matrix(n + 8, n, Seed{2});
    const DenseMatrix z = symmetrize(matmul_tn(b, b));
    for (auto _ : state) benchmark::DoNotOptimize(cholesky(z));
}
BENCHMARK(BM_Cholesky)->Arg(64)->Arg(128)->Arg(256);

static void BM_SymEigDense(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix s = symmetrize(gaussian_matrix(n, n, Seed{3}));
    for (auto _ : state) benchmark::DoNotOptimize(sym_eig_dense(s));
}
BENCHMARK(BM_SymEigDense)->Arg(32)->Arg(64)->Arg(128);

static void BM_SvdDense(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = gaussian_matrix(n, n, Seed{4});
    for (auto _ : state) benchmark::DoNotOptimize(svd_dense(a));
}
BENCHMARK(BM_SvdDense)->Arg(32)->Arg(64)->Arg(128);

static void BM_TwoNormEstimate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = gaussian_matrix(n, n, Seed{5});
    for (auto _ : state) benchmark::DoNotOptimize(two_norm_estimate(a));
}
BENCHMARK(BM_TwoNormEstimate)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
