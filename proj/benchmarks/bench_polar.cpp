#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qdwh/kernels.hpp"
#include "qdwh/polar.hpp"

using namespace qdwh;

namespace {

DenseMatrix conditioned_matrix(std::size_t n, double kappa, Seed left, Seed right) {
    DenseMatrix q1 = qr_factor(gaussian_matrix(n, n, left)).q;
    const DenseMatrix q2 = qr_factor(gaussian_matrix(n, n, right)).q;
    for (std::size_t j = 0; j < n; ++j) {
        const double s =
            std::pow(1.0 / kappa, static_cast<double>(j) / static_cast<double>(n - 1));
        for (std::size_t i = 0; i < n; ++i) q1(i, j) *= s;
    }
    return matmul_nt(q1, q2);
}

}  // namespace

static void BM_PolarDecompose(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const double kappa = std::pow(10.0, static_cast<double>(state.range(1)));
    const DenseMatrix a = conditioned_matrix(n, kappa, Seed{11}, Seed{12});
    PolarConfig cfg;
    cfg.ell0 = 1.0 / kappa;
    for (auto _ : state) benchmark::DoNotOptimize(polar_decompose(a, cfg));
}
BENCHMARK(BM_PolarDecompose)
    ->Args({128, 2})
    ->Args({128, 12})
    ->Args({256, 2})
    ->Args({256, 12});

static void BM_QrStep(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = scaled(conditioned_matrix(n, 10.0, Seed{13}, Seed{14}), 0.9);
    const WeightStep w = halley_weights(0.1);
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_qr_step(a, w));
}
BENCHMARK(BM_QrStep)->Arg(128)->Arg(256);

static void BM_CholStep(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = scaled(conditioned_matrix(n, 10.0, Seed{13}, Seed{14}), 0.9);
    const WeightStep w = halley_weights(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(qdwh_chol_step(a, w));
}
BENCHMARK(BM_CholStep)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
