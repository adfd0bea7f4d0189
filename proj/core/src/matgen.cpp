#include "qdwh/matgen.hpp"

#include <algorithm>
#include <cmath>

#include "qdwh/kernels.hpp"

namespace qdwh {

namespace {

// Seeds for the independent random streams derived from the user seed.
constexpr std::uint64_t kMagnitudeStream = 0x6d61676eull;
constexpr std::uint64_t kLeftFactorStream = 0x71316c65ull;
constexpr std::uint64_t kRightFactorStream = 0x71327269ull;

DenseMatrix seeded_orthogonal(std::size_t n, Seed seed) {
    return qr_factor(gaussian_matrix(n, n, seed)).q;
}

DenseMatrix assemble(const DenseMatrix& q1, const std::vector<double>& d, const DenseMatrix& q2) {
    DenseMatrix q1d = q1;
    for (std::size_t j = 0; j < d.size(); ++j) {
        double* c = q1d.col(j);
        for (std::size_t i = 0; i < q1d.rows(); ++i) c[i] *= d[j];
    }
    return matmul_nt(q1d, q2);
}

}  // namespace

SymEigTestMatrix gen_sym_eig_test(std::size_t n, std::size_t k, Seed seed) {
    if (k < 1 || k >= n) throw std::invalid_argument("gen_sym_eig_test: need 1 <= k < n");
    // One long magnitude stream; entries that would flip the sign of a
    // positive eigenvalue are skipped and redrawn further along the stream.
    const DenseMatrix draws = gaussian_matrix(4 * n + 64, 1, Seed{seed.value ^ kMagnitudeStream});
    std::size_t next = 0;
    auto magnitude = [&]() {
        return std::abs(draws(next++, 0)) + 0.1;
    };

    SymEigTestMatrix out;
    out.d.resize(n);
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k) {
            out.d[i] = -kd * magnitude();
        } else {
            double v = nd - kd * magnitude();
            while (v <= 0.0 && next < draws.rows()) v = nd - kd * magnitude();
            out.d[i] = v;
        }
    }
    const DenseMatrix q1 = seeded_orthogonal(n, Seed{seed.value ^ kLeftFactorStream});
    out.a = symmetrize(assemble(q1, out.d, q1));
    return out;
}

SvdTestMatrix gen_svd_test(std::size_t n, Seed seed) {
    if (n < 2) throw std::invalid_argument("gen_svd_test: need n >= 2");
    SvdTestMatrix out;
    out.d.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.d[i] = std::pow(0.5, static_cast<double>(i + 1) * 100.0 / static_cast<double>(n));
    const DenseMatrix q1 = seeded_orthogonal(n, Seed{seed.value ^ kLeftFactorStream});
    const DenseMatrix q2 = seeded_orthogonal(n, Seed{seed.value ^ kRightFactorStream});
    out.a = assemble(q1, out.d, q2);
    return out;
}

double expected_fraction(double s) {
    if (!(s > 0.0) || s >= 1.0)
        throw std::invalid_argument("expected_fraction: s must be in (0, 1)");
    return std::min(std::log2(1.0 / s) / 100.0, 1.0);
}

}  // namespace qdwh
