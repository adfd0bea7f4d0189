#include "qdwh/fullsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdwh/kernels.hpp"
#include "qdwh/polar.hpp"

namespace qdwh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::uint64_t kSplitSeed = 0x73706c6974ull;

EigResult dense_block(const DenseMatrix& a) {
    SymEig e = sym_eig_dense(a);
    return EigResult{std::move(e.values), std::move(e.vectors), 0};
}

EigResult eig_recurse(const DenseMatrix& a, std::size_t base_size) {
    const std::size_t n = a.rows();
    if (n <= base_size) return dense_block(a);

    const double sigma = trace(a) / static_cast<double>(n);
    DenseMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= sigma;

    // constant-diagonal block: the shift exhausted the spectrum
    if (frobenius_norm(shifted) <= 10.0 * static_cast<double>(n) * kEps *
                                       std::max(1.0, std::abs(sigma))) {
        EigResult r;
        r.lambda.assign(n, sigma);
        r.v = DenseMatrix::identity(n);
        return r;
    }

    PolarConfig cfg;
    cfg.ell0 = 1e-15;  // no condition estimate available; take the safe bound
    const PolarResult polar = polar_decompose(shifted, cfg);

    // C = (I - Up)/2 projects onto the invariant subspace below sigma
    DenseMatrix c = scaled(polar.up, -0.5);
    for (std::size_t i = 0; i < n; ++i) c(i, i) += 0.5;
    c = symmetrize(c);
    const double k_real = trace(c);
    const std::size_t k = static_cast<std::size_t>(std::llround(k_real));
    if (k == 0 || k >= n) return dense_block(a);

    const DenseMatrix omega = gaussian_matrix(n, n, Seed{kSplitSeed});
    const QrFactors f = qr_factor(matmul(c, omega));
    const DenseMatrix v_lo = column_block(f.q, 0, k);
    const DenseMatrix v_hi = column_block(f.q, k, n - k);

    const EigResult lo = eig_recurse(symmetrize(matmul_tn(v_lo, matmul(a, v_lo))), base_size);
    const EigResult hi = eig_recurse(symmetrize(matmul_tn(v_hi, matmul(a, v_hi))), base_size);

    EigResult out;
    out.depth = 1 + std::max(lo.depth, hi.depth);
    out.lambda.reserve(n);
    out.lambda.insert(out.lambda.end(), lo.lambda.begin(), lo.lambda.end());
    out.lambda.insert(out.lambda.end(), hi.lambda.begin(), hi.lambda.end());
    out.v = DenseMatrix(n, n);
    const DenseMatrix vl = matmul(v_lo, lo.v);
    const DenseMatrix vh = matmul(v_hi, hi.v);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = vl(i, j);
    for (std::size_t j = 0; j < n - k; ++j)
        for (std::size_t i = 0; i < n; ++i) out.v(i, k + j) = vh(i, j);
    return out;
}

}  // namespace

EigResult qdwh_eig_full(const DenseMatrix& a, std::size_t base_size) {
    require_finite(a, "qdwh_eig_full");
    if (a.rows() != a.cols()) throw std::invalid_argument("qdwh_eig_full: matrix not square");
    return eig_recurse(symmetrize(a), std::max<std::size_t>(base_size, 2));
}

SvdResult qdwh_svd_full(const DenseMatrix& a, std::size_t base_size) {
    require_finite(a, "qdwh_svd_full");
    if (a.rows() < a.cols()) throw std::invalid_argument("qdwh_svd_full: requires rows >= cols");
    const PolarResult polar = polar_decompose(a);
    const EigResult eig = qdwh_eig_full(polar.h, base_size);
    const std::size_t n = a.cols();

    SvdResult out;
    out.sigma.resize(n);
    out.v = DenseMatrix(n, n);
    const DenseMatrix u_full = matmul(polar.up, eig.v);
    out.u = DenseMatrix(a.rows(), n);
    // H is PSD up to roundoff; reverse the ascending eigen order and clamp
    // stray negatives at zero.
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = n - 1 - j;
        out.sigma[j] = std::max(eig.lambda[src], 0.0);
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = eig.v(i, src);
        for (std::size_t i = 0; i < a.rows(); ++i) out.u(i, j) = u_full(i, src);
    }
    return out;
}

}  // namespace qdwh
