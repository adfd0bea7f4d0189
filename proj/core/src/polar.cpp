#include "qdwh/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qdwh/kernels.hpp"

namespace qdwh {

WeightStep halley_weights(double ell) {
    if (!(ell > 0.0) || ell > 1.0)
        throw std::invalid_argument("halley_weights: ell must be in (0, 1]");
    const double l2 = ell * ell;
    // dd = cbrt(4(1 - l2)/l2^2), written to stay finite for tiny ell
    const double dd = std::cbrt(4.0 * (1.0 - l2)) * std::pow(ell, -4.0 / 3.0);
    const double sqd = std::sqrt(1.0 + dd);
    const double inner = 8.0 - 4.0 * dd + 8.0 * (2.0 - l2) / (l2 * sqd);
    WeightStep w;
    w.a = sqd + std::sqrt(inner) / 2.0;
    w.b = (w.a - 1.0) * (w.a - 1.0) / 4.0;
    w.c = w.a + w.b - 1.0;
    w.ell_in = ell;
    w.ell_out = ell * (w.a + w.b * l2) / (1.0 + w.c * l2);
    return w;
}

double composed_rational(double x, double ell0, std::size_t iters) {
    double ell = ell0;
    double y = x;
    for (std::size_t k = 0; k < iters; ++k) {
        const WeightStep w = halley_weights(ell);
        y = y * (w.a + w.b * y * y) / (1.0 + w.c * y * y);
        ell = w.ell_out;
    }
    return y;
}

std::size_t iterations_to_converge(double ell0, double eps, std::size_t max_iters) {
    double ell = ell0;
    for (std::size_t k = 0; k < max_iters; ++k) {
        if (std::abs(ell - 1.0) < eps) return k;
        ell = halley_weights(ell).ell_out;
    }
    if (std::abs(ell - 1.0) < eps) return max_iters;
    std::ostringstream msg;
    msg << "ell recurrence from " << ell0 << " not within " << eps << " of 1 after " << max_iters
        << " steps (ell = " << ell << ")";
    throw NotConverged(msg.str());
}

DenseMatrix qdwh_qr_step(const DenseMatrix& x, const WeightStep& w) {
    require_finite(x, "qdwh_qr_step");
    const std::size_t m = x.rows(), n = x.cols();
    const double sc = std::sqrt(w.c);
    DenseMatrix stacked(m + n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double* sj = stacked.col(j);
        const double* xj = x.col(j);
        for (std::size_t i = 0; i < m; ++i) sj[i] = sc * xj[i];
        sj[m + j] = 1.0;
    }
    QrFactors f = qr_factor_thin(stacked, n);
    DenseMatrix q1(m, n), q2(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* qj = f.q.col(j);
        double* q1j = q1.col(j);
        double* q2j = q2.col(j);
        for (std::size_t i = 0; i < m; ++i) q1j[i] = qj[i];
        for (std::size_t i = 0; i < n; ++i) q2j[i] = qj[m + i];
    }
    const double bc = w.b / w.c;
    const double coef = (w.a - bc) / sc;
    DenseMatrix next = matmul_nt(q1, q2);
    double* d = next.data();
    const double* xs = x.data();
    for (std::size_t i = 0; i < m * n; ++i) d[i] = bc * xs[i] + coef * d[i];
    return next;
}

DenseMatrix qdwh_chol_step(const DenseMatrix& x, const WeightStep& w) {
    require_finite(x, "qdwh_chol_step");
    const std::size_t m = x.rows(), n = x.cols();
    DenseMatrix z = matmul_tn(x, x);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const double sym = 0.5 * (z(i, j) + z(j, i)) * w.c;
            const double val = (i == j) ? 1.0 + sym : sym;
            z(i, j) = val;
            z(j, i) = val;
        }
    }
    const DenseMatrix wu = cholesky(z);
    // y = X W^-1: solve y * W = X column by column of W
    DenseMatrix y = x;
    for (std::size_t j = 0; j < n; ++j) {
        double* yj = y.col(j);
        const double* wj = wu.col(j);
        for (std::size_t k = 0; k < j; ++k) {
            const double f = wj[k];
            if (f == 0.0) continue;
            const double* yk = y.col(k);
            for (std::size_t i = 0; i < m; ++i) yj[i] -= f * yk[i];
        }
        const double inv = 1.0 / wj[j];
        for (std::size_t i = 0; i < m; ++i) yj[i] *= inv;
    }
    // g = y W^-T: solve g * W' = y, back substitution over columns
    DenseMatrix g = y;
    for (std::size_t j = n; j-- > 0;) {
        double* gj = g.col(j);
        const double inv = 1.0 / wu(j, j);
        for (std::size_t i = 0; i < m; ++i) gj[i] *= inv;
        for (std::size_t k = 0; k < j; ++k) {
            const double f = wu(k, j);
            if (f == 0.0) continue;
            double* gk = g.col(k);
            for (std::size_t i = 0; i < m; ++i) gk[i] -= f * gj[i];
        }
    }
    const double bc = w.b / w.c;
    const double coef = w.a - bc;
    double* d = g.data();
    const double* xs = x.data();
    for (std::size_t i = 0; i < m * n; ++i) d[i] = bc * xs[i] + coef * d[i];
    return g;
}

PolarResult polar_decompose(const DenseMatrix& a, const PolarConfig& cfg) {
    require_finite(a, "polar_decompose");
    if (a.rows() < a.cols()) throw std::invalid_argument("polar_decompose: requires rows >= cols");
    if (!(cfg.ell0 > 0.0) || cfg.ell0 > 1.0)
        throw std::invalid_argument("polar_decompose: ell0 must be in (0, 1]");

    PolarResult res;
    res.alpha = two_norm_estimate(a);
    DenseMatrix x = scaled(a, 1.0 / res.alpha);
    // The norm estimate may exceed ||A||_2 by up to 10%, which shrinks the
    // iterate's spectrum by the same factor; derate ell0 so the weight
    // schedule still covers sigma_min(X0).
    double ell = cfg.ell0 / 1.10;
    res.ell_trace.push_back(ell);

    const double stop = 5.0 * cfg.conv_eps;
    while (std::abs(ell - 1.0) >= stop) {
        if (res.iters_qr + res.iters_chol >= cfg.max_iters) {
            std::ostringstream msg;
            msg << "polar_decompose: no convergence after " << cfg.max_iters
                << " iterations (ell = " << ell << ")";
            throw NotConverged(msg.str());
        }
        const WeightStep w = halley_weights(ell);
        bool use_chol = w.c <= cfg.chol_switch_c;
        if (cfg.force_variant == PolarVariant::QrOnly) use_chol = false;
        if (cfg.force_variant == PolarVariant::CholeskyOnly) use_chol = true;
        if (use_chol) {
            try {
                x = qdwh_chol_step(x, w);
                ++res.iters_chol;
            } catch (const NotPositiveDefinite&) {
                if (cfg.force_variant == PolarVariant::CholeskyOnly) throw;
                x = qdwh_qr_step(x, w);
                ++res.iters_qr;
            }
        } else {
            x = qdwh_qr_step(x, w);
            ++res.iters_qr;
        }
        ell = w.ell_out;
        res.ell_trace.push_back(ell);
    }
    res.converged = true;
    res.up = std::move(x);
    res.h = symmetrize(matmul_tn(res.up, a));
    return res;
}

FixedIterResult run_fixed_iterations(const DenseMatrix& x0, double ell0, std::size_t iters,
                                     FixedVariant variant) {
    require_finite(x0, "run_fixed_iterations");
    if (!(ell0 > 0.0) || ell0 > 1.0)
        throw std::invalid_argument("run_fixed_iterations: ell0 must be in (0, 1]");
    if (iters < 1) throw std::invalid_argument("run_fixed_iterations: iters must be >= 1");

    bool symmetric = false;
    if (x0.rows() == x0.cols()) {
        double asym = 0.0;
        for (std::size_t j = 0; j < x0.cols(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                asym = std::max(asym, std::abs(x0(i, j) - x0(j, i)));
        symmetric = asym <= 1e3 * static_cast<double>(x0.rows()) *
                                std::numeric_limits<double>::epsilon() *
                                std::max(1.0, frobenius_norm(x0));
    }

    FixedIterResult res;
    res.x = x0;
    res.ell = ell0;
    res.ell_trace.push_back(ell0);
    for (std::size_t k = 0; k < iters; ++k) {
        const WeightStep w = halley_weights(res.ell);
        if (variant == FixedVariant::QrFirst && k == 0) {
            res.x = qdwh_qr_step(res.x, w);
            ++res.iters_qr;
        } else {
            res.x = qdwh_chol_step(res.x, w);
            ++res.iters_chol;
        }
        if (symmetric) res.x = symmetrize(res.x);
        res.ell = w.ell_out;
        res.ell_trace.push_back(res.ell);
    }
    return res;
}

}  // namespace qdwh
