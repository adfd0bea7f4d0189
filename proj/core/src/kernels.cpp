#include "qdwh/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qdwh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// splitmix64 finalizer; the counter scheme makes every entry an independent
// pure function of (seed, index).
std::uint64_t hash64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// uniform in (0, 1]
double to_unit(std::uint64_t h) {
    return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

double normal_draw(std::uint64_t seed, std::uint64_t index) {
    const double u1 = to_unit(hash64(seed, 2 * index));
    const double u2 = to_unit(hash64(seed, 2 * index + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

struct Householder {
    std::vector<std::vector<double>> vs;  // reflector j acts on rows [j, m)
    std::vector<double> taus;
    DenseMatrix r;  // m x n upper part
};

// Factor A = QR, Q implied by the reflector list.
Householder householder_qr(const DenseMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    DenseMatrix w = a;
    const std::size_t p = std::min(m >= 1 ? m - 1 : 0, n);
    Householder h;
    h.vs.reserve(p);
    h.taus.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        const std::size_t len = m - j;
        std::vector<double> v(len);
        double normx = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = w(j + i, j);
            normx += v[i] * v[i];
        }
        normx = std::sqrt(normx);
        double tau = 0.0;
        if (normx > 0.0) {
            const double sign = v[0] >= 0.0 ? 1.0 : -1.0;
            v[0] += sign * normx;
            double vv = 0.0;
            for (double x : v) vv += x * x;
            if (vv > 0.0) tau = 2.0 / vv;
            // apply H = I - tau v v' to the trailing columns
            for (std::size_t c = j; c < n; ++c) {
                double s = 0.0;
                for (std::size_t i = 0; i < len; ++i) s += v[i] * w(j + i, c);
                s *= tau;
                for (std::size_t i = 0; i < len; ++i) w(j + i, c) -= s * v[i];
            }
            w(j, j) = -sign * normx;
        }
        h.vs.push_back(std::move(v));
        h.taus.push_back(tau);
    }
    h.r = DenseMatrix(m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i <= std::min(c, m - 1); ++i) h.r(i, c) = w(i, c);
    return h;
}

// Accumulate the first qcols columns of Q by applying reflectors in reverse
// to the identity block.
DenseMatrix accumulate_q(const Householder& h, std::size_t m, std::size_t qcols) {
    DenseMatrix q(m, qcols);
    for (std::size_t j = 0; j < std::min(m, qcols); ++j) q(j, j) = 1.0;
    for (std::size_t jj = h.vs.size(); jj-- > 0;) {
        const std::vector<double>& v = h.vs[jj];
        const double tau = h.taus[jj];
        if (tau == 0.0) continue;
        const std::size_t len = v.size();
        for (std::size_t c = 0; c < qcols; ++c) {
            double* qc = q.col(c) + jj;
            double s = 0.0;
            for (std::size_t i = 0; i < len; ++i) s += v[i] * qc[i];
            s *= tau;
            for (std::size_t i = 0; i < len; ++i) qc[i] -= s * v[i];
        }
    }
    return q;
}

}  // namespace

QrFactors qr_factor(const DenseMatrix& a) {
    require_finite(a, "qr_factor");
    Householder h = householder_qr(a);
    QrFactors f;
    f.q = accumulate_q(h, a.rows(), a.rows());
    f.r = std::move(h.r);
    return f;
}

QrFactors qr_factor_thin(const DenseMatrix& a, std::size_t ncols) {
    require_finite(a, "qr_factor");
    if (ncols > a.rows()) throw std::invalid_argument("qr_factor_thin: ncols > rows");
    Householder h = householder_qr(a);
    QrFactors f;
    f.q = accumulate_q(h, a.rows(), ncols);
    f.r = std::move(h.r);
    return f;
}

DenseMatrix cholesky(const DenseMatrix& z) {
    require_finite(z, "cholesky");
    if (z.rows() != z.cols()) throw std::invalid_argument("cholesky: matrix not square");
    const std::size_t n = z.rows();
    DenseMatrix w(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            double s = z(i, j);
            const double* wi = w.col(i);
            const double* wj = w.col(j);
            for (std::size_t k = 0; k < i; ++k) s -= wi[k] * wj[k];
            if (i == j) {
                if (s <= 0.0)
                    throw NotPositiveDefinite("cholesky: pivot " + std::to_string(j) +
                                              " is not positive");
                w(j, j) = std::sqrt(s);
            } else {
                w(i, j) = s / w(i, i);
            }
        }
    }
    return w;
}

SymEig sym_eig_dense(const DenseMatrix& s) {
    require_finite(s, "sym_eig_dense");
    if (s.rows() != s.cols()) throw std::invalid_argument("sym_eig_dense: matrix not square");
    const std::size_t n = s.rows();
    const double norm = frobenius_norm(s);
    {
        double asym = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
        if (asym > 1e3 * static_cast<double>(n) * kEps * std::max(1.0, norm))
            throw std::invalid_argument("sym_eig_dense: input not symmetric within tolerance");
    }

    DenseMatrix a = symmetrize(s);
    DenseMatrix v = DenseMatrix::identity(n);
    if (norm > 0.0) {
        const double rotate_tol = 0.5 * kEps * norm / static_cast<double>(n);
        const std::size_t max_sweeps = 64;
        for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
            std::size_t rotations = 0;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    if (std::abs(apq) <= rotate_tol) continue;
                    ++rotations;
                    const double app = a(p, p), aqq = a(q, q);
                    const double theta = (aqq - app) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double sn = t * c;
                    // rows/cols p and q of a
                    for (std::size_t k = 0; k < n; ++k) {
                        const double akp = a(k, p), akq = a(k, q);
                        a(k, p) = c * akp - sn * akq;
                        a(k, q) = sn * akp + c * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const double apk = a(p, k), aqk = a(q, k);
                        a(p, k) = c * apk - sn * aqk;
                        a(q, k) = sn * apk + c * aqk;
                    }
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = c * vkp - sn * vkq;
                        v(k, q) = sn * vkp + c * vkq;
                    }
                }
            }
            if (rotations == 0) break;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    SymEig out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

Svd svd_dense(const DenseMatrix& a) {
    require_finite(a, "svd_dense");
    if (a.rows() < a.cols()) {
        Svd t = svd_dense(transpose(a));
        std::swap(t.u, t.v);
        return t;
    }
    const std::size_t m = a.rows(), n = a.cols();
    DenseMatrix b = a;
    DenseMatrix v = DenseMatrix::identity(n);

    std::vector<double> colsq(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* bj = b.col(j);
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += bj[i] * bj[i];
        colsq[j] = s;
    }

    const std::size_t max_sweeps = 64;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = colsq[p], beta = colsq[q];
                if (alpha == 0.0 || beta == 0.0) continue;
                double* bp = b.col(p);
                double* bq = b.col(q);
                double gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) gamma += bp[i] * bq[i];
                if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
                ++rotations;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double xp = bp[i], xq = bq[i];
                    bp[i] = c * xp - sn * xq;
                    bq[i] = sn * xp + c * xq;
                }
                double* vp = v.col(p);
                double* vq = v.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const double xp = vp[i], xq = vq[i];
                    vp[i] = c * xp - sn * xq;
                    vq[i] = sn * xp + c * xq;
                }
                colsq[p] = c * c * alpha - 2.0 * c * sn * gamma + sn * sn * beta;
                colsq[q] = sn * sn * alpha + 2.0 * c * sn * gamma + c * c * beta;
            }
        }
        if (rotations == 0) break;
    }

    std::vector<double> sig(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* bj = b.col(j);
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += bj[i] * bj[i];
        sig[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

    Svd out;
    out.sigma.resize(n);
    out.u = DenseMatrix(m, n);
    out.v = DenseMatrix(n, n);
    const double sig_max = sig[order[0]];
    const double tiny = static_cast<double>(std::max(m, n)) * kEps * sig_max;
    std::vector<std::size_t> degenerate;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sig[src];
        for (std::size_t i = 0; i < n; ++i) out.v(i, j) = v(i, src);
        if (sig[src] > tiny && sig[src] > 0.0) {
            const double inv = 1.0 / sig[src];
            for (std::size_t i = 0; i < m; ++i) out.u(i, j) = b(i, src) * inv;
        } else {
            degenerate.push_back(j);
        }
    }
    // Complete U for (numerically) zero singular values: orthonormalize unit
    // vectors against the existing columns.
    std::size_t next_axis = 0;
    for (std::size_t j : degenerate) {
        for (; next_axis < m; ++next_axis) {
            std::vector<double> w(m, 0.0);
            w[next_axis] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j || (out.sigma[c] <= tiny && c > j)) continue;
                    const double* uc = out.u.col(c);
                    double s = 0.0;
                    for (std::size_t i = 0; i < m; ++i) s += uc[i] * w[i];
                    for (std::size_t i = 0; i < m; ++i) w[i] -= s * uc[i];
                }
            }
            double nw = 0.0;
            for (double x : w) nw += x * x;
            nw = std::sqrt(nw);
            if (nw > 0.5) {
                for (std::size_t i = 0; i < m; ++i) out.u(i, j) = w[i] / nw;
                ++next_axis;
                break;
            }
        }
    }
    return out;
}

double two_norm_estimate(const DenseMatrix& a) {
    require_finite(a, "two_norm_estimate");
    if (frobenius_norm(a) == 0.0) throw std::invalid_argument("two_norm_estimate: zero matrix");
    const std::size_t n = a.cols();
    DenseMatrix v = gaussian_matrix(n, 1, Seed{0x6e6f726d32ull});
    {
        double nv = frobenius_norm(v);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) /= nv;
    }
    double est = 0.0;
    for (int it = 0; it < 100; ++it) {
        DenseMatrix y = matmul(a, v);
        double ny = frobenius_norm(y);
        if (ny == 0.0) {
            // start vector fell in the null space; restart from an axis
            v = DenseMatrix(n, 1);
            v(static_cast<std::size_t>(it) % n, 0) = 1.0;
            continue;
        }
        DenseMatrix z = matmul_tn(a, y);
        const double nz = frobenius_norm(z);
        const double prev = est;
        est = ny;
        if (nz == 0.0) break;
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = z(i, 0) / nz;
        if (it > 0 && std::abs(est - prev) < 1e-3 * est) break;
    }
    return 1.05 * est;
}

double lanczos_min_bound(const DenseMatrix& a, std::size_t steps) {
    require_finite(a, "lanczos_min_bound");
    if (a.rows() != a.cols()) throw std::invalid_argument("lanczos_min_bound: matrix not square");
    const std::size_t n = a.rows();
    {
        double asym = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
        if (asym > 1e3 * static_cast<double>(n) * kEps * std::max(1.0, frobenius_norm(a)))
            throw std::invalid_argument("lanczos_min_bound: input not symmetric within tolerance");
    }
    if (steps < 1) throw std::invalid_argument("lanczos_min_bound: steps must be >= 1");
    const std::size_t m = std::min(steps, n);

    std::vector<std::vector<double>> q;
    q.reserve(m);
    {
        DenseMatrix v0 = gaussian_matrix(n, 1, Seed{0x6c616e637aull});
        std::vector<double> v(n);
        double nv = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = v0(i, 0);
            nv += v[i] * v[i];
        }
        nv = std::sqrt(nv);
        for (double& x : v) x /= nv;
        q.push_back(std::move(v));
    }

    std::vector<double> alpha, beta;
    double beta_last = 0.0;
    const double breakdown_tol = static_cast<double>(n) * kEps * std::max(1.0, frobenius_norm(a));
    for (std::size_t j = 0; j < m; ++j) {
        const std::vector<double>& qj = q[j];
        std::vector<double> w(n, 0.0);
        for (std::size_t c = 0; c < n; ++c) {
            const double* ac = a.col(c);
            const double x = qj[c];
            for (std::size_t i = 0; i < n; ++i) w[i] += ac[i] * x;
        }
        double aj = 0.0;
        for (std::size_t i = 0; i < n; ++i) aj += qj[i] * w[i];
        alpha.push_back(aj);
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass) {
            for (const std::vector<double>& qk : q) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += qk[i] * w[i];
                for (std::size_t i = 0; i < n; ++i) w[i] -= s * qk[i];
            }
        }
        double bj = 0.0;
        for (double x : w) bj += x * x;
        bj = std::sqrt(bj);
        beta_last = bj;
        if (j + 1 == m || bj <= breakdown_tol) {
            if (bj <= breakdown_tol) beta_last = 0.0;
            break;
        }
        beta.push_back(bj);
        for (double& x : w) x /= bj;
        q.push_back(std::move(w));
    }

    const std::size_t k = alpha.size();
    DenseMatrix t(k, k);
    for (std::size_t i = 0; i < k; ++i) t(i, i) = alpha[i];
    for (std::size_t i = 0; i + 1 < k; ++i) {
        t(i, i + 1) = beta[i];
        t(i + 1, i) = beta[i];
    }
    SymEig te = sym_eig_dense(t);
    const double theta_min = te.values[0];
    const double resid = beta_last * std::abs(te.vectors(k - 1, 0));
    double mu = theta_min - resid;
    if (mu < 0.0) mu *= 1.1;
    return mu;
}

DenseMatrix gaussian_matrix(std::size_t m, std::size_t n, Seed seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("gaussian_matrix: dimensions must be >= 1");
    DenseMatrix g(m, n);
    double* d = g.data();
    for (std::size_t i = 0; i < m * n; ++i) d[i] = normal_draw(seed.value, i);
    return g;
}

}  // namespace qdwh
