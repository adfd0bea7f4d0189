#include "qdwh/partial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdwh/kernels.hpp"

namespace qdwh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_symmetric(const DenseMatrix& a, const char* who) {
    if (a.rows() != a.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    double asym = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < j; ++i) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
    if (asym > 1e3 * static_cast<double>(a.rows()) * kEps * std::max(1.0, frobenius_norm(a)))
        throw std::invalid_argument(std::string(who) + ": input not symmetric within tolerance");
}

}  // namespace

ShiftPlan choose_shift(std::size_t qdwh_iters) {
    if (qdwh_iters == 2) return ShiftPlan{0.875, 2, PlanKind::TwoStep};
    if (qdwh_iters == 3) return ShiftPlan{0.2, 3, PlanKind::ThreeStep};
    throw std::invalid_argument("choose_shift: unsupported plan, tabulated iteration counts are 2 and 3");
}

std::optional<std::size_t> detect_deficiency_index(const DenseMatrix& r, double tol) {
    if (r.rows() != r.cols())
        throw std::invalid_argument("detect_deficiency_index: R must be square");
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (std::abs(r(i, i)) < tol) return i + 1;
    return std::nullopt;
}

PartialEigResult qdwh_partial_eig(const DenseMatrix& a, const ShiftPlan& plan,
                                  bool use_randomization, double tol, Seed seed) {
    require_finite(a, "qdwh_partial_eig");
    require_symmetric(a, "qdwh_partial_eig");
    const std::size_t n = a.rows();

    PartialEigResult res;
    res.shift = plan.s;
    res.diagnostics.tol = tol;
    res.diagnostics.randomized = use_randomization;

    res.mu = lanczos_min_bound(a);
    if (res.mu >= 0.0) return res;  // no negative eigenvalues detected

    const double scale = std::abs(res.mu);
    const DenseMatrix a_scaled = scaled(symmetrize(a), 1.0 / scale);

    DenseMatrix a_tilde = scaled(a_scaled, 1.0 - plan.s);
    for (std::size_t i = 0; i < n; ++i) a_tilde(i, i) -= plan.s;

    FixedIterResult it =
        run_fixed_iterations(a_tilde, plan.s, plan.qdwh_iters, FixedVariant::CholeskyOnly);
    res.diagnostics.ell_trace = std::move(it.ell_trace);
    res.diagnostics.iters_qr = it.iters_qr;
    res.diagnostics.iters_chol = it.iters_chol;

    // B = (r(A~) + I)/2 has the wanted eigenvectors in its null space
    DenseMatrix b = scaled(it.x, 0.5);
    for (std::size_t i = 0; i < n; ++i) b(i, i) += 0.5;
    if (use_randomization) b = matmul(b, gaussian_matrix(n, n, seed));

    const QrFactors f = qr_factor(b);
    const std::optional<std::size_t> ind = detect_deficiency_index(f.r, tol);
    if (!ind) return res;  // empty detected null space: spectrum is nonnegative
    res.rank_index = *ind;
    const std::size_t ell = n - *ind + 1;
    res.subspace_size = ell;
    res.diagnostics.no_savings = ell > n / 2;

    const DenseMatrix q2 = column_block(f.q, *ind - 1, ell);
    const DenseMatrix reduced = symmetrize(matmul_tn(q2, matmul(a_scaled, q2)));
    const SymEig eig = sym_eig_dense(reduced);

    double max_abs_ritz = 0.0;
    for (double v : eig.values) max_abs_ritz = std::max(max_abs_ritz, std::abs(v));
    const double borderline_floor =
        -static_cast<double>(n) * kEps * max_abs_ritz;

    std::size_t k = 0;
    while (k < ell && eig.values[k] < 0.0) ++k;
    if (k == 0) return res;

    res.lambda_minus.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        res.lambda_minus[i] = scale * eig.values[i];
        if (eig.values[i] >= borderline_floor) ++res.diagnostics.borderline;
    }
    res.v = matmul(q2, column_block(eig.vectors, 0, k));
    return res;
}

PartialSvdResult qdwh_partial_svd(const DenseMatrix& a, double s, double tol,
                                  bool use_randomization, Seed seed) {
    require_finite(a, "qdwh_partial_svd");
    if (a.rows() < a.cols()) throw std::invalid_argument("qdwh_partial_svd: requires rows >= cols");
    if (!(s > 0.0) || s >= 1.0)
        throw std::invalid_argument("qdwh_partial_svd: threshold s must be in (0, 1)");
    const std::size_t n = a.cols();

    PartialSvdResult res;
    res.threshold = s;
    res.diagnostics.tol = tol;
    res.diagnostics.randomized = use_randomization;

    res.alpha = two_norm_estimate(a);
    const DenseMatrix a_tilde = scaled(a, 1.0 / res.alpha);

    // Fixed trip count from the scalar recurrence; the iterate-difference
    // test would never fire here because singular values below s stay put.
    const std::size_t iters = iterations_to_converge(s, 5.0 * kEps);
    DenseMatrix x = a_tilde;
    if (iters > 0) {
        const FixedVariant variant =
            s < 1e-3 ? FixedVariant::QrFirst : FixedVariant::CholeskyOnly;
        FixedIterResult it = run_fixed_iterations(a_tilde, s, iters, variant);
        x = std::move(it.x);
        res.diagnostics.ell_trace = std::move(it.ell_trace);
        res.diagnostics.iters_qr = it.iters_qr;
        res.diagnostics.iters_chol = it.iters_chol;
    } else {
        res.diagnostics.ell_trace.push_back(s);
    }

    // null space of I - r(A~)' r(A~) spans the wanted right singular vectors
    DenseMatrix m = scaled(symmetrize(matmul_tn(x, x)), -1.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += 1.0;
    if (use_randomization) m = matmul(m, gaussian_matrix(n, n, seed));

    const QrFactors f = qr_factor(m);
    const std::optional<std::size_t> ind = detect_deficiency_index(f.r, tol);
    if (!ind) return res;  // nothing above the threshold
    res.diagnostics.rank_index = *ind;
    const std::size_t ell = n - *ind + 1;
    res.subspace_size = ell;
    res.diagnostics.no_savings = ell > n / 2;

    const DenseMatrix q2 = column_block(f.q, *ind - 1, ell);
    const Svd proj = svd_dense(matmul(a, q2));

    const double cutoff = s * res.alpha;
    std::size_t k = 0;
    while (k < proj.sigma.size() && proj.sigma[k] > cutoff) ++k;
    if (k == 0) return res;

    res.sigma1.assign(proj.sigma.begin(), proj.sigma.begin() + static_cast<std::ptrdiff_t>(k));
    res.u1 = column_block(proj.u, 0, k);
    res.v1 = matmul(q2, column_block(proj.v, 0, k));
    return res;
}

double subspace_sin_angle(const DenseMatrix& v0, const DenseMatrix& q2, const DenseMatrix& q1) {
    if (v0.rows() != q2.rows() || (q1.cols() > 0 && q1.rows() != v0.rows()))
        throw std::invalid_argument("subspace_sin_angle: row counts differ");
    if (v0.cols() > q2.cols())
        throw std::invalid_argument("subspace_sin_angle: V0 has more columns than Q2");
    if (q1.cols() + q2.cols() != q2.rows())
        throw std::invalid_argument("subspace_sin_angle: [Q1 Q2] does not span the space");
    if (q1.cols() == 0) return 0.0;
    const Svd svd = svd_dense(matmul_tn(v0, q1));
    return svd.sigma.empty() ? 0.0 : svd.sigma[0];
}

PertBound verify_pert_bound(const DenseMatrix& b, const DenseMatrix& v0, std::size_t ell) {
    require_finite(b, "verify_pert_bound");
    const std::size_t m = b.rows();
    if (b.cols() < m) throw std::invalid_argument("verify_pert_bound: B must have cols >= rows");
    if (ell > m) throw std::invalid_argument("verify_pert_bound: ell exceeds rows of B");
    if (v0.rows() != m) throw std::invalid_argument("verify_pert_bound: V0 rows differ from B");
    if (v0.cols() > ell) throw std::invalid_argument("verify_pert_bound: k must be <= ell");

    const QrFactors f = qr_factor(b);
    const std::size_t head = m - ell;
    const DenseMatrix q1 = column_block(f.q, 0, head);
    const DenseMatrix q2 = column_block(f.q, head, ell);

    PertBound out;
    out.lhs = subspace_sin_angle(v0, q2, q1);
    if (head == 0) {
        out.rhs = std::numeric_limits<double>::infinity();
        return out;
    }
    DenseMatrix r11(head, head);
    for (std::size_t j = 0; j < head; ++j)
        for (std::size_t i = 0; i <= j; ++i) r11(i, j) = f.r(i, j);
    const double sigma_min = svd_dense(r11).sigma.back();
    const double num = svd_dense(matmul_tn(v0, b)).sigma.front();
    out.rhs = sigma_min > 0.0 ? num / sigma_min : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace qdwh
