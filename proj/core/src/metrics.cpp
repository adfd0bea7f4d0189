#include "qdwh/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace qdwh {

namespace {

double gram_defect(const DenseMatrix& u) {
    // ||I - U'U||_F
    double s = 0.0;
    for (std::size_t j = 0; j < u.cols(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const double* ci = u.col(i);
            const double* cj = u.col(j);
            double dot = 0.0;
            for (std::size_t r = 0; r < u.rows(); ++r) dot += ci[r] * cj[r];
            const double d = (i == j) ? 1.0 - dot : -dot;
            s += (i == j) ? d * d : 2.0 * d * d;
        }
    }
    return std::sqrt(s);
}

double max_pair_residual(const DenseMatrix& a, const DenseMatrix& x,
                         const std::vector<double>& sigma, const DenseMatrix& y,
                         bool transpose_a) {
    // max_i || op(A) x_i - sigma_i y_i ||_2
    double worst = 0.0;
    const std::size_t rows = transpose_a ? a.cols() : a.rows();
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        std::vector<double> w(rows, 0.0);
        if (transpose_a) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                const double* ac = a.col(c);
                double dot = 0.0;
                for (std::size_t i = 0; i < a.rows(); ++i) dot += ac[i] * x(i, j);
                w[c] = dot;
            }
        } else {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                const double* ac = a.col(c);
                const double xc = x(c, j);
                for (std::size_t i = 0; i < a.rows(); ++i) w[i] += ac[i] * xc;
            }
        }
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double d = w[i] - sigma[j] * y(i, j);
            s += d * d;
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

}  // namespace

AccuracyReport accuracy_report(const DenseMatrix& a, const DenseMatrix& u,
                               const std::vector<double>& sigma, const DenseMatrix& v,
                               const std::optional<std::vector<double>>& delta,
                               bool paper_pairing) {
    if (u.cols() != sigma.size() || v.cols() != sigma.size())
        throw std::invalid_argument("accuracy_report: sigma length must match U and V columns");
    if (u.rows() != a.rows() || v.rows() != a.cols())
        throw std::invalid_argument("accuracy_report: factor shapes do not conform with A");
    if (paper_pairing && a.rows() != a.cols())
        throw std::invalid_argument("accuracy_report: paper pairing needs a square A");

    AccuracyReport rep;
    rep.n = a.cols();
    rep.k = sigma.size();
    const double nd = static_cast<double>(std::max<std::size_t>(rep.n, 1));
    rep.orth_left = gram_defect(u) / nd;
    rep.orth_right = gram_defect(v) / nd;

    if (delta) {
        if (delta->size() != sigma.size())
            throw std::invalid_argument("accuracy_report: delta length differs from sigma");
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            const double d = sigma[i] - (*delta)[i];
            num += d * d;
            den += (*delta)[i] * (*delta)[i];
        }
        rep.value_err = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    }

    if (!sigma.empty()) {
        if (paper_pairing) {
            rep.resid_left = max_pair_residual(a, u, sigma, v, false);
            rep.resid_right = max_pair_residual(a, v, sigma, u, false);
        } else {
            rep.resid_right = max_pair_residual(a, v, sigma, u, false);
            rep.resid_left = max_pair_residual(a, u, sigma, v, true);
        }
    }
    return rep;
}

}  // namespace qdwh
