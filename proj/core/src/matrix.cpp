#include "qdwh/matrix.hpp"

#include <cmath>
#include <cstring>

namespace qdwh {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
    return t;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    const std::size_t m = a.rows(), n = b.cols(), k = a.cols();
    DenseMatrix c(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        double* cj = c.col(j);
        const double* bj = b.col(j);
        for (std::size_t p = 0; p < k; ++p) {
            const double bpj = bj[p];
            if (bpj == 0.0) continue;
            const double* ap = a.col(p);
            for (std::size_t i = 0; i < m; ++i) cj[i] += ap[i] * bpj;
        }
    }
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: inner dimensions differ");
    const std::size_t m = a.cols(), n = b.cols(), k = a.rows();
    DenseMatrix c(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const double* bj = b.col(j);
        double* cj = c.col(j);
        for (std::size_t i = 0; i < m; ++i) {
            const double* ai = a.col(i);
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            cj[i] = s;
        }
    }
    return c;
}

DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matmul_nt: inner dimensions differ");
    const std::size_t m = a.rows(), n = b.rows(), k = a.cols();
    DenseMatrix c(m, n);
    for (std::size_t p = 0; p < k; ++p) {
        const double* ap = a.col(p);
        const double* bp = b.col(p);
        for (std::size_t j = 0; j < n; ++j) {
            const double bjp = bp[j];
            if (bjp == 0.0) continue;
            double* cj = c.col(j);
            for (std::size_t i = 0; i < m; ++i) cj[i] += ap[i] * bjp;
        }
    }
    return c;
}

DenseMatrix scaled(const DenseMatrix& a, double s) {
    DenseMatrix c = a;
    double* d = c.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) d[i] *= s;
    return c;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shapes differ");
    DenseMatrix c = a;
    double* d = c.data();
    const double* e = b.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) d[i] += e[i];
    return c;
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sub: shapes differ");
    DenseMatrix c = a;
    double* d = c.data();
    const double* e = b.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) d[i] -= e[i];
    return c;
}

DenseMatrix symmetrize(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetrize: matrix not square");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = 0.5 * (a(i, j) + a(j, i));
    return c;
}

DenseMatrix column_block(const DenseMatrix& a, std::size_t first, std::size_t count) {
    if (first + count > a.cols()) throw std::invalid_argument("column_block: range out of bounds");
    DenseMatrix c(a.rows(), count);
    std::memcpy(c.data(), a.col(first), sizeof(double) * a.rows() * count);
    return c;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    const double* d = a.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) s += d[i] * d[i];
    return std::sqrt(s);
}

double max_abs(const DenseMatrix& a) {
    double s = 0.0;
    const double* d = a.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) s = std::max(s, std::abs(d[i]));
    return s;
}

double trace(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
    return s;
}

bool all_finite(const DenseMatrix& a) {
    const double* d = a.data();
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        if (!std::isfinite(d[i])) return false;
    return true;
}

void require_finite(const DenseMatrix& a, const char* who) {
    if (a.rows() == 0 || a.cols() == 0)
        throw std::invalid_argument(std::string(who) + ": empty matrix");
    if (!all_finite(a)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

}  // namespace qdwh
