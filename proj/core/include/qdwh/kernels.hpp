#pragma once

#include "qdwh/matrix.hpp"

namespace qdwh {

struct QrFactors {
    DenseMatrix q;  // m x m orthogonal
    DenseMatrix r;  // m x n, zero below the diagonal
};

// Householder QR with explicitly accumulated full Q. No column pivoting;
// consumers that scan diag(R) rely on |R(i,i)| only, so diagonal signs are
// left as the reflectors produce them.
QrFactors qr_factor(const DenseMatrix& a);

// First ncols columns of Q plus R. Same factorization, cheaper accumulation.
QrFactors qr_factor_thin(const DenseMatrix& a, std::size_t ncols);

// Upper-triangular W with Z = W' W. Throws NotPositiveDefinite on a
// non-positive pivot.
DenseMatrix cholesky(const DenseMatrix& z);

struct SymEig {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // n x n orthogonal, column i pairs with values[i]
};

// Cyclic Jacobi eigensolver for symmetric matrices.
SymEig sym_eig_dense(const DenseMatrix& s);

struct Svd {
    DenseMatrix u;              // m x min(m,n), orthonormal columns
    std::vector<double> sigma;  // descending, >= 0
    DenseMatrix v;              // n x min(m,n), orthonormal columns
};

// One-sided Jacobi SVD.
Svd svd_dense(const DenseMatrix& a);

// Power iteration on A'A until relative change < 1e-3 (at most 100 steps),
// inflated by 1.05 so that sigma_max(A / result) <= 1. Throws on a zero matrix.
double two_norm_estimate(const DenseMatrix& a);

// Lower bound mu <= lambda_min(A) from `steps` Lanczos steps with full
// reorthogonalization. The Ritz bound theta_min - beta*|s_last| is inflated by
// 10% when negative. A positive return means no negative eigenvalues were found.
double lanczos_min_bound(const DenseMatrix& a, std::size_t steps = 30);

// i.i.d. standard normal entries from a counter-based generator; pure
// function of (m, n, seed).
DenseMatrix gaussian_matrix(std::size_t m, std::size_t n, Seed seed);

}  // namespace qdwh
