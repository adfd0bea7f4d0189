#pragma once

#include "qdwh/matrix.hpp"

namespace qdwh {

struct SymEigTestMatrix {
    DenseMatrix a;          // symmetric n x n
    std::vector<double> d;  // planted eigenvalues, construction order
};

// Symmetric test matrix with exactly k negative eigenvalues:
// d[i] = -k*m_i for i < k and d[i] = n - k*m_i otherwise, with m_i = |N(0,1)| + 0.1
// so the signs cannot flip; A = Q1 diag(d) Q1' for a seeded random orthogonal Q1.
SymEigTestMatrix gen_sym_eig_test(std::size_t n, std::size_t k, Seed seed);

struct SvdTestMatrix {
    DenseMatrix a;
    std::vector<double> d;  // planted singular values, descending
};

// General test matrix whose singular values follow the geometric series
// sigma_i = 0.5^(100 i / n); A = Q1 diag(d) Q2' with independent seeded
// orthogonal factors. cond_2(A) = 2^(100 (1 - 1/n)).
SvdTestMatrix gen_svd_test(std::size_t n, Seed seed);

// Fraction of the geometric spectrum above the relative threshold s:
// log2(1/s)/100, clamped to (0, 1].
double expected_fraction(double s);

}  // namespace qdwh
