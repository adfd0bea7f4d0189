#pragma once

#include "qdwh/matrix.hpp"

namespace qdwh {

struct EigResult {
    std::vector<double> lambda;  // ascending
    DenseMatrix v;               // orthogonal, column i pairs with lambda[i]
    std::size_t depth = 0;       // recursion depth reached
};

struct SvdResult {
    DenseMatrix u;
    std::vector<double> sigma;  // descending
    DenseMatrix v;
};

// Full symmetric eigendecomposition by spectral divide and conquer: shift by
// the trace mean, split with the projector (I - Up)/2, Rayleigh-Ritz on each
// invariant subspace, recurse down to base_size and finish densely.
// Correctness-grade baseline, not a performance solver.
EigResult qdwh_eig_full(const DenseMatrix& a, std::size_t base_size = 32);

// Full SVD via the polar factor: A = Up H, H = V diag(sigma) V', U = Up V.
SvdResult qdwh_svd_full(const DenseMatrix& a, std::size_t base_size = 32);

}  // namespace qdwh
