#pragma once

#include <optional>

#include "qdwh/matrix.hpp"

namespace qdwh {

// Accuracy metrics for a computed (partial) decomposition A ~ U diag(sigma) V'.
// Orthogonality uses ||I - U'U||_F / n, keeping the historical 1/n scaling so
// numbers are comparable across solvers of the same size.
struct AccuracyReport {
    double orth_left = 0.0;
    double orth_right = 0.0;
    std::optional<double> value_err;  // ||sigma - delta||_F / ||delta||_F
    double resid_right = 0.0;         // max_i ||A v_i - sigma_i u_i||_2
    double resid_left = 0.0;          // max_i ||A' u_i - sigma_i v_i||_2
    std::size_t n = 0;
    std::size_t k = 0;
};

// When paper_pairing is set the residuals swap the vector each sigma is
// paired with (max ||A u_i - sigma_i v_i|| and max ||A v_i - sigma_i u_i||),
// which only makes sense for square A. For a symmetric eigenreport pass
// U = V and the eigenvalues as sigma.
AccuracyReport accuracy_report(const DenseMatrix& a, const DenseMatrix& u,
                               const std::vector<double>& sigma, const DenseMatrix& v,
                               const std::optional<std::vector<double>>& delta = std::nullopt,
                               bool paper_pairing = false);

}  // namespace qdwh
