#pragma once

#include <optional>

#include "qdwh/matrix.hpp"
#include "qdwh/polar.hpp"

namespace qdwh {

enum class PlanKind { TwoStep, ThreeStep, SvdThreshold };

// Shift placing the composed rational's transition so that the wanted part of
// the spectrum is mapped flat. For the eigensolver the (iters, s) pairs are
// tabulated; SVD runs carry a user threshold instead.
struct ShiftPlan {
    double s = 0.2;
    std::size_t qdwh_iters = 3;
    PlanKind kind = PlanKind::ThreeStep;
};

// Tabulated shift for a 2- or 3-iteration eigensolver plan. Three iterations
// (s = 0.2) is the recommended default; anything else throws.
ShiftPlan choose_shift(std::size_t qdwh_iters);

// Smallest 1-based i with |R(i,i)| < tol, or nullopt when the diagonal never
// drops below tol. The detected subspace size is n - i + 1.
std::optional<std::size_t> detect_deficiency_index(const DenseMatrix& r, double tol = 0.01);

struct PartialEigDiagnostics {
    std::vector<double> ell_trace;
    double tol = 0.01;
    std::size_t iters_qr = 0;
    std::size_t iters_chol = 0;
    std::size_t borderline = 0;  // eigenvalues kept from [-n*u*||A||, 0)
    bool no_savings = false;     // detected subspace larger than n/2
    bool randomized = false;
};

struct PartialEigResult {
    std::vector<double> lambda_minus;  // negative eigenvalues, ascending
    DenseMatrix v;                     // n x k eigenvectors
    std::size_t subspace_size = 0;     // columns retained from Q
    double mu = 0.0;                   // Lanczos lower bound used as scale
    double shift = 0.0;
    std::size_t rank_index = 0;        // 1-based deficiency index, 0 when none
    PartialEigDiagnostics diagnostics;

    std::size_t count() const { return lambda_minus.size(); }
    bool empty() const { return lambda_minus.empty(); }
};

// Negative eigenvalues and eigenvectors of a symmetric matrix without forming
// the full polar factor: map them to -1 with a shifted composed rational,
// read the deficiency off diag(R), then Rayleigh-Ritz on the trailing Q block.
PartialEigResult qdwh_partial_eig(const DenseMatrix& a, const ShiftPlan& plan,
                                  bool use_randomization = false, double tol = 0.01,
                                  Seed seed = {});

struct PartialSvdDiagnostics {
    std::vector<double> ell_trace;
    double tol = 0.01;
    std::size_t iters_qr = 0;
    std::size_t iters_chol = 0;
    std::size_t rank_index = 0;
    bool no_savings = false;
    bool randomized = false;
};

struct PartialSvdResult {
    DenseMatrix u1;             // m x k
    std::vector<double> sigma1; // descending, all > s * alpha
    DenseMatrix v1;             // n x k
    std::size_t subspace_size = 0;
    double alpha = 0.0;         // norm estimate used for scaling
    double threshold = 0.0;     // the relative threshold s
    PartialSvdDiagnostics diagnostics;

    std::size_t count() const { return sigma1.size(); }
    bool empty() const { return sigma1.empty(); }
};

// Truncated SVD keeping singular values above s*||A||_2. The iteration count
// is fixed up front from the scalar ell recurrence; when s < 1e-3 the first
// step uses the QR-based iteration.
PartialSvdResult qdwh_partial_svd(const DenseMatrix& a, double s, double tol = 0.01,
                                  bool use_randomization = false, Seed seed = {});

// Largest canonical-angle sine between span(V0) and span(Q2), computed as
// sigma_max(V0' Q1) for the complement Q1.
double subspace_sin_angle(const DenseMatrix& v0, const DenseMatrix& q2, const DenseMatrix& q1);

struct PertBound {
    double lhs = 0.0;  // sin angle(V0, Q2)
    double rhs = 0.0;  // ||V0' B||_2 / sigma_min(R11), +inf when R11 is singular
};

// Checks the subspace-containment bound on one (B, V0, ell) instance: the QR
// of B is split with R11 of size (m-ell), and lhs <= rhs must hold.
PertBound verify_pert_bound(const DenseMatrix& b, const DenseMatrix& v0, std::size_t ell);

}  // namespace qdwh
