#pragma once

#include <optional>

#include "qdwh/matrix.hpp"

namespace qdwh {

// One dynamically weighted Halley step. The coefficients make
// r(x) = x(a + b x^2)/(1 + c x^2) the scaled type-(3,2) best rational
// approximation of sign on [-1,-ell] U [ell,1]; ell_out = r(ell_in).
struct WeightStep {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double ell_in = 0.0;
    double ell_out = 0.0;
};

// Note: the textbook weight expression mixes complex notation; for
// ell in (0,1] every intermediate here is real, so plain doubles suffice.
WeightStep halley_weights(double ell);

// r_{iters} o ... o r_1 applied to a scalar, weights following the ell
// recurrence from ell0. The scalar oracle for every matrix driver.
double composed_rational(double x, double ell0, std::size_t iters);

// Number of steps of the scalar ell recurrence until |ell - 1| < eps.
// Throws NotConverged past max_iters.
std::size_t iterations_to_converge(double ell0, double eps, std::size_t max_iters = 60);

enum class PolarVariant { Auto, QrOnly, CholeskyOnly };

struct PolarConfig {
    double ell0 = 1e-15;       // lower bound on sigma(A)/||A||_2, e.g. 1/cond
    std::size_t max_iters = 60;
    double conv_eps = 2.220446049250313e-16;  // stop when |ell - 1| < 5*conv_eps
    double chol_switch_c = 100.0;             // use QR steps while c_k exceeds this
    PolarVariant force_variant = PolarVariant::Auto;
};

struct PolarResult {
    DenseMatrix up;       // orthogonal polar factor
    DenseMatrix h;        // symmetric positive semidefinite factor, A = Up H
    double alpha = 0.0;   // two-norm estimate used for the initial scaling
    std::size_t iters_qr = 0;
    std::size_t iters_chol = 0;
    std::vector<double> ell_trace;  // ell0 followed by each update
    bool converged = false;
};

// X+ = (b/c) X + (1/sqrt(c)) (a - b/c) Q1 Q2' from the QR of [sqrt(c) X; I].
DenseMatrix qdwh_qr_step(const DenseMatrix& x, const WeightStep& w);

// X+ = (b/c) X + (a - b/c) (X W^-1) W^-T with W = chol(I + c X'X).
// Throws NotPositiveDefinite; callers may retry with qdwh_qr_step.
DenseMatrix qdwh_chol_step(const DenseMatrix& x, const WeightStep& w);

// QDWH polar decomposition of an m x n (m >= n) full-column-rank matrix.
PolarResult polar_decompose(const DenseMatrix& a, const PolarConfig& cfg = {});

enum class FixedVariant { QrFirst, CholeskyOnly };

struct FixedIterResult {
    DenseMatrix x;
    double ell = 0.0;
    std::vector<double> ell_trace;
    std::size_t iters_qr = 0;
    std::size_t iters_chol = 0;
};

// Exactly `iters` weighted Halley steps from ell0; symmetric inputs are
// re-symmetrized after every step so the partial-EIG path cannot drift.
FixedIterResult run_fixed_iterations(const DenseMatrix& x0, double ell0, std::size_t iters,
                                     FixedVariant variant);

}  // namespace qdwh
