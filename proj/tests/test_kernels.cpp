#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qdwh/kernels.hpp"
#include "qdwh/matgen.hpp"
#include "test_util.hpp"

using namespace qdwh;
using testutil::orth_defect;

namespace {
constexpr double kU = std::numeric_limits<double>::epsilon();
}

TEST_CASE("qr_factor identity and orthogonal inputs") {
    {
        const DenseMatrix i3 = DenseMatrix::identity(3);
        const QrFactors f = qr_factor(i3);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(std::abs(f.r(j, j)) - 1.0) < 1e-14);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(std::abs(std::abs(f.q(i, j)) - (i == j ? 1.0 : 0.0)) < 1e-14);
        }
        CHECK(frobenius_norm(sub(matmul(f.q, f.r), i3)) < 1e-14);
    }
    {
        DenseMatrix swap2(2, 2);
        swap2(0, 1) = 1.0;
        swap2(1, 0) = 1.0;
        const QrFactors f = qr_factor(swap2);
        CHECK(std::abs(std::abs(f.r(0, 0)) - 1.0) < 1e-14);
        CHECK(std::abs(std::abs(f.r(1, 1)) - 1.0) < 1e-14);
        // Q must be a signed permutation
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i) {
                const double v = std::abs(f.q(i, j));
                CHECK((v < 1e-14 || std::abs(v - 1.0) < 1e-14));
            }
    }
}

TEST_CASE("qr_factor reassembles the input") {
    const DenseMatrix a = gaussian_matrix(5, 5, Seed{42});
    const QrFactors f = qr_factor(a);
    CHECK(frobenius_norm(sub(matmul(f.q, f.r), a)) <= 1e-14 * frobenius_norm(a));
}

TEST_CASE("qr_factor defect bounds over random shapes") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const std::size_t m = 6 + (s % 5) * 7;
        const std::size_t n = 1 + m / 2 + (s % 3);
        const DenseMatrix a = gaussian_matrix(m, n, Seed{100 + s});
        const QrFactors f = qr_factor(a);
        const double md = static_cast<double>(m);
        CHECK(orth_defect(f.q) <= 50.0 * md * kU);
        CHECK(frobenius_norm(sub(matmul(f.q, f.r), a)) <= 50.0 * md * kU * frobenius_norm(a));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = j + 1; i < m; ++i) CHECK(f.r(i, j) == 0.0);
    }
}

TEST_CASE("qr_factor of orthogonal columns leaves a unit diagonal") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const DenseMatrix q = testutil::random_orthogonal(12, Seed{7 + s});
        const QrFactors f = qr_factor(q);
        for (std::size_t i = 0; i < 12; ++i)
            CHECK(std::abs(std::abs(f.r(i, i)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("qr_factor rejects bad input") {
    DenseMatrix bad(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(qr_factor(bad), std::invalid_argument);
    CHECK_THROWS_AS(qr_factor(DenseMatrix{}), std::invalid_argument);
}

TEST_CASE("cholesky closed forms") {
    CHECK(frobenius_norm(sub(cholesky(DenseMatrix::identity(4)), DenseMatrix::identity(4))) == 0.0);

    DenseMatrix d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const DenseMatrix w = cholesky(d);
    CHECK(w(0, 0) == 2.0);
    CHECK(w(1, 1) == 3.0);
    CHECK(w(0, 1) == 0.0);

    DenseMatrix z(2, 2);
    z(0, 0) = 2.0;
    z(0, 1) = 1.0;
    z(1, 0) = 1.0;
    z(1, 1) = 2.0;
    const DenseMatrix w2 = cholesky(z);
    CHECK(w2(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w2(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(w2(1, 1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(w2(1, 0) == 0.0);
}

TEST_CASE("cholesky identity holds on random SPD matrices") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const std::size_t n = 5 + s * 3;
        const DenseMatrix b = gaussian_matrix(n + 4, n, Seed{200 + s});
        const DenseMatrix z = symmetrize(matmul_tn(b, b));
        const DenseMatrix w = cholesky(z);
        CHECK(frobenius_norm(sub(matmul_tn(w, w), z)) <=
              50.0 * static_cast<double>(n) * kU * frobenius_norm(z));
        for (std::size_t i = 0; i < n; ++i) CHECK(w(i, i) > 0.0);
    }
}

TEST_CASE("cholesky reports indefinite input") {
    DenseMatrix z(2, 2);
    z(0, 0) = 1.0;
    z(0, 1) = 2.0;
    z(1, 0) = 2.0;
    z(1, 1) = 1.0;  // eigenvalues 3 and -1
    CHECK_THROWS_AS(cholesky(z), NotPositiveDefinite);
}

TEST_CASE("sym_eig_dense analytic cases") {
    {
        const SymEig e = sym_eig_dense(DenseMatrix::identity(4));
        for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
    {
        DenseMatrix s(2, 2);
        s(0, 1) = 1.0;
        s(1, 0) = 1.0;
        const SymEig e = sym_eig_dense(s);
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(std::abs(std::abs(e.vectors(i, j)) - inv_sqrt2) < 1e-14);
    }
}

TEST_CASE("sym_eig_dense defining identities on a random matrix") {
    const DenseMatrix s = symmetrize(gaussian_matrix(20, 20, Seed{5}));
    const SymEig e = sym_eig_dense(s);
    DenseMatrix vl = e.vectors;
    for (std::size_t j = 0; j < 20; ++j)
        for (std::size_t i = 0; i < 20; ++i) vl(i, j) *= e.values[j];
    CHECK(frobenius_norm(sub(matmul(s, e.vectors), vl)) <= 1e-13 * frobenius_norm(s));
    CHECK(orth_defect(e.vectors) <= 1e-13);
    for (std::size_t i = 0; i + 1 < 20; ++i) CHECK(e.values[i] <= e.values[i + 1]);
}

TEST_CASE("sym_eig_dense rejects a non-symmetric matrix") {
    DenseMatrix s(3, 3);
    s(0, 1) = 1.0;
    s(1, 0) = 0.5;
    CHECK_THROWS_AS(sym_eig_dense(s), std::invalid_argument);
}

TEST_CASE("svd_dense analytic cases") {
    {
        DenseMatrix d(3, 3);
        d(0, 0) = 3.0;
        d(1, 1) = 2.0;
        d(2, 2) = 1.0;
        const Svd s = svd_dense(d);
        CHECK(s.sigma[0] == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(s.sigma[1] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(s.sigma[2] == doctest::Approx(1.0).epsilon(1e-15));
    }
    {
        // rank one: sigma = ||u|| * ||v||
        DenseMatrix u(3, 1), v(3, 1);
        u(0, 0) = 2.0;
        v(1, 0) = 3.0;
        const Svd s = svd_dense(matmul_nt(u, v));
        CHECK(s.sigma[0] == doctest::Approx(6.0).epsilon(1e-14));
        CHECK(s.sigma[1] <= 1e-14);
        CHECK(s.sigma[2] <= 1e-14);
        CHECK(orth_defect(s.u) <= 1e-13);
        CHECK(orth_defect(s.v) <= 1e-13);
    }
    {
        const Svd s = svd_dense(DenseMatrix::identity(5));
        for (double v : s.sigma) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("svd_dense defining identity over random shapes") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const std::size_t m = 8 + (s % 4) * 6;
        const std::size_t n = 5 + (s % 3) * 4;
        const DenseMatrix a = gaussian_matrix(m, n, Seed{300 + s});
        const Svd f = svd_dense(a);
        const std::size_t kmin = std::min(m, n);
        DenseMatrix us = f.u;
        for (std::size_t j = 0; j < kmin; ++j)
            for (std::size_t i = 0; i < f.u.rows(); ++i) us(i, j) *= f.sigma[j];
        CHECK(frobenius_norm(sub(matmul_nt(us, f.v), a)) <=
              50.0 * static_cast<double>(std::max(m, n)) * kU * frobenius_norm(a));
        CHECK(orth_defect(f.u) <= 50.0 * static_cast<double>(m) * kU);
        CHECK(orth_defect(f.v) <= 50.0 * static_cast<double>(n) * kU);
        for (std::size_t i = 0; i + 1 < kmin; ++i) CHECK(f.sigma[i] >= f.sigma[i + 1]);
        CHECK(f.sigma.back() >= 0.0);
    }
}

TEST_CASE("two_norm_estimate brackets the true norm") {
    {
        DenseMatrix d(3, 3);
        d(0, 0) = 1.0;
        d(1, 1) = 2.0;
        d(2, 2) = 3.0;
        const double a = two_norm_estimate(d);
        CHECK(a >= 3.0);
        CHECK(a <= 3.15);
    }
    {
        const double a = two_norm_estimate(DenseMatrix::identity(6));
        CHECK(a >= 1.0);
        CHECK(a <= 1.05 + 1e-12);
    }
    {
        const DenseMatrix a = gaussian_matrix(64, 64, Seed{77});
        const double est = two_norm_estimate(a);
        const double truth = svd_dense(a).sigma[0];
        CHECK(est / truth >= 0.99);
        CHECK(est / truth <= 1.10);
    }
    CHECK_THROWS_AS(two_norm_estimate(DenseMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("two_norm_estimate never underestimates on 100 seeded matrices") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t n = 8 + (s % 5) * 6;
        const DenseMatrix a = gaussian_matrix(n, n, Seed{1000 + s});
        const double est = two_norm_estimate(a);
        const double truth = svd_dense(a).sigma[0];
        CHECK(est >= 0.99 * truth);
        CHECK(est <= 1.10 * truth);
    }
}

TEST_CASE("lanczos_min_bound analytic cases") {
    {
        const double mu = lanczos_min_bound(scaled(DenseMatrix::identity(8), -1.0));
        CHECK(mu <= -1.0);
        CHECK(mu >= -1.2);
    }
    {
        DenseMatrix d(6, 6);
        const double diag[6] = {-5.0, -1.0, 1.0, 2.0, 3.0, 4.0};
        for (std::size_t i = 0; i < 6; ++i) d(i, i) = diag[i];
        const double mu = lanczos_min_bound(d);
        CHECK(mu <= -5.0);
        CHECK(std::abs(mu) <= 5.6);
    }
    {
        DenseMatrix d(16, 16);
        for (std::size_t i = 0; i < 16; ++i) d(i, i) = static_cast<double>(i + 1);
        CHECK(lanczos_min_bound(d) >= 0.0);  // no negative eigenvalues to find
    }
    DenseMatrix ns(3, 3);
    ns(0, 1) = 1.0;
    CHECK_THROWS_AS(lanczos_min_bound(ns), std::invalid_argument);
}

TEST_CASE("lanczos_min_bound is a lower bound on 100 seeded diagonal matrices") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const std::size_t n = 6 + (s % 8) * 4;
        const DenseMatrix g = gaussian_matrix(n, 1, Seed{2000 + s});
        DenseMatrix d(n, n);
        double lmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = 3.0 * g(i, 0);
            lmin = std::min(lmin, d(i, i));
        }
        CHECK(lanczos_min_bound(d) <= lmin);
    }
}

TEST_CASE("gaussian_matrix determinism, shape, and moments") {
    CHECK(gaussian_matrix(2, 2, Seed{0}) == gaussian_matrix(2, 2, Seed{0}));
    CHECK(gaussian_matrix(2, 2, Seed{0}) != gaussian_matrix(2, 2, Seed{1}));

    const DenseMatrix g = gaussian_matrix(3, 5, Seed{7});
    CHECK(g.rows() == 3);
    CHECK(g.cols() == 5);

    const DenseMatrix v = gaussian_matrix(1000, 1, Seed{7});
    double mean = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) mean += v(i, 0);
    mean /= 1000.0;
    double var = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) var += (v(i, 0) - mean) * (v(i, 0) - mean);
    var /= 999.0;
    CHECK(std::abs(mean) <= 0.15);
    CHECK(var >= 0.8);
    CHECK(var <= 1.2);
}
