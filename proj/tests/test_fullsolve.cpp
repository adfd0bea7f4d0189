#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdwh/fullsolve.hpp"
#include "qdwh/kernels.hpp"
#include "qdwh/matgen.hpp"
#include "qdwh/polar.hpp"
#include "test_util.hpp"

using namespace qdwh;
using testutil::orth_defect;

namespace {

double max_eig_residual(const DenseMatrix& a, const EigResult& e) {
    DenseMatrix vl = e.v;
    for (std::size_t j = 0; j < e.v.cols(); ++j)
        for (std::size_t i = 0; i < e.v.rows(); ++i) vl(i, j) *= e.lambda[j];
    return frobenius_norm(sub(matmul(a, e.v), vl));
}

}  // namespace

TEST_CASE("qdwh_eig_full on analytic inputs") {
    {
        DenseMatrix d(8, 8);
        for (std::size_t i = 0; i < 8; ++i) d(i, i) = static_cast<double>(i + 1);
        const EigResult e = qdwh_eig_full(d, 2);
        for (std::size_t i = 0; i < 8; ++i)
            CHECK(e.lambda[i] == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-12));
        CHECK(orth_defect(e.v) <= 1e-12);
    }
    {
        DenseMatrix s(2, 2);
        s(0, 1) = 1.0;
        s(1, 0) = 1.0;
        const EigResult e = qdwh_eig_full(s);
        CHECK(e.lambda[0] == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(e.lambda[1] == doctest::Approx(1.0).epsilon(1e-13));
    }
    {
        // constant-diagonal input: the shift exhausts the spectrum
        const EigResult e = qdwh_eig_full(scaled(DenseMatrix::identity(40), 2.5), 8);
        for (double v : e.lambda) CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
    }
}

TEST_CASE("qdwh_eig_full matches the dense oracle on seeded matrices") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const std::size_t n = 16 + (s % 5) * 28;  // up to 128
        const std::size_t k = 1 + n / 7;
        const SymEigTestMatrix gen = gen_sym_eig_test(n, k, Seed{400 + s});
        const EigResult e = qdwh_eig_full(gen.a);
        const SymEig oracle = sym_eig_dense(gen.a);
        const double norm2 = std::max(std::abs(oracle.values.front()),
                                      std::abs(oracle.values.back()));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(e.lambda[i] - oracle.values[i]) <= 1e-12 * norm2);
        CHECK(max_eig_residual(gen.a, e) <= 1e-12 * frobenius_norm(gen.a));
        CHECK(orth_defect(e.v) / std::sqrt(static_cast<double>(n)) <= 1e-13);
    }
}

TEST_CASE("the polar projector of a shifted symmetric matrix is near-idempotent") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const std::size_t n = 32;
        const SymEigTestMatrix gen = gen_sym_eig_test(n, 5 + s, Seed{500 + s});
        DenseMatrix shifted = gen.a;
        const double sigma = trace(gen.a) / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= sigma;
        const PolarResult p = polar_decompose(shifted);
        DenseMatrix c = scaled(p.up, -0.5);
        for (std::size_t i = 0; i < n; ++i) c(i, i) += 0.5;
        CHECK(frobenius_norm(sub(matmul(c, c), c)) <= 1e-12 * static_cast<double>(n));
        const double tr = trace(c);
        CHECK(std::abs(tr - std::round(tr)) <= 0.01);
    }
}

TEST_CASE("qdwh_svd_full on analytic inputs") {
    {
        DenseMatrix d(3, 3);
        d(0, 0) = 3.0;
        d(1, 1) = 1.0;
        d(2, 2) = 2.0;
        const SvdResult s = qdwh_svd_full(d);
        CHECK(s.sigma[0] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(s.sigma[1] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(s.sigma[2] == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        const DenseMatrix q = testutil::random_orthogonal(6, Seed{61});
        const SvdResult s = qdwh_svd_full(q);
        for (double v : s.sigma) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(frobenius_norm(sub(s.u, matmul(q, s.v))) <= 1e-12);
    }
}

TEST_CASE("qdwh_svd_full matches the dense oracle on a seeded 96x64 matrix") {
    const DenseMatrix a = gaussian_matrix(96, 64, Seed{62});
    const SvdResult s = qdwh_svd_full(a);
    const Svd oracle = svd_dense(a);
    for (std::size_t i = 0; i < 64; ++i)
        CHECK(std::abs(s.sigma[i] - oracle.sigma[i]) <= 1e-12 * oracle.sigma[i]);
    DenseMatrix us = s.u;
    for (std::size_t j = 0; j < 64; ++j)
        for (std::size_t i = 0; i < 96; ++i) us(i, j) *= s.sigma[j];
    CHECK(frobenius_norm(sub(matmul_nt(us, s.v), a)) <= 1e-12 * frobenius_norm(a));
    CHECK(orth_defect(s.u) <= 1e-12);
    CHECK(orth_defect(s.v) <= 1e-12);
}

TEST_CASE("fullsolve input validation") {
    CHECK_THROWS_AS(qdwh_eig_full(gaussian_matrix(4, 3, Seed{1})), std::invalid_argument);
    CHECK_THROWS_AS(qdwh_svd_full(gaussian_matrix(3, 4, Seed{1})), std::invalid_argument);
}
