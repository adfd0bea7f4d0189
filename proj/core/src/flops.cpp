#include "qdwh/flops.hpp"

#include <stdexcept>

namespace qdwh {

const char* solver_kind_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::StdEig: return "std-eig";
        case SolverKind::QdwhEigFull: return "qdwh-eig-full";
        case SolverKind::PartialEig: return "partial-eig";
        case SolverKind::StdSvd: return "std-svd";
        case SolverKind::QdwhSvdFull: return "qdwh-svd-full";
        case SolverKind::PartialSvd: return "partial-svd";
    }
    throw std::invalid_argument("solver_kind_name: unknown kind");
}

SolverKind solver_kind_from_name(const std::string& name) {
    if (name == "std-eig") return SolverKind::StdEig;
    if (name == "qdwh-eig-full") return SolverKind::QdwhEigFull;
    if (name == "partial-eig") return SolverKind::PartialEig;
    if (name == "std-svd") return SolverKind::StdSvd;
    if (name == "qdwh-svd-full") return SolverKind::QdwhSvdFull;
    if (name == "partial-svd") return SolverKind::PartialSvd;
    throw std::invalid_argument("solver_kind_from_name: unknown kind '" + name + "'");
}

FlopEstimate flop_estimate(SolverKind kind, std::size_t n, std::size_t n_s, std::size_t it_qr,
                           std::size_t it_chol) {
    if (n_s > n) throw std::invalid_argument("flop_estimate: n_s must not exceed n");
    FlopEstimate est;
    est.kind = kind;
    est.n = n;
    est.n_s = n_s;
    est.it_qr = it_qr;
    est.it_chol = it_chol;

    const double nd = static_cast<double>(n);
    const double ns = static_cast<double>(n_s);
    const double n3 = nd * nd * nd;
    const double ns3 = ns * ns * ns;
    auto term = [&est](const std::string& label, double flops) {
        est.breakdown.emplace_back(label, flops);
        est.total += flops;
    };

    switch (kind) {
        case SolverKind::StdEig:
            term("eig", 9.0 * n3);
            break;
        case SolverKind::StdSvd:
            term("svd", 17.0 * n3);
            break;
        case SolverKind::PartialEig:
            term("qdwh", (4.0 + 1.0 / 3.0) * n3 * static_cast<double>(it_chol));
            term("qr", 4.0 / 3.0 * n3);
            term("syrk", ns * nd * nd);
            term("gemm", 2.0 * ns * ns * nd);
            term("eig", 9.0 * ns3);
            break;
        case SolverKind::PartialSvd:
            term("qdwh_qr", (8.0 + 2.0 / 3.0) * n3 * static_cast<double>(it_qr));
            term("qdwh_chol", (4.0 + 1.0 / 3.0) * n3 * static_cast<double>(it_chol));
            term("qr", 4.0 / 3.0 * n3);
            term("syrk", n3);
            term("gemm", 4.0 * nd * ns * ns);
            term("svd", 17.0 * ns3);
            break;
        case SolverKind::QdwhEigFull: {
            est = flop_estimate(SolverKind::PartialEig, n, n, it_qr, it_chol);
            est.kind = kind;
            return est;
        }
        case SolverKind::QdwhSvdFull: {
            est = flop_estimate(SolverKind::PartialSvd, n, n, it_qr, it_chol);
            est.kind = kind;
            return est;
        }
    }
    return est;
}

}  // namespace qdwh
