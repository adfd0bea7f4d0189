#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdwh/matrix.hpp"

namespace qdwh {

enum class SolverKind {
    StdEig,
    QdwhEigFull,
    PartialEig,
    StdSvd,
    QdwhSvdFull,
    PartialSvd,
};

const char* solver_kind_name(SolverKind kind);
SolverKind solver_kind_from_name(const std::string& name);

struct FlopEstimate {
    SolverKind kind = SolverKind::StdEig;
    std::size_t n = 0;
    std::size_t n_s = 0;
    std::size_t it_qr = 0;
    std::size_t it_chol = 0;
    double total = 0.0;
    std::vector<std::pair<std::string, double>> breakdown;
};

// Closed-form operation counts per solver. Partial solvers follow the
// published per-term model; the full QDWH variants are modeled as the partial
// pipeline with n_s = n (no truncation savings), which keeps them inside the
// published full-solver ranges for the usual iteration mixes.
FlopEstimate flop_estimate(SolverKind kind, std::size_t n, std::size_t n_s, std::size_t it_qr,
                           std::size_t it_chol);

}  // namespace qdwh
