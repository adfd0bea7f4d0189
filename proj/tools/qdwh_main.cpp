// Command-line harness: generate test matrices, run the full and partial
// solvers, sweep benchmark tables, and check the library's analytic
// properties. Every number printed comes from a library call.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdwh/flops.hpp"
#include "qdwh/fullsolve.hpp"
#include "qdwh/kernels.hpp"
#include "qdwh/matgen.hpp"
#include "qdwh/matrix_io.hpp"
#include "qdwh/metrics.hpp"
#include "qdwh/partial.hpp"
#include "qdwh/polar.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace qdwh;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitError = 1;
constexpr int kExitEmptySpectrum = 2;

using clock_type = std::chrono::steady_clock;

double elapsed_seconds(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

// Wall time is zeroed in machine-readable reports when threads == 1, the
// deterministic reference mode: fixed-seed runs must be byte-identical.
// The measured time always goes to stderr.
double reported_seconds(double measured, int threads) {
    return threads == 1 ? 0.0 : measured;
}

int default_threads() {
    if (const char* env = std::getenv("QDWH_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

fs::path sidecar_path(const fs::path& matrix_path) {
    fs::path p = matrix_path;
    p += ".csv";
    return p;
}

void emit_report(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << text;
    }
    std::cout << text;
}

json accuracy_json(const AccuracyReport& rep) {
    json j;
    j["orth_left"] = rep.orth_left;
    j["orth_right"] = rep.orth_right;
    if (rep.value_err)
        j["value_err"] = *rep.value_err;
    else
        j["value_err"] = nullptr;
    j["resid_right"] = rep.resid_right;
    j["resid_left"] = rep.resid_left;
    j["n"] = rep.n;
    j["k"] = rep.k;
    return j;
}

json flops_json(const FlopEstimate& est) {
    json j;
    j["kind"] = solver_kind_name(est.kind);
    j["n"] = est.n;
    j["n_s"] = est.n_s;
    j["it_qr"] = est.it_qr;
    j["it_chol"] = est.it_chol;
    j["total"] = est.total;
    json breakdown = json::array();
    for (const auto& [label, flops] : est.breakdown)
        breakdown.push_back(json{{"term", label}, {"flops", flops}});
    j["breakdown"] = breakdown;
    return j;
}

// Planted values that survive the solver's filter, for value_err reporting.
std::optional<std::vector<double>> truth_for_eig(const fs::path& in, std::size_t k) {
    const fs::path side = sidecar_path(in);
    if (!fs::exists(side)) return std::nullopt;
    const std::vector<double> truth = read_spectrum_csv(side);
    std::vector<double> negatives;
    for (double v : truth)
        if (v < 0.0) negatives.push_back(v);
    std::sort(negatives.begin(), negatives.end());
    if (negatives.size() != k) return std::nullopt;
    return negatives;
}

std::optional<std::vector<double>> truth_for_svd(const fs::path& in, std::size_t k) {
    const fs::path side = sidecar_path(in);
    if (!fs::exists(side)) return std::nullopt;
    std::vector<double> truth = read_spectrum_csv(side);
    std::sort(truth.begin(), truth.end(), std::greater<double>());
    if (truth.size() < k) return std::nullopt;
    truth.resize(k);
    return truth;
}

struct GenOptions {
    std::string kind = "eig";
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    std::vector<double> spectrum;
    DenseMatrix a;
    if (opt.kind == "eig") {
        if (opt.k == 0) throw std::invalid_argument("--k is required for --kind eig");
        SymEigTestMatrix gen = gen_sym_eig_test(opt.n, opt.k, Seed{opt.seed});
        a = std::move(gen.a);
        spectrum = std::move(gen.d);
    } else if (opt.kind == "svd") {
        SvdTestMatrix gen = gen_svd_test(opt.n, Seed{opt.seed});
        a = std::move(gen.a);
        spectrum = std::move(gen.d);
    } else {
        throw std::invalid_argument("--kind must be eig or svd");
    }
    write_matrix(opt.out, a);
    write_spectrum_csv(sidecar_path(opt.out), spectrum);
    std::cerr << "wrote " << opt.out << " (" << a.rows() << "x" << a.cols() << ") and "
              << sidecar_path(opt.out).string() << "\n";
    return 0;
}

struct SolveOptions {
    std::string solver;
    std::string in;
    std::string out;
    std::size_t iters = 3;
    double s = 0.1;
    double tol = 0.01;
    std::uint64_t seed = 0;
    bool randomize = false;
    int threads = 1;
    std::string format = "json";
};

json solve_common_header(const SolveOptions& opt, const DenseMatrix& a) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["solver"] = opt.solver;
    j["m"] = a.rows();
    j["n"] = a.cols();
    j["params"] = {{"iters", opt.iters},         {"s", opt.s},
                   {"tol", opt.tol},             {"seed", opt.seed},
                   {"randomize", opt.randomize}, {"threads", opt.threads}};
    return j;
}

int run_solve(const SolveOptions& opt) {
    const auto start = clock_type::now();
    const DenseMatrix a = read_matrix(opt.in);
    json report;
    int exit_code = 0;

    if (opt.solver == "partial-eig") {
        const ShiftPlan plan = choose_shift(opt.iters);
        const PartialEigResult r =
            qdwh_partial_eig(a, plan, opt.randomize, opt.tol, Seed{opt.seed});
        report = solve_common_header(opt, a);
        report["shift"] = r.shift;
        report["scale"] = {{"mu", r.mu}};
        report["subspace_size"] = r.subspace_size;
        report["rank_index"] = r.rank_index;
        report["count"] = r.count();
        report["values"] = r.lambda_minus;
        report["ell_trace"] = r.diagnostics.ell_trace;
        report["iterations"] = {{"qr", r.diagnostics.iters_qr},
                                {"chol", r.diagnostics.iters_chol}};
        json warnings = json::array();
        if (r.diagnostics.no_savings) warnings.push_back("no_savings");
        if (r.diagnostics.borderline > 0) warnings.push_back("borderline_values");
        report["warnings"] = warnings;
        if (!r.empty()) {
            report["accuracy"] = accuracy_json(accuracy_report(
                a, r.v, r.lambda_minus, r.v, truth_for_eig(opt.in, r.count())));
        } else {
            report["accuracy"] = nullptr;
            exit_code = kExitEmptySpectrum;
        }
        report["flops"] = flops_json(flop_estimate(SolverKind::PartialEig, a.cols(),
                                                   r.subspace_size, r.diagnostics.iters_qr,
                                                   r.diagnostics.iters_chol));
    } else if (opt.solver == "partial-svd") {
        const PartialSvdResult r =
            qdwh_partial_svd(a, opt.s, opt.tol, opt.randomize, Seed{opt.seed});
        report = solve_common_header(opt, a);
        report["scale"] = {{"alpha", r.alpha}};
        report["subspace_size"] = r.subspace_size;
        report["rank_index"] = r.diagnostics.rank_index;
        report["count"] = r.count();
        report["values"] = r.sigma1;
        report["ell_trace"] = r.diagnostics.ell_trace;
        report["iterations"] = {{"qr", r.diagnostics.iters_qr},
                                {"chol", r.diagnostics.iters_chol}};
        json warnings = json::array();
        if (r.diagnostics.no_savings) warnings.push_back("no_savings");
        report["warnings"] = warnings;
        if (!r.empty()) {
            report["accuracy"] = accuracy_json(accuracy_report(
                a, r.u1, r.sigma1, r.v1, truth_for_svd(opt.in, r.count())));
        } else {
            report["accuracy"] = nullptr;
            exit_code = kExitEmptySpectrum;
        }
        report["flops"] = flops_json(flop_estimate(SolverKind::PartialSvd, a.cols(),
                                                   r.subspace_size, r.diagnostics.iters_qr,
                                                   r.diagnostics.iters_chol));
    } else if (opt.solver == "qdwh-eig") {
        const EigResult r = qdwh_eig_full(a);
        report = solve_common_header(opt, a);
        report["subspace_size"] = a.cols();
        report["count"] = r.lambda.size();
        report["values"] = r.lambda;
        report["depth"] = r.depth;
        std::optional<std::vector<double>> truth;
        if (fs::exists(sidecar_path(opt.in))) {
            std::vector<double> t = read_spectrum_csv(sidecar_path(opt.in));
            std::sort(t.begin(), t.end());
            if (t.size() == r.lambda.size()) truth = std::move(t);
        }
        report["accuracy"] = accuracy_json(accuracy_report(a, r.v, r.lambda, r.v, truth));
        report["flops"] =
            flops_json(flop_estimate(SolverKind::QdwhEigFull, a.cols(), a.cols(), 0, 6));
    } else if (opt.solver == "qdwh-svd") {
        const SvdResult r = qdwh_svd_full(a);
        report = solve_common_header(opt, a);
        report["subspace_size"] = a.cols();
        report["count"] = r.sigma.size();
        report["values"] = r.sigma;
        std::optional<std::vector<double>> truth;
        if (fs::exists(sidecar_path(opt.in))) {
            std::vector<double> t = read_spectrum_csv(sidecar_path(opt.in));
            std::sort(t.begin(), t.end(), std::greater<double>());
            if (t.size() == r.sigma.size()) truth = std::move(t);
        }
        report["accuracy"] = accuracy_json(accuracy_report(a, r.u, r.sigma, r.v, truth));
        report["flops"] =
            flops_json(flop_estimate(SolverKind::QdwhSvdFull, a.cols(), a.cols(), 2, 4));
    } else {
        throw std::invalid_argument(
            "solver must be one of partial-eig, partial-svd, qdwh-eig, qdwh-svd");
    }

    const double measured = elapsed_seconds(start);
    report["seconds"] = reported_seconds(measured, opt.threads);
    emit_report(report, opt.out);
    std::cerr << "# wall " << measured << " s\n";
    return exit_code;
}

struct BenchOptions {
    std::vector<std::string> solvers;
    std::vector<std::size_t> sizes;
    std::vector<double> thresholds;
    double k_frac = 0.1;
    std::size_t iters = 3;
    std::uint64_t seed = 1;
    bool randomize = false;
    int threads = 1;
    std::string out;
    std::string format = "csv";
};

struct BenchRow {
    std::string solver;
    std::size_t n = 0;
    double k_or_s = 0.0;
    std::size_t subspace = 0;
    double value_err = 0.0;
    double orth = 0.0;
    double resid = 0.0;
    double flops = 0.0;
    double seconds = 0.0;
};

BenchRow bench_partial_eig(const BenchOptions& opt, std::size_t n) {
    const std::size_t k =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(opt.k_frac * n)));
    const SymEigTestMatrix gen = gen_sym_eig_test(n, k, Seed{opt.seed});
    const auto start = clock_type::now();
    const PartialEigResult r =
        qdwh_partial_eig(gen.a, choose_shift(opt.iters), opt.randomize, 0.01, Seed{opt.seed});
    const double secs = elapsed_seconds(start);
    std::vector<double> truth;
    for (double v : gen.d)
        if (v < 0.0) truth.push_back(v);
    std::sort(truth.begin(), truth.end());
    std::optional<std::vector<double>> delta;
    if (truth.size() == r.count()) delta = truth;
    const AccuracyReport rep = accuracy_report(gen.a, r.v, r.lambda_minus, r.v, delta);
    const FlopEstimate fl = flop_estimate(SolverKind::PartialEig, n, r.subspace_size,
                                          r.diagnostics.iters_qr, r.diagnostics.iters_chol);
    return BenchRow{"partial-eig",
                    n,
                    static_cast<double>(k),
                    r.subspace_size,
                    rep.value_err.value_or(0.0),
                    std::max(rep.orth_left, rep.orth_right),
                    std::max(rep.resid_left, rep.resid_right),
                    fl.total,
                    secs};
}

BenchRow bench_partial_svd(const BenchOptions& opt, std::size_t n, double s) {
    const SvdTestMatrix gen = gen_svd_test(n, Seed{opt.seed});
    const auto start = clock_type::now();
    const PartialSvdResult r = qdwh_partial_svd(gen.a, s, 0.01, opt.randomize, Seed{opt.seed});
    const double secs = elapsed_seconds(start);
    std::vector<double> truth = gen.d;
    std::sort(truth.begin(), truth.end(), std::greater<double>());
    std::optional<std::vector<double>> delta;
    if (truth.size() >= r.count()) {
        truth.resize(r.count());
        delta = truth;
    }
    const AccuracyReport rep = accuracy_report(gen.a, r.u1, r.sigma1, r.v1, delta);
    const FlopEstimate fl = flop_estimate(SolverKind::PartialSvd, n, r.subspace_size,
                                          r.diagnostics.iters_qr, r.diagnostics.iters_chol);
    return BenchRow{"partial-svd",
                    n,
                    s,
                    r.subspace_size,
                    rep.value_err.value_or(0.0),
                    std::max(rep.orth_left, rep.orth_right),
                    std::max(rep.resid_left, rep.resid_right),
                    fl.total,
                    secs};
}

BenchRow bench_full_eig(const BenchOptions& opt, std::size_t n) {
    const std::size_t k =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(opt.k_frac * n)));
    const SymEigTestMatrix gen = gen_sym_eig_test(n, k, Seed{opt.seed});
    const auto start = clock_type::now();
    const EigResult r = qdwh_eig_full(gen.a);
    const double secs = elapsed_seconds(start);
    std::vector<double> truth = gen.d;
    std::sort(truth.begin(), truth.end());
    const AccuracyReport rep = accuracy_report(gen.a, r.v, r.lambda, r.v, truth);
    const FlopEstimate fl = flop_estimate(SolverKind::QdwhEigFull, n, n, 0, 6);
    return BenchRow{"qdwh-eig",
                    n,
                    0.0,
                    n,
                    rep.value_err.value_or(0.0),
                    std::max(rep.orth_left, rep.orth_right),
                    std::max(rep.resid_left, rep.resid_right),
                    fl.total,
                    secs};
}

BenchRow bench_full_svd(const BenchOptions& opt, std::size_t n) {
    const SvdTestMatrix gen = gen_svd_test(n, Seed{opt.seed});
    const auto start = clock_type::now();
    const SvdResult r = qdwh_svd_full(gen.a);
    const double secs = elapsed_seconds(start);
    std::vector<double> truth = gen.d;
    std::sort(truth.begin(), truth.end(), std::greater<double>());
    const AccuracyReport rep = accuracy_report(gen.a, r.u, r.sigma, r.v, truth);
    const FlopEstimate fl = flop_estimate(SolverKind::QdwhSvdFull, n, n, 2, 4);
    return BenchRow{"qdwh-svd",
                    n,
                    0.0,
                    n,
                    rep.value_err.value_or(0.0),
                    std::max(rep.orth_left, rep.orth_right),
                    std::max(rep.resid_left, rep.resid_right),
                    fl.total,
                    secs};
}

int run_bench(const BenchOptions& opt) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "solver,n,k_or_s,subspace_size,value_err,orth,resid,flops_model,seconds\n";
    for (const std::string& solver : opt.solvers) {
        for (std::size_t n : opt.sizes) {
            std::vector<BenchRow> rows;
            if (solver == "partial-eig") {
                rows.push_back(bench_partial_eig(opt, n));
            } else if (solver == "partial-svd") {
                for (double s : opt.thresholds) rows.push_back(bench_partial_svd(opt, n, s));
            } else if (solver == "qdwh-eig") {
                rows.push_back(bench_full_eig(opt, n));
            } else if (solver == "qdwh-svd") {
                rows.push_back(bench_full_svd(opt, n));
            } else {
                throw std::invalid_argument("unknown solver in --solvers: " + solver);
            }
            for (const BenchRow& r : rows) {
                csv << r.solver << "," << r.n << "," << r.k_or_s << "," << r.subspace << ","
                    << r.value_err << "," << r.orth << "," << r.resid << "," << r.flops << ","
                    << reported_seconds(r.seconds, opt.threads) << "\n";
            }
        }
    }
    const std::string text = csv.str();
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << text;
    }
    std::cout << text;
    return 0;
}

struct VerifyOptions {
    std::string property = "all";
    std::size_t trials = 100;
    double s = 0.2;
    std::size_t iters = 3;
    std::uint64_t seed = 1;
};

bool verify_weights() {
    const WeightStep w = halley_weights(1.0);
    const double u = std::numeric_limits<double>::epsilon();
    const bool ok = std::abs(w.a - 3.0) <= 4 * u && std::abs(w.b - 1.0) <= 4 * u &&
                    std::abs(w.c - 3.0) <= 4 * u && std::abs(w.ell_out - 1.0) <= 4 * u;
    std::cout << "weights: (3,1,3) at ell=1 " << (ok ? "confirmed" : "violated") << " ("
              << (ok ? "pass" : "fail") << ")\n";
    return ok;
}

bool verify_flatten(double s, std::size_t iters) {
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = -1.0 + static_cast<double>(i) / 10000.0;
        worst = std::max(worst, std::abs(composed_rational((1.0 - s) * x - s, s, iters) + 1.0));
    }
    const bool ok = worst <= 1e-12;
    std::cout << "flatten(s=" << s << ", iters=" << iters << "): max error = " << worst << " ("
              << (ok ? "pass" : "fail") << ")\n";
    return ok;
}

bool verify_pert_trials(std::size_t trials, std::uint64_t seed) {
    std::size_t pass = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::size_t m = 8 + t % 6;
        const std::size_t n = m + t % 4;
        const std::size_t ell = 2 + t % 4;
        const std::size_t k = 1 + t % ell;
        DenseMatrix b;
        DenseMatrix v0;
        if (t % 2 == 0) {
            // near-null-space construction
            const DenseMatrix ql = qr_factor(gaussian_matrix(m, m, Seed{seed + 7 * t})).q;
            const DenseMatrix qr = qr_factor(gaussian_matrix(n, n, Seed{seed + 7 * t + 1})).q;
            DenseMatrix d(m, n);
            for (std::size_t i = 0; i < m - k; ++i) d(i, i) = 1.0 + static_cast<double>(i);
            for (std::size_t i = m - k; i < m; ++i) d(i, i) = 1e-15;
            b = matmul(ql, matmul_nt(d, qr));
            v0 = column_block(ql, m - k, k);
        } else {
            b = gaussian_matrix(m, n, Seed{seed + 7 * t + 2});
            v0 = qr_factor_thin(gaussian_matrix(m, k, Seed{seed + 7 * t + 3}), k).q;
        }
        const PertBound pb = verify_pert_bound(b, v0, ell);
        if (pb.lhs <= pb.rhs + 1e-12) ++pass;
    }
    std::cout << "pert_bound: " << pass << "/" << trials << " pass\n";
    return pass == trials;
}

int run_verify(const VerifyOptions& opt) {
    bool ok = true;
    if (opt.property == "all" || opt.property == "weights") ok &= verify_weights();
    if (opt.property == "all" || opt.property == "flatten") {
        if (opt.property == "all") {
            ok &= verify_flatten(0.2, 3);
            ok &= verify_flatten(0.875, 2);
        } else {
            ok &= verify_flatten(opt.s, opt.iters);
        }
    }
    if (opt.property == "all" || opt.property == "pert_bound")
        ok &= verify_pert_trials(opt.trials, opt.seed);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QDWH-based polar decomposition and partial spectrum solvers"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen =
        app.add_subcommand("gen", "generate a test matrix and its spectrum sidecar");
    cmd_gen->add_option("--kind", gen.kind, "eig or svd")->required();
    cmd_gen->add_option("--n", gen.n, "matrix size")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("--k", gen.k, "number of negative eigenvalues (eig only)");
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    cmd_gen->add_option("--out", gen.out, "output matrix file")->required();

    SolveOptions solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "run a solver and emit a JSON report");
    cmd_solve
        ->add_option("solver", solve.solver, "partial-eig | partial-svd | qdwh-eig | qdwh-svd")
        ->required();
    cmd_solve->add_option("--in", solve.in, "input matrix file")->required();
    cmd_solve->add_option("--out", solve.out, "write the JSON report here as well");
    cmd_solve->add_option("--iters", solve.iters, "QDWH iterations for partial-eig (2 or 3)");
    cmd_solve->add_option("--s", solve.s, "relative threshold for partial-svd");
    cmd_solve->add_option("--tol", solve.tol, "deficiency detection tolerance");
    cmd_solve->add_option("--seed", solve.seed, "seed for the randomized path");
    cmd_solve->add_flag("--randomize", solve.randomize, "multiply by a Gaussian before the QR");
    cmd_solve->add_option("--threads", solve.threads, "1 = deterministic reference mode")
        ->default_val(default_threads());
    cmd_solve->add_option("--format", solve.format, "json")->check(CLI::IsMember({"json"}));

    BenchOptions bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "sweep solvers into a CSV table");
    cmd_bench
        ->add_option("--solvers", bench.solvers,
                     "comma-separated: partial-eig,partial-svd,qdwh-eig,qdwh-svd")
        ->delimiter(',');
    cmd_bench->add_option("--n", bench.sizes, "comma-separated sizes")->delimiter(',');
    cmd_bench->add_option("--s", bench.thresholds, "comma-separated thresholds for partial-svd")
        ->delimiter(',');
    cmd_bench->add_option("--k-frac", bench.k_frac, "negative fraction for eig sweeps");
    cmd_bench->add_option("--iters", bench.iters, "QDWH iterations for partial-eig");
    cmd_bench->add_option("--seed", bench.seed, "generator seed");
    cmd_bench->add_flag("--randomize", bench.randomize, "randomized detection");
    cmd_bench->add_option("--threads", bench.threads, "1 = deterministic reference mode")
        ->default_val(default_threads());
    cmd_bench->add_option("--out", bench.out, "CSV output path");
    cmd_bench->add_option("--format", bench.format, "csv")->check(CLI::IsMember({"csv"}));

    VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the analytic property checks");
    cmd_verify->add_option("--property", verify.property, "all | weights | flatten | pert_bound")
        ->check(CLI::IsMember({"all", "weights", "flatten", "pert_bound"}));
    cmd_verify->add_option("--trials", verify.trials, "trial count for pert_bound");
    cmd_verify->add_option("--s", verify.s, "shift for the flatten check");
    cmd_verify->add_option("--iters", verify.iters, "iterations for the flatten check");
    cmd_verify->add_option("--seed", verify.seed, "trial seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_solve->parsed()) return run_solve(solve);
        if (cmd_bench->parsed()) return run_bench(bench);
        if (cmd_verify->parsed()) return run_verify(verify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
