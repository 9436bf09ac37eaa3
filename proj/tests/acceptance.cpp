// Acceptance gate: ten timed criteria covering the generators, closed-form
// spectra, orthonormal-function identities, eigenvector constructions,
// numerical solvers, the sweep harness, and CLI reproducibility. Each
// criterion prints one [PASS]/[FAIL] line; the exit code is 0 only if all
// pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kaclab/dual_hahn.hpp"
#include "kaclab/harness.hpp"
#include "kaclab/verify.hpp"

using namespace kaclab;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string& what, const Outcome& o, double seconds,
            double budget) {
    const bool ok = o.ok && seconds <= budget;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s: %s (%.2fs, budget %.0fs)\n",
                ok ? "PASS" : "FAIL", number, what.c_str(), o.detail.c_str(), seconds,
                budget);
    std::fflush(stdout);
}

template <typename F>
void criterion(int number, const std::string& what, double budget, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, what, o, seconds, budget);
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

Outcome c1_char_poly() {
    const double grid[] = {-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0};
    double worst = 0.0;
    long evals = 0;
    for (int n = 1; n <= 12; ++n)
        for (double a : grid)
            for (double b : grid) {
                const MatrixParams p{n, a, b};
                const auto m = extended(p);
                for (const auto& lam : exact_eigenvalues(p).values) {
                    worst = std::max(worst, char_poly_residual(m, lam));
                    ++evals;
                }
            }
    return {worst <= 1e-10, "max residual " + fmt("%.3g", worst) + " over " +
                                std::to_string(evals) + " eigenvalues, tolerance 1e-10"};
}

Outcome c2_reduction() {
    for (int n = 1; n <= 50; ++n) {
        const auto zero = extended({n, 0.0, 0.0});
        const auto cl = clement(n);
        if (zero.superdiag != cl.superdiag || zero.subdiag != cl.subdiag)
            return {false, "band mismatch at n=" + std::to_string(n)};
    }
    for (int n = 1; n <= 200; ++n) {
        const auto closed = exact_eigenvalues({n, 0.0, 0.0}).values;
        const auto ints = clement_eigenvalues(n).values;
        for (std::size_t i = 0; i < closed.size(); ++i)
            if (closed[i] != ints[i] || closed[i].real() != std::round(closed[i].real()))
                return {false, "spectrum mismatch at n=" + std::to_string(n)};
    }
    return {true, "bands bitwise to n=50, integer spectra to n=200"};
}

Outcome c3_moments() {
    SplitMix64 rng(987654321u);
    double worst = 0.0;
    for (int d = 0; d < 100; ++d) {
        const int n = rng.uniform_int(1, 200);
        const double a = rng.uniform(-0.99, 5.0);
        const double b = rng.uniform(-0.99, 5.0);
        const MatrixParams p{n, a, b};
        const auto spec = exact_eigenvalues(p);
        if (spectrum_sum(spec) != cplx(0.0, 0.0))
            return {false, "paired sum not exactly zero at n=" + std::to_string(n)};
        const auto m = extended(p);
        double prods = 0.0;
        for (int k = 0; k < n; ++k) prods += m.superdiag[k] * m.subdiag[k];
        const double target = 2.0 * prods;
        const double dev = std::fabs(spectrum_second_moment(spec) - target) /
                           std::max(1.0, std::fabs(target));
        worst = std::max(worst, dev);
    }
    return {worst <= 1e-12, "paired sums exactly zero; max second-moment deviation " +
                                fmt("%.3g", worst) + ", tolerance 1e-12"};
}

Outcome c4_recurrences() {
    SplitMix64 rng(1122334455u);
    double worst = 0.0;
    for (int d = 0; d < 1000; ++d) {
        const double g = rng.uniform(-0.99, 5.0);
        const double dd = rng.uniform(0.01, 5.0);
        const int N = rng.uniform_int(1, 40);
        const int x = rng.uniform_int(1, N);
        const int n = rng.uniform_int(0, N - 1);
        for (double r : recurrence_residuals(n, x, {g, dd, N}))
            worst = std::max(worst, r);
    }
    for (int d = 0; d < 300; ++d) {
        const double g = rng.uniform(-0.99, 5.0);
        const double dd = rng.uniform(-0.99, 0.0);
        const int N = rng.uniform_int(1, 40);
        const int n = rng.uniform_int(0, N - 1);
        worst = std::max(worst, recurrence_residual(0, n, rng.uniform_int(0, N), {g, dd, N}));
        worst = std::max(worst, recurrence_residual(1, n, rng.uniform_int(1, N), {g, dd, N}));
    }
    return {worst <= 1e-11, "max residual " + fmt("%.3g", worst) +
                                " over 1300 random tuples, tolerance 1e-11"};
}

Outcome c5_eigenvectors() {
    const int orders[] = {2, 3, 9, 10, 24, 25, 40, 41, 60, 61};
    const double params[] = {0.0, 0.5, 1.0, 3.0};
    double worst_resid = 0.0, worst_gram = 0.0;
    for (int n : orders) {
        for (double a : params) {
            for (double b : params) {
                const auto sym = symmetric_extended({n, a, b});
                const double scale = infinity_norm(sym);
                const auto set = eigenvector_set(n, a, b);
                for (int j = 0; j < set.order; ++j) {
                    const auto& u = set.columns[j];
                    const double lam = set.eigenvalues.values[j].real();
                    for (int i = 0; i < set.order; ++i) {
                        double v = -lam * u[i];
                        if (i > 0) v += sym.offdiag[i - 1] * u[i - 1];
                        if (i + 1 < set.order) v += sym.offdiag[i] * u[i + 1];
                        worst_resid = std::max(worst_resid, std::fabs(v) / scale);
                    }
                }
                if (n <= 40) {
                    for (int i = 0; i < set.order; ++i)
                        for (int j = i; j < set.order; ++j) {
                            double dot = 0.0;
                            for (int r = 0; r < set.order; ++r)
                                dot += set.columns[i][r] * set.columns[j][r];
                            worst_gram = std::max(
                                worst_gram, std::fabs(dot - (i == j ? 1.0 : 0.0)));
                        }
                }
            }
        }
    }
    const bool ok = worst_resid <= 1e-11 && worst_gram <= 1e-10;
    return {ok, "max scaled residual " + fmt("%.3g", worst_resid) +
                    " (tolerance 1e-11), max orthogonality deviation " +
                    fmt("%.3g", worst_gram) + " (tolerance 1e-10)"};
}

Outcome c6_solver_agreement() {
    SplitMix64 rng(24680u);
    double worst_bisect = 0.0, worst_qr = 0.0;
    for (int d = 0; d < 100; ++d) {
        const int n = rng.uniform_int(1, 100);
        const double a = rng.uniform(-0.999, 5.0);
        const double b = rng.uniform(-0.999, 5.0);
        const auto sym = symmetric_extended({n, a, b});
        const double scale = std::max(1.0, infinity_norm(sym));
        const auto ql = solve_symmetric(sym);
        if (!ql.converged) return {false, "QL failed to converge at n=" + std::to_string(n)};
        const auto cuts = bisection_eigenvalues(sym, 1e-12 * scale);
        for (std::size_t j = 0; j < cuts.size(); ++j)
            worst_bisect = std::max(
                worst_bisect, std::fabs(ql.values[j].real() - cuts[j]) / scale);
        const auto qr = solve_unsymmetric(as_tridiagonal(sym));
        if (!qr.converged) return {false, "QR failed to converge at n=" + std::to_string(n)};
        for (std::size_t j = 0; j < qr.values.size(); ++j)
            worst_qr =
                std::max(worst_qr, std::abs(qr.values[j] - ql.values[j]) / scale);
    }
    const bool ok = worst_bisect <= 1e-10 && worst_qr <= 1e-9;
    return {ok, "QL vs bisection " + fmt("%.3g", worst_bisect) +
                    " (tolerance 1e-10), QR on the symmetric form vs QL " +
                    fmt("%.3g", worst_qr) + " (tolerance 1e-9)"};
}

Outcome c7_parameter_free_line() {
    const auto want = clement_eigenvalues(100).values;
    double worst = 0.0;
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        const auto sym = symmetric_extended({100, a, -a});
        const auto got = solve_symmetric(sym);
        if (!got.converged) return {false, "QL failed at a=" + fmt("%g", a)};
        for (std::size_t j = 0; j < want.size(); ++j)
            worst = std::max(worst, std::abs(got.values[j] - want[j]));
    }
    return {worst <= 1e-9, "five parameter choices reproduce the integers -100..100; "
                           "max absolute deviation " +
                               fmt("%.3g", worst) + ", tolerance 1e-9"};
}

Outcome c8_double_eigenvalues() {
    const auto m = special(11, -6.0);
    const auto exact = special_eigenvalues(11, -6.0).values;
    const auto got = solve_unsymmetric(m);
    if (!got.converged) return {false, "QR did not converge"};
    if (got.values.size() != exact.size()) return {false, "wrong eigenvalue count"};
    double worst = 0.0;
    for (std::size_t j = 0; j < exact.size(); ++j)
        worst = std::max(worst, std::abs(got.values[j] - exact[j]));
    return {worst <= 1e-4, "doubled eigenvalues +/-{1,3,5} recovered; max absolute "
                           "deviation " +
                               fmt("%.3g", worst) + ", tolerance 1e-4"};
}

Outcome c9_instability_sweep() {
    SweepConfig cfg;
    cfg.n = 101;
    cfg.family = Family::special_a;
    cfg.a_grid = {-10.0, 5.0, 0.25};
    cfg.solver = SolverKind::unsymmetric;
    // Balancing mirrors the dense-solver setup this sweep reproduces and
    // sharpens the contrast between the stable and unstable regions.
    cfg.solver_config.balance = true;
    const auto recs = run_sweep(cfg);
    if (recs.size() != 61) return {false, "expected 61 grid points"};

    for (const auto& r : recs)
        for (const auto& v : special_eigenvalues(101, r.a).values)
            if (v.imag() != 0.0)
                return {false, "closed-form spectrum not real at a=" + fmt("%g", r.a)};

    double err_peak = -1.0, err_tail = -1.0, imag_peak = 0.0;
    for (const auto& r : recs) {
        if (r.a == -1.75) err_peak = r.rel_error;
        if (r.a == 5.0) err_tail = r.rel_error;
        if (r.a > -100.0 && r.a < -1.5) imag_peak = std::max(imag_peak, r.max_imag);
    }
    if (!(err_peak >= 0.0) || !(err_tail >= 0.0))
        return {false, "missing grid records at a=-1.75 or a=5"};
    const bool ok = err_peak >= 1e3 * err_tail && imag_peak > 0.0;
    return {ok, "computed-spectrum error at a=-1.75 is " + fmt("%.3g", err_peak) +
                    " vs " + fmt("%.3g", err_tail) +
                    " at a=5 (need a factor 1000), spurious imaginary mass " +
                    fmt("%.3g", imag_peak) + " appears below a=-1.5"};
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(KACLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome c10_reproducibility() {
    const auto v1 = run_cli("verify --suite all --seed 42");
    const auto v2 = run_cli("verify --suite all --seed 42");
    if (v1.code != 0 || v2.code != 0)
        return {false, "self-check run exited with code " + std::to_string(v1.code) +
                           " / " + std::to_string(v2.code)};
    if (v1.out != v2.out) return {false, "self-check output differs between runs"};

    const std::string csv1 = "acceptance_sweep_1.csv";
    const std::string csv2 = "acceptance_sweep_2.csv";
    const std::string args = "sweep --n 9 --a-range -0.5:1.5:0.5 --b-lock equal "
                             "--solver symmetric --no-timing --csv ";
    const auto s1 = run_cli(args + csv1);
    const auto s2 = run_cli(args + csv2);
    if (s1.code != 0 || s2.code != 0) return {false, "sweep run failed"};
    const std::string b1 = slurp(csv1), b2 = slurp(csv2);
    std::remove(csv1.c_str());
    std::remove(csv2.c_str());
    if (b1.empty() || b1 != b2) return {false, "sweep output differs between runs"};
    return {true, "self-check and untimed sweep outputs are byte-identical across runs"};
}

}  // namespace

int main() {
    criterion(1, "closed-form eigenvalues are characteristic-polynomial roots", 5.0,
              c1_char_poly);
    criterion(2, "a=b=0 reduction to the integer matrix", 1.0, c2_reduction);
    criterion(3, "trace identities of the closed-form spectra", 5.0, c3_moments);
    criterion(4, "contiguous relations of the orthonormal functions", 10.0,
              c4_recurrences);
    criterion(5, "closed-form eigenvectors: residuals and orthogonality", 30.0,
              c5_eigenvectors);
    criterion(6, "independent solvers agree on symmetric instances", 60.0,
              c6_solver_agreement);
    criterion(7, "parameter-independent integer spectra at order 101", 10.0,
              c7_parameter_free_line);
    criterion(8, "doubled eigenvalues survive the unsymmetric solver", 1.0,
              c8_double_eigenvalues);
    criterion(9, "instability of the unsymmetric form near a=-1.75", 60.0,
              c9_instability_sweep);
    criterion(10, "seeded CLI runs are byte-identical", 120.0, c10_reproducibility);

    if (failures > 0) {
        std::printf("%d of 10 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
