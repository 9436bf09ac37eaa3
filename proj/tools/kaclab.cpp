#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kaclab/dual_hahn.hpp"
#include "kaclab/harness.hpp"
#include "kaclab/verify.hpp"

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << body;
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

kaclab::Grid parse_grid(const std::string& text) {
    kaclab::Grid g;
    double vals[3];
    int count = 0;
    std::size_t pos = 0;
    while (count < 3) {
        const std::size_t colon = text.find(':', pos);
        const std::string piece =
            colon == std::string::npos ? text.substr(pos) : text.substr(pos, colon - pos);
        char* end = nullptr;
        vals[count] = std::strtod(piece.c_str(), &end);
        if (end == piece.c_str() || *end != '\0')
            throw CLI::ValidationError("range", "bad range component '" + piece + "'");
        ++count;
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (count < 2) throw CLI::ValidationError("range", "expected start:stop[:step]");
    g.start = vals[0];
    g.stop = vals[1];
    g.step = count == 3 ? vals[2] : 1.0;
    return g;
}

struct GenArgs {
    int n = 1;
    double a = 0.0, b = 0.0, special_a = 0.0, factor = 1.0;
    bool use_special = false, symmetric = false, scaled = false;
    std::string out;
};

struct ExactArgs {
    int n = 1;
    double a = 0.0, b = 0.0, special_a = 0.0, tol = 0.0;
    bool use_special = false, multiplicity = false, vectors = false;
    std::string out;
};

struct SolveArgs {
    int n = 0;
    double a = 0.0, b = 0.0, special_a = 0.0;
    bool use_special = false;
    std::string in_path;
    std::string solver = "unsymmetric";
    bool balance = false;
    int max_sweeps = 30;
    double width = 0.0;
    std::string out;
};

struct SweepArgs {
    int n = 1;
    std::string family = "extended";
    std::string a_range;
    double b_fixed = 0.0;
    bool b_fixed_set = false;
    std::string b_range;
    std::string b_lock;
    std::string solver = "unsymmetric";
    bool balance = false;
    int max_sweeps = 30;
    int jobs = 1;
    bool no_timing = false;
    std::string csv;
};

struct PlotArgs {
    std::string csv;
    std::string x = "a";
    std::string y = "rel_error";
    std::string svg;
    bool log_flag = false, linear_flag = false;
};

kaclab::TridiagonalMatrix build_matrix(int n, bool use_special, double special_a, double a,
                                       double b) {
    if (use_special) return kaclab::special(n, special_a);
    return kaclab::extended({n, a, b});
}

void run_gen(const GenArgs& g) {
    kaclab::TridiagonalMatrix m = build_matrix(g.n, g.use_special, g.special_a, g.a, g.b);
    if (g.scaled) m = kaclab::scale(m, g.factor);
    if (g.symmetric) m = kaclab::as_tridiagonal(kaclab::symmetrize(m));
    write_text(g.out, kaclab::format_matrix(m));
}

void run_exact(const ExactArgs& e) {
    kaclab::ExactSpectrum spec;
    if (e.use_special)
        spec = kaclab::special_eigenvalues(e.n, e.special_a);
    else
        spec = kaclab::exact_eigenvalues({e.n, e.a, e.b});

    std::ostringstream body;
    if (e.vectors) {
        if (e.use_special)
            throw std::invalid_argument(
                "eigenvectors are produced from the two-parameter form; use --a/--b");
        const auto set = kaclab::eigenvector_set(e.n, e.a, e.b);
        for (int j = 0; j < set.order; ++j) {
            body << fmt17(set.eigenvalues.values[j].real()) << ' '
                 << fmt17(set.eigenvalues.values[j].imag());
            for (double v : set.columns[j]) body << ' ' << fmt17(v);
            body << '\n';
        }
    } else {
        for (const auto& v : spec.values)
            body << fmt17(v.real()) << ' ' << fmt17(v.imag()) << '\n';
    }
    if (e.multiplicity) {
        const auto rep = kaclab::classify(spec, e.tol);
        for (const auto& [value, count] : rep.distinct)
            body << "multiplicity " << fmt17(value.real()) << ' ' << fmt17(value.imag())
                 << ' ' << count << '\n';
        body << "simple " << (rep.is_simple ? 1 : 0) << '\n';
    }
    write_text(e.out, body.str());
}

void run_solve(const SolveArgs& s) {
    kaclab::SolverConfig cfg;
    cfg.balance = s.balance;
    cfg.max_sweeps_per_eigenvalue = s.max_sweeps;

    kaclab::TridiagonalMatrix m;
    if (!s.in_path.empty()) {
        std::ifstream in(s.in_path);
        if (!in) throw std::runtime_error("cannot open " + s.in_path);
        m = kaclab::parse_matrix(in);
    } else {
        if (s.n < 1) throw std::invalid_argument("solve: give --n or --in");
        m = build_matrix(s.n, s.use_special, s.special_a, s.a, s.b);
    }

    kaclab::ComputedSpectrum result;
    if (s.solver == "unsymmetric") {
        result = kaclab::solve_unsymmetric(m, cfg);
    } else {
        const auto sym = kaclab::symmetrize(m);
        if (s.solver == "symmetric") {
            result = kaclab::solve_symmetric(sym, cfg);
        } else {
            const double width =
                s.width > 0.0 ? s.width
                              : 1e-12 * std::max(1.0, kaclab::infinity_norm(sym));
            for (double v : kaclab::bisection_eigenvalues(sym, width))
                result.values.emplace_back(v, 0.0);
        }
    }

    std::ostringstream body;
    for (const auto& v : result.values)
        body << fmt17(v.real()) << ' ' << fmt17(v.imag()) << '\n';
    body << "# iterations=" << result.iterations << " deflations=" << result.deflations
         << " converged=" << (result.converged ? 1 : 0) << '\n';
    write_text(s.out, body.str());
    if (!result.converged) throw std::runtime_error("solver did not converge");
}

int run_verify(const std::string& suite, std::uint64_t seed) {
    const auto results = kaclab::run_suite(suite, seed);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                  << '\n';
        if (r.passed) ++passed;
    }
    std::cout << "passed " << passed << "/" << results.size() << '\n';
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

void run_sweep_cmd(const SweepArgs& s) {
    kaclab::SweepConfig cfg;
    cfg.n = s.n;
    if (s.family == "clement")
        cfg.family = kaclab::Family::clement;
    else if (s.family == "special-a")
        cfg.family = kaclab::Family::special_a;
    else
        cfg.family = kaclab::Family::extended;

    if (cfg.family != kaclab::Family::clement) {
        if (s.a_range.empty())
            throw std::invalid_argument("sweep: --a-range is required for this family");
        cfg.a_grid = parse_grid(s.a_range);
    }
    if (!s.b_range.empty()) {
        cfg.b.kind = kaclab::BSpec::Kind::range;
        cfg.b.range = parse_grid(s.b_range);
    } else if (s.b_lock == "negated") {
        cfg.b.kind = kaclab::BSpec::Kind::negated_a;
    } else if (s.b_lock == "equal") {
        cfg.b.kind = kaclab::BSpec::Kind::equal_a;
    } else {
        cfg.b.kind = kaclab::BSpec::Kind::fixed;
        cfg.b.value = s.b_fixed;
    }

    if (s.solver == "symmetric")
        cfg.solver = kaclab::SolverKind::symmetric;
    else if (s.solver == "bisection")
        cfg.solver = kaclab::SolverKind::bisection;
    else
        cfg.solver = kaclab::SolverKind::unsymmetric;
    cfg.solver_config.balance = s.balance;
    cfg.solver_config.max_sweeps_per_eigenvalue = s.max_sweeps;
    cfg.jobs = s.jobs;

    const auto records = kaclab::run_sweep(cfg);
    std::ostringstream body;
    kaclab::write_csv(records, body, !s.no_timing);
    write_text(s.csv, body.str());
}

void run_plot(const PlotArgs& p) {
    const auto records = kaclab::read_csv(p.csv);
    bool log_y = p.y == "rel_error";
    if (p.log_flag) log_y = true;
    if (p.linear_flag) log_y = false;
    const std::string body = kaclab::render_svg(records, p.x, p.y, log_y);
    write_text(p.svg, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laboratory for zero-diagonal tridiagonal test matrices"};
    app.require_subcommand(1);
    int rc = 0;

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "print a generated matrix");
    cgen->add_option("--n", gen.n, "family parameter; the matrix has order n+1")
        ->required();
    auto* gen_a = cgen->add_option("--a", gen.a, "first parameter (default 0)");
    auto* gen_b = cgen->add_option("--b", gen.b, "second parameter (default 0)");
    auto* gen_sa = cgen->add_option("--special-a", gen.special_a,
                                    "one-parameter family: b = -a (even n) or b = a (odd n)");
    gen_sa->excludes(gen_a)->excludes(gen_b);
    cgen->add_flag("--symmetric", gen.symmetric, "emit the symmetrized form");
    cgen->add_option("--scale", gen.factor, "multiply every entry by this factor");
    cgen->add_option("--out", gen.out, "output path (default stdout)");
    cgen->callback([&] {
        gen.use_special = gen_sa->count() > 0;
        gen.scaled = cgen->get_option("--scale")->count() > 0;
        run_gen(gen);
    });

    ExactArgs exact;
    auto* cexact = app.add_subcommand("exact", "print the closed-form spectrum");
    cexact->add_option("--n", exact.n, "family parameter")->required();
    auto* ex_a = cexact->add_option("--a", exact.a, "first parameter (default 0)");
    auto* ex_b = cexact->add_option("--b", exact.b, "second parameter (default 0)");
    auto* ex_sa = cexact->add_option("--special-a", exact.special_a,
                                     "one-parameter family spectrum");
    ex_sa->excludes(ex_a)->excludes(ex_b);
    cexact->add_flag("--multiplicity", exact.multiplicity,
                     "append multiplicity groups and a simplicity flag");
    cexact->add_option("--tol", exact.tol, "grouping tolerance for --multiplicity");
    cexact->add_flag("--vectors", exact.vectors,
                     "print orthonormal eigenvectors after each eigenvalue");
    cexact->add_option("--out", exact.out, "output path (default stdout)");
    cexact->callback([&] {
        exact.use_special = ex_sa->count() > 0;
        run_exact(exact);
    });

    SolveArgs solve;
    auto* csolve = app.add_subcommand("solve", "run a numerical eigensolver");
    auto* so_n = csolve->add_option("--n", solve.n, "family parameter");
    auto* so_a = csolve->add_option("--a", solve.a, "first parameter (default 0)");
    auto* so_b = csolve->add_option("--b", solve.b, "second parameter (default 0)");
    auto* so_sa = csolve->add_option("--special-a", solve.special_a,
                                     "one-parameter family");
    auto* so_in = csolve->add_option("--in", solve.in_path,
                                     "read a serialized matrix instead of generating");
    so_sa->excludes(so_a)->excludes(so_b);
    so_in->excludes(so_n)->excludes(so_a)->excludes(so_b)->excludes(so_sa);
    csolve
        ->add_option("--solver", solve.solver,
                     "unsymmetric | symmetric | bisection (default unsymmetric)")
        ->check(CLI::IsMember({"unsymmetric", "symmetric", "bisection"}));
    csolve->add_flag("--balance", solve.balance,
                     "balance the matrix before the unsymmetric iteration");
    csolve->add_option("--max-sweeps", solve.max_sweeps,
                       "iteration budget per eigenvalue (default 30)");
    csolve->add_option("--tol", solve.width,
                       "bisection interval width (default 1e-12*max(1,norm))");
    csolve->add_option("--out", solve.out, "output path (default stdout)");
    csolve->callback([&] {
        solve.use_special = so_sa->count() > 0;
        run_solve(solve);
    });

    std::string suite = "all";
    std::uint64_t seed = 42;
    auto* cverify = app.add_subcommand("verify", "run self-check suites");
    cverify
        ->add_option("--suite", suite,
                     "oracle | moments | recurrence | eigenvector | all (default all)")
        ->check(CLI::IsMember({"oracle", "moments", "recurrence", "eigenvector", "all"}));
    cverify->add_option("--seed", seed, "seed for the random draws (default 42)");
    cverify->callback([&] { rc = run_verify(suite, seed); });

    SweepArgs sweep;
    auto* csweep = app.add_subcommand("sweep", "solve across a parameter grid, write CSV");
    csweep->add_option("--n", sweep.n, "family parameter")->required();
    csweep
        ->add_option("--family", sweep.family,
                     "clement | extended | special-a (default extended)")
        ->check(CLI::IsMember({"clement", "extended", "special-a"}));
    csweep->add_option("--a-range", sweep.a_range, "grid start:stop[:step] for a");
    auto* sw_b = csweep->add_option("--b", sweep.b_fixed, "fixed b (default 0)");
    auto* sw_br = csweep->add_option("--b-range", sweep.b_range,
                                     "grid start:stop[:step] for b");
    auto* sw_bl =
        csweep
            ->add_option("--b-lock", sweep.b_lock,
                         "tie b to a: negated (b=-a) or equal (b=a)")
            ->check(CLI::IsMember({"negated", "equal"}));
    sw_b->excludes(sw_br)->excludes(sw_bl);
    sw_br->excludes(sw_bl);
    csweep
        ->add_option("--solver", sweep.solver,
                     "unsymmetric | symmetric | bisection (default unsymmetric)")
        ->check(CLI::IsMember({"unsymmetric", "symmetric", "bisection"}));
    csweep->add_flag("--balance", sweep.balance, "balance before unsymmetric solves");
    csweep->add_option("--max-sweeps", sweep.max_sweeps,
                       "iteration budget per eigenvalue (default 30)");
    csweep->add_option("--jobs", sweep.jobs, "worker threads (default 1)");
    csweep->add_flag("--no-timing", sweep.no_timing,
                     "write 0 runtimes so repeated runs compare byte-identical");
    csweep->add_option("--csv", sweep.csv, "output path (default stdout)");
    csweep->callback([&] {
        sweep.b_fixed_set = sw_b->count() > 0;
        run_sweep_cmd(sweep);
    });

    PlotArgs plot;
    auto* cplot = app.add_subcommand("plot", "render a sweep CSV as a standalone SVG");
    cplot->add_option("--csv", plot.csv, "input CSV from sweep")->required();
    cplot->add_option("--x", plot.x, "x axis: a | b (default a)")
        ->check(CLI::IsMember({"a", "b"}));
    cplot->add_option("--y", plot.y, "y axis: rel_error | max_imag (default rel_error)")
        ->check(CLI::IsMember({"rel_error", "max_imag"}));
    cplot->add_option("--svg", plot.svg, "output path")->required();
    auto* pl_log = cplot->add_flag("--log", plot.log_flag, "log vertical scale");
    auto* pl_lin = cplot->add_flag("--linear", plot.linear_flag, "linear vertical scale");
    pl_log->excludes(pl_lin);
    cplot->callback([&] { run_plot(plot); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
