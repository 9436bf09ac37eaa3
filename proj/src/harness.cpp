#include "kaclab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kaclab/tridiagonal.hpp"

namespace kaclab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Point {
    double a;
    double b;
};

MatrixParams point_params(const SweepConfig& cfg, const Point& pt) {
    return MatrixParams{cfg.n, pt.a, pt.b};
}

ExactSpectrum exact_for(const SweepConfig& cfg, const Point& pt) {
    switch (cfg.family) {
        case Family::clement: return clement_eigenvalues(cfg.n);
        case Family::special_a: return special_eigenvalues(cfg.n, pt.a);
        case Family::extended: return exact_eigenvalues(point_params(cfg, pt));
    }
    throw std::logic_error("exact_for: bad family");
}

TridiagonalMatrix matrix_for(const SweepConfig& cfg, const Point& pt) {
    if (cfg.family == Family::clement) return clement(cfg.n);
    if (cfg.family == Family::special_a) return special(cfg.n, pt.a);
    return extended(point_params(cfg, pt));
}

SweepRecord run_point(const SweepConfig& cfg, const Point& pt) {
    SweepRecord rec;
    rec.n = cfg.n;
    rec.a = pt.a;
    rec.b = pt.b;
    rec.solver = cfg.solver;
    rec.balance = cfg.solver_config.balance;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const ExactSpectrum exact = exact_for(cfg, pt);
        ComputedSpectrum computed;
        if (cfg.solver == SolverKind::unsymmetric) {
            computed = solve_unsymmetric(matrix_for(cfg, pt), cfg.solver_config);
        } else {
            SymmetricTridiagonalMatrix sym = symmetrize(matrix_for(cfg, pt));
            if (cfg.solver == SolverKind::symmetric) {
                computed = solve_symmetric(sym, cfg.solver_config);
            } else {
                const double tol = 1e-12 * std::max(1.0, infinity_norm(sym));
                auto vals = bisection_eigenvalues(sym, tol);
                computed.values.reserve(vals.size());
                for (double v : vals) computed.values.emplace_back(v, 0.0);
            }
        }
        rec.converged = computed.converged;
        if (computed.converged) {
            rec.rel_error = relative_error(exact, computed);
            rec.max_imag = max_imag(computed);
        } else {
            rec.rel_error = kNaN;
            rec.max_imag = kNaN;
        }
    } catch (const std::exception&) {
        rec.converged = false;
        rec.rel_error = kNaN;
        rec.max_imag = kNaN;
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

}  // namespace

std::vector<double> grid_points(const Grid& g) {
    if (!(g.step > 0.0) || !std::isfinite(g.step))
        throw std::invalid_argument("grid_points: step must be positive and finite");
    if (!std::isfinite(g.start) || !std::isfinite(g.stop))
        throw std::invalid_argument("grid_points: endpoints must be finite");
    std::vector<double> out;
    const double limit = g.stop + g.step / 2.0;
    for (int i = 0;; ++i) {
        const double x = g.start + i * g.step;
        if (x > limit) break;
        out.push_back(x);
    }
    return out;
}

double relative_error(std::vector<std::complex<double>> exact,
                      std::vector<std::complex<double>> computed) {
    if (exact.size() != computed.size())
        throw std::invalid_argument("relative_error: spectra differ in length");
    std::sort(exact.begin(), exact.end(), complex_less);
    std::sort(computed.begin(), computed.end(), complex_less);
    double ref = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        ref = std::max(ref, std::abs(exact[i]));
        diff = std::max(diff, std::abs(exact[i] - computed[i]));
    }
    if (ref == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / ref;
}

double relative_error(const ExactSpectrum& exact, const ComputedSpectrum& computed) {
    return relative_error(exact.values, computed.values);
}

double max_imag(const ComputedSpectrum& computed) {
    double m = 0.0;
    for (const auto& v : computed.values) m = std::max(m, std::fabs(v.imag()));
    return m;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("run_sweep: n must be positive");
    std::vector<Point> points;
    if (cfg.family == Family::clement) {
        points.push_back({0.0, 0.0});
    } else {
        const auto avs = grid_points(cfg.a_grid);
        for (double a : avs) {
            if (cfg.family == Family::special_a) {
                points.push_back({a, cfg.n % 2 == 0 ? -a : a});
                continue;
            }
            switch (cfg.b.kind) {
                case BSpec::Kind::fixed: points.push_back({a, cfg.b.value}); break;
                case BSpec::Kind::negated_a: points.push_back({a, -a}); break;
                case BSpec::Kind::equal_a: points.push_back({a, a}); break;
                case BSpec::Kind::range:
                    for (double b : grid_points(cfg.b.range)) points.push_back({a, b});
                    break;
            }
        }
    }

    std::vector<SweepRecord> records(points.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || points.size() <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) records[i] = run_point(cfg, points[i]);
        return records;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            records[i] = run_point(cfg, points[i]);
        }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads = std::min<std::size_t>(jobs, points.size());
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return records;
}

const char* solver_name(SolverKind s) {
    switch (s) {
        case SolverKind::unsymmetric: return "unsymmetric";
        case SolverKind::symmetric: return "symmetric";
        case SolverKind::bisection: return "bisection";
    }
    return "?";
}

void write_csv(const std::vector<SweepRecord>& records, std::ostream& out,
               bool include_timing) {
    out << "n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms\n";
    char runtime[32];
    for (const auto& r : records) {
        std::snprintf(runtime, sizeof(runtime), "%.3f", include_timing ? r.runtime_ms : 0.0);
        out << r.n << ',' << fmt17(r.a) << ',' << fmt17(r.b) << ',' << solver_name(r.solver)
            << ',' << (r.balance ? 1 : 0) << ',' << fmt17(r.rel_error) << ','
            << fmt17(r.max_imag) << ',' << (r.converged ? 1 : 0) << ',' << runtime << '\n';
    }
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path,
               bool include_timing) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    write_csv(records, out, include_timing);
    if (!out.flush()) throw std::runtime_error("write_csv: write failed for " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, int lineno) {
    const char* p = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p || *end != '\0')
        throw std::runtime_error("read_csv: bad numeric field '" + s + "' on line " +
                                 std::to_string(lineno));
    return v;
}

SolverKind parse_solver(const std::string& s, int lineno) {
    if (s == "unsymmetric") return SolverKind::unsymmetric;
    if (s == "symmetric") return SolverKind::symmetric;
    if (s == "bisection") return SolverKind::bisection;
    throw std::runtime_error("read_csv: unknown solver '" + s + "' on line " +
                             std::to_string(lineno));
}

}  // namespace

std::vector<SweepRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,a,b,solver,balance,rel_error,max_imag,converged,runtime_ms")
        throw std::runtime_error("read_csv: unexpected header '" + line + "'");
    std::vector<SweepRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 9)
            throw std::runtime_error("read_csv: expected 9 fields on line " +
                                     std::to_string(lineno));
        SweepRecord r;
        r.n = static_cast<int>(parse_double(f[0], lineno));
        r.a = parse_double(f[1], lineno);
        r.b = parse_double(f[2], lineno);
        r.solver = parse_solver(f[3], lineno);
        r.balance = parse_double(f[4], lineno) != 0.0;
        r.rel_error = parse_double(f[5], lineno);
        r.max_imag = parse_double(f[6], lineno);
        r.converged = parse_double(f[7], lineno) != 0.0;
        r.runtime_ms = parse_double(f[8], lineno);
        out.push_back(r);
    }
    return out;
}

std::vector<SweepRecord> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    return read_csv(in);
}

}  // namespace kaclab
