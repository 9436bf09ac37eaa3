#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "kaclab/eigensolve.hpp"
#include "kaclab/spectra.hpp"

namespace kaclab {

enum class Family { clement, extended, special_a };
enum class SolverKind { unsymmetric, symmetric, bisection };

/// Inclusive arithmetic progression start, start+step, ..., stop; the stop
/// endpoint is kept when it lands within half a step.
struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

std::vector<double> grid_points(const Grid& g);

/// How the second parameter moves during a sweep.
struct BSpec {
    enum class Kind { fixed, range, negated_a, equal_a } kind = Kind::fixed;
    double value = 0.0;  // kind == fixed
    Grid range;          // kind == range
};

struct SweepConfig {
    int n = 1;
    Family family = Family::extended;
    Grid a_grid;
    BSpec b;
    SolverKind solver = SolverKind::unsymmetric;
    SolverConfig solver_config;
    int jobs = 1;  // worker threads; results are identical for any value
};

/// One grid point of a sweep. rel_error and max_imag are NaN when the solver
/// failed to converge (or the symmetric form does not exist at this point).
struct SweepRecord {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    SolverKind solver = SolverKind::unsymmetric;
    bool balance = false;
    double rel_error = 0.0;
    double max_imag = 0.0;
    bool converged = true;
    double runtime_ms = 0.0;
};

/// Infinity-norm relative difference of two equal-length spectra after both
/// are sorted ascending by (real, imaginary): ||x - x*||_inf / ||x||_inf
/// with x the exact list. Zero exact spectra compare to 0 when the computed
/// list matches exactly and to infinity otherwise. Throws
/// std::invalid_argument on a length mismatch.
double relative_error(const ExactSpectrum& exact, const ComputedSpectrum& computed);
double relative_error(std::vector<std::complex<double>> exact,
                      std::vector<std::complex<double>> computed);

/// Largest |Im| over the computed eigenvalues (0 for an empty list).
double max_imag(const ComputedSpectrum& computed);

/// Run the configured solver over the parameter grid and collect one record
/// per point, in lexicographic (a, b) order. Point failures are recorded,
/// not thrown. Records are bytewise reproducible run to run except for
/// runtime_ms.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/// CSV with the fixed header n,a,b,solver,balance,rel_error,max_imag,
/// converged,runtime_ms; numeric fields use 17 significant digits. With
/// include_timing = false the runtime column is written as 0 so two runs of
/// the same sweep compare byte-identical.
void write_csv(const std::vector<SweepRecord>& records, std::ostream& out,
               bool include_timing = true);
void write_csv(const std::vector<SweepRecord>& records, const std::string& path,
               bool include_timing = true);
std::vector<SweepRecord> read_csv(std::istream& in);
std::vector<SweepRecord> read_csv(const std::string& path);

const char* solver_name(SolverKind s);

/// Standalone SVG 1.1 line-plus-marker plot of one metric against one swept
/// parameter. x_axis is "a" or "b"; y_axis is "rel_error" or "max_imag".
/// log_y requests a log10 vertical scale; when no positive data exists the
/// plot falls back to a linear scale and says so in an annotation.
/// Records must agree on every non-axis parameter (same n, solver, balance)
/// and visit each x value once, otherwise std::invalid_argument.
std::string render_svg(const std::vector<SweepRecord>& records,
                       const std::string& x_axis, const std::string& y_axis,
                       bool log_y);
void render_svg(const std::vector<SweepRecord>& records, const std::string& x_axis,
                const std::string& y_axis, bool log_y, const std::string& path);

}  // namespace kaclab
