#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "kaclab/tridiagonal.hpp"

namespace kaclab {

/// Knobs shared by the iterative solvers.
struct SolverConfig {
    /// Iteration budget per eigenvalue; a matrix of order m gets m times
    /// this many sweeps in total, after which the solver returns what it
    /// has with converged = false.
    int max_sweeps_per_eigenvalue = 30;
    /// Relative deflation threshold: a subdiagonal entry h(i+1, i) of the
    /// running iterate is set to zero once |h(i+1,i)| <= tol * (|h(i,i)| +
    /// |h(i+1,i+1)|).
    double deflation_tol = std::numeric_limits<double>::epsilon();
    /// Apply a radix-2 diagonal similarity before the unsymmetric iteration.
    bool balance = false;
};

/// Result of a numerical eigensolve. values is sorted ascending by (real,
/// imaginary). When converged is false the list holds only the eigenvalues
/// isolated before the iteration budget ran out.
struct ComputedSpectrum {
    std::vector<std::complex<double>> values;
    int iterations = 0;
    int deflations = 0;
    bool converged = true;
};

/// Eigenvalues of a general tridiagonal matrix by the implicit double-shift
/// QR iteration on its Hessenberg form, with analytic closure of trailing
/// 1x1 and 2x2 blocks. Real matrices may legitimately produce complex
/// conjugate eigenvalue pairs.
ComputedSpectrum solve_unsymmetric(const TridiagonalMatrix& m,
                                   const SolverConfig& cfg = {});

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit shifted QL
/// iteration. All results are real.
ComputedSpectrum solve_symmetric(const SymmetricTridiagonalMatrix& m,
                                 const SolverConfig& cfg = {});

/// Number of eigenvalues of m strictly below t, from the sign pattern of the
/// LDL^T pivot sequence of m - tI.
int sturm_count(const SymmetricTridiagonalMatrix& m, double t);

/// All eigenvalues, each bracketed by bisection on sturm_count to an
/// interval of width at most tol and reported at its midpoint. Sorted
/// ascending. Requires tol > 0.
std::vector<double> bisection_eigenvalues(const SymmetricTridiagonalMatrix& m,
                                          double tol);

}  // namespace kaclab
