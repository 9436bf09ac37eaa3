#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "kaclab/spectra.hpp"

namespace kaclab {

/// Parameters of a dual Hahn family on the quadratic lattice
/// lambda(x) = x (x + gamma + delta + 1), x = 0..N. The orthogonality weight
/// is positive for gamma > -1 and delta > -1, which is what valid() checks.
struct DualHahnParams {
    double gamma = 0.0;
    double delta = 0.0;
    int N = 0;

    bool valid() const;
    double lattice(int x) const;  // lambda(x)
};

/// Thrown when the hypergeometric sum hits a pole of a lower parameter.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dual Hahn polynomial R_n(lambda(x)) as the terminating hypergeometric sum
/// 3F2(-x, x+gamma+delta+1, -n; gamma+1, -N; 1), computed by iterating the
/// term ratio for j = 0..min(n, x). Requires 0 <= n <= N and 0 <= x <= N;
/// gamma and delta are unrestricted as long as gamma+1 avoids the poles
/// inside the sum range. Accurate in double precision only for moderate N;
/// the orthonormal evaluation below is the numerically trustworthy form.
double dual_hahn_R(int n, int x, const DualHahnParams& p);

/// Orthogonality weight w(x) and squared norm h_n, both computed as products
/// of order-one factor ratios (no gamma-function calls). They satisfy
/// sum_x w(x) R_m(lambda(x)) R_n(lambda(x)) = h_n delta_mn for p.valid().
double dual_hahn_weight(int x, const DualHahnParams& p);
double dual_hahn_norm(int n, const DualHahnParams& p);

/// Orthonormal function R~_n(lambda(x)) = sqrt(w(x)/h_n) R_n(lambda(x)),
/// with the sign fixed so R~_n(lambda(0)) > 0. Evaluated through the twisted
/// factorization of the associated Jacobi matrix (the values form its unit
/// eigenvector for the exactly known eigenvalue lambda(x)), which stays
/// accurate where the raw sum cancels catastrophically. Requires p.valid().
double orthonormal_R(int n, int x, const DualHahnParams& p);

/// All of R~_0(lambda(x)) .. R~_N(lambda(x)) in one solve.
std::vector<double> orthonormal_row(int x, const DualHahnParams& p);

/// Absolute residuals of the four contiguous relations linking neighbouring
/// orthonormal families:
///   [0] sqrt((n+1+g)(N-n)) R~_n(x; g,d,N) - sqrt((n+1)(N-n+d)) R~_{n+1}(x; g,d,N)
///         = sqrt(x(x+g+d+1)) R~_n(x-1; g+1,d+1,N-1)
///   [1] -sqrt((n+1)(N-n+d)) R~_n(x-1; g+1,d+1,N-1)
///         + sqrt((n+2+g)(N-n-1)) R~_{n+1}(x-1; g+1,d+1,N-1)
///         = sqrt(x(x+g+d+1)) R~_{n+1}(x; g,d,N)
///   [2] sqrt((n+1+g)(N-n+d)) R~_n(x; g,d,N) - sqrt((n+1)(N-n)) R~_{n+1}(x; g,d,N)
///         = sqrt((x+g+1)(x+d)) R~_n(x; g+1,d-1,N)
///   [3] -sqrt((n+1)(N-n)) R~_n(x; g+1,d-1,N)
///         + sqrt((n+2+g)(N-n+d-1)) R~_{n+1}(x; g+1,d-1,N)
///         = sqrt((x+g+1)(x+d)) R~_{n+1}(x; g,d,N)
/// A factor that is exactly zero suppresses evaluation of its function, so
/// x = 0 is admitted in [0]. Relations [2] and [3] reference the family with
/// delta - 1 and therefore additionally require delta > 0. Preconditions:
/// 0 <= n <= N-1, 1 <= x <= N (x = 0 allowed for [0] alone via
/// recurrence_residual), p.valid().
std::array<double, 4> recurrence_residuals(int n, int x, const DualHahnParams& p);

/// Residual of a single relation (which = 0..3), with the same conventions.
double recurrence_residual(int which, int n, int x, const DualHahnParams& p);

/// Eigenvector of the symmetric form symmetric_extended({n, a, b}) for even
/// n = 2m, valid for a > -1 and b > -1. Odd positions l = 1, 3, ... carry
/// (-1)^((l-1)/2) R~_{(l-1)/2}(lambda(k); (a-1)/2, (b-1)/2, m) and even
/// positions carry sign (-1)^(l/2-1) R~_{l/2-1}(lambda(k-1); (a+1)/2,
/// (b+1)/2, m-1). k = 1..m with sign = +/-1 belongs to the eigenvalue
/// sign * sqrt((2k)(2k+a+b)); k = 0 with sign = 0 is the null vector whose
/// even positions vanish. The result has squared norm 2 (1 for k = 0).
std::vector<double> eigenvector_even(int n, double a, double b, int k, int sign);

/// Same for odd n = 2m+1: odd positions use the family ((a-1)/2, (b+1)/2, m)
/// and even positions the family ((a+1)/2, (b-1)/2, m), both at lattice
/// point k, for the eigenvalue sign * sqrt((2k+1+a)(2k+1+b)), k = 0..m,
/// sign = +/-1.
std::vector<double> eigenvector_odd(int n, double a, double b, int k, int sign);

/// Full orthonormal eigendecomposition of symmetric_extended({n, a, b}) for
/// a, b > -1: columns[j] is the unit eigenvector for eigenvalues.values[j].
struct EigenvectorSet {
    int order = 0;
    ExactSpectrum eigenvalues;
    std::vector<std::vector<double>> columns;
};

EigenvectorSet eigenvector_set(int n, double a, double b);

}  // namespace kaclab
