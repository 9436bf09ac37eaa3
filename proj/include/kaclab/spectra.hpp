#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "kaclab/tridiagonal.hpp"

namespace kaclab {

/// Which closed form produced an exact spectrum.
enum class SpectrumSource {
    clement_integers,    // -n, -n+2, ..., n
    even_closed_form,    // 0 and +/- sqrt((2k)(2k+a+b)), k = 1..n/2
    odd_closed_form,     // +/- sqrt((2k+1+a)(2k+1+b)), k = 0..(n-1)/2
    odd_special_shift,   // +/- |2k+1+a|, the a == b reduction for odd n
};

/// Exact spectrum of one of the generated families. values holds all order
/// eigenvalues sorted ascending by (real, imaginary); multiplicities groups
/// values that coincide already in the defining formula (bit-identical
/// results of the same rounded radicand), each with its count.
struct ExactSpectrum {
    std::vector<std::complex<double>> values;
    SpectrumSource source = SpectrumSource::clement_integers;
    std::vector<std::pair<std::complex<double>, int>> multiplicities;
};

/// Grouping of a spectrum at a given tolerance.
struct MultiplicityReport {
    std::vector<std::pair<std::complex<double>, int>> distinct;
    int max_multiplicity = 1;
    bool is_simple = true;
};

/// Comparator used everywhere a spectrum is sorted: ascending real part,
/// ties by imaginary part.
bool complex_less(const std::complex<double>& x, const std::complex<double>& y);

/// Spectrum of clement(n): the integers -n, -n+2, ..., n.
ExactSpectrum clement_eigenvalues(int n);

/// Spectrum of extended(p). Even n: 0 together with +/- sqrt((2k)(2k+a+b));
/// odd n: +/- sqrt((2k+1+a)(2k+1+b)). A negative radicand r yields the
/// conjugate pair +/- i sqrt(-r).
ExactSpectrum exact_eigenvalues(const MatrixParams& p);

/// Spectrum of special(n, a). Even n reduces to clement_eigenvalues(n)
/// independently of a; odd n gives +/- |2k+1+a|, which develops genuine
/// double eigenvalues when a is a negative even integer in [-n-1, -1].
ExactSpectrum special_eigenvalues(int n, double a);

/// Group eigenvalues whose mutual distance is at most tol (tol = 0 reports
/// the formula-level coincidences recorded in the spectrum itself).
MultiplicityReport classify(const ExactSpectrum& s, double tol);

/// det(m - lambda I) by the three-term recurrence p_j = -lambda p_{j-1} -
/// superdiag[j-1] subdiag[j-1] p_{j-2}. No scaling is applied, so for large
/// orders the result can overflow to +/-infinity; callers needing a bounded
/// quantity use char_poly_residual.
std::complex<double> char_poly_eval(const TridiagonalMatrix& m,
                                    std::complex<double> lambda);

/// |det(m - lambda I)| divided by the running normalization product of
/// (|lambda| + |superdiag[j]| + |subdiag[j]|) over all bands, evaluated with
/// per-step rescaling so it stays finite for any order. Small values certify
/// that lambda is (numerically) a root.
double char_poly_residual(const TridiagonalMatrix& m,
                          std::complex<double> lambda);

/// Factored characteristic polynomial of extended(p) for even n = 2m: the
/// polynomial is lambda * prod_k (lambda^2 - r_k) and the returned vector
/// holds r_k = (2k)(2k+a+b) for k = 1..m. Throws std::invalid_argument for
/// odd n, where no such single-product form is used.
std::vector<double> product_form_coeffs(const MatrixParams& p);

/// Sum of the spectrum taken in symmetric pairs (exactly zero for all the
/// closed forms) and sum of squares; the latter equals twice the sum of the
/// off-diagonal products of the matching matrix.
std::complex<double> spectrum_sum(const ExactSpectrum& s);
double spectrum_second_moment(const ExactSpectrum& s);

}  // namespace kaclab
