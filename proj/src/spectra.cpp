#include "kaclab/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace kaclab {

namespace {

using cplx = std::complex<double>;

/// +/- sqrt(r) for r >= 0, +/- i sqrt(-r) otherwise.
std::pair<cplx, cplx> root_pair(double radicand) {
    if (radicand >= 0.0) {
        const double r = std::sqrt(radicand);
        return {cplx(-r, 0.0), cplx(r, 0.0)};
    }
    const double r = std::sqrt(-radicand);
    return {cplx(0.0, -r), cplx(0.0, r)};
}

void finish(ExactSpectrum& s) {
    std::sort(s.values.begin(), s.values.end(), complex_less);
    s.multiplicities.clear();
    for (const cplx& v : s.values) {
        if (!s.multiplicities.empty() && s.multiplicities.back().first == v)
            ++s.multiplicities.back().second;
        else
            s.multiplicities.emplace_back(v, 1);
    }
}

}  // namespace

bool complex_less(const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

ExactSpectrum clement_eigenvalues(int n) {
    if (n < 1) throw std::invalid_argument("clement_eigenvalues: n must be >= 1");
    ExactSpectrum s;
    s.source = SpectrumSource::clement_integers;
    s.values.reserve(n + 1);
    for (int j = 0; j <= n; ++j) s.values.emplace_back(static_cast<double>(-n + 2 * j), 0.0);
    finish(s);
    return s;
}

ExactSpectrum exact_eigenvalues(const MatrixParams& p) {
    if (p.n < 1) throw std::invalid_argument("exact_eigenvalues: n must be >= 1");
    if (!std::isfinite(p.a) || !std::isfinite(p.b))
        throw std::invalid_argument("exact_eigenvalues: a, b must be finite");
    ExactSpectrum s;
    s.values.reserve(p.n + 1);
    if (p.n % 2 == 0) {
        s.source = SpectrumSource::even_closed_form;
        s.values.emplace_back(0.0, 0.0);
        const int m = p.n / 2;
        for (int k = 1; k <= m; ++k) {
            const double radicand = (2.0 * k) * (2.0 * k + p.a + p.b);
            auto [lo, hi] = root_pair(radicand);
            s.values.push_back(lo);
            s.values.push_back(hi);
        }
    } else {
        s.source = SpectrumSource::odd_closed_form;
        const int m = (p.n - 1) / 2;
        for (int k = 0; k <= m; ++k) {
            const double radicand = (2.0 * k + 1 + p.a) * (2.0 * k + 1 + p.b);
            auto [lo, hi] = root_pair(radicand);
            s.values.push_back(lo);
            s.values.push_back(hi);
        }
    }
    finish(s);
    return s;
}

ExactSpectrum special_eigenvalues(int n, double a) {
    if (n < 1) throw std::invalid_argument("special_eigenvalues: n must be >= 1");
    if (!std::isfinite(a)) throw std::invalid_argument("special_eigenvalues: a must be finite");
    if (n % 2 == 0) return clement_eigenvalues(n);
    ExactSpectrum s;
    s.source = SpectrumSource::odd_special_shift;
    const int m = (n - 1) / 2;
    for (int k = 0; k <= m; ++k) {
        const double v = std::fabs(2.0 * k + 1 + a);
        s.values.emplace_back(-v, 0.0);
        s.values.emplace_back(v, 0.0);
    }
    finish(s);
    return s;
}

MultiplicityReport classify(const ExactSpectrum& s, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("classify: tol must be >= 0");
    MultiplicityReport r;
    if (tol == 0.0) {
        r.distinct = s.multiplicities;
    } else {
        for (const cplx& v : s.values) {
            if (!r.distinct.empty() && std::abs(v - r.distinct.back().first) <= tol)
                ++r.distinct.back().second;
            else
                r.distinct.emplace_back(v, 1);
        }
    }
    for (const auto& [value, count] : r.distinct)
        r.max_multiplicity = std::max(r.max_multiplicity, count);
    r.is_simple = r.max_multiplicity <= 1;
    return r;
}

cplx char_poly_eval(const TridiagonalMatrix& m, cplx lambda) {
    cplx prev(1.0, 0.0);
    cplx cur = -lambda;
    for (int j = 2; j <= m.order; ++j) {
        const double band = m.superdiag[j - 2] * m.subdiag[j - 2];
        const cplx next = -lambda * cur - band * prev;
        prev = cur;
        cur = next;
    }
    return m.order == 0 ? prev : cur;
}

double char_poly_residual(const TridiagonalMatrix& m, cplx lambda) {
    // Same recurrence divided through by the running normalization
    // f_j = |lambda| + |superdiag[j]| + |subdiag[j]|: the value tracked is
    // p_j / prod_{i<j} f_i, so the final iterate is already the residual.
    const double alam = std::abs(lambda);
    cplx prev(1.0, 0.0);  // p_0
    cplx cur = -lambda;   // p_1
    double f_prev = 1.0;
    for (int j = 2; j <= m.order; ++j) {
        double f = alam + std::fabs(m.superdiag[j - 2]) + std::fabs(m.subdiag[j - 2]);
        if (f == 0.0) f = 1.0;
        const double band = m.superdiag[j - 2] * m.subdiag[j - 2];
        const cplx next = -lambda * cur / f - (band / (f * f_prev)) * prev;
        prev = cur;
        cur = next;
        f_prev = f;
    }
    return std::abs(cur);
}

std::vector<double> product_form_coeffs(const MatrixParams& p) {
    if (p.n < 1 || p.n % 2 != 0)
        throw std::invalid_argument(
            "product_form_coeffs: the factored form lambda * prod(lambda^2 - r_k) "
            "exists for even n only");
    std::vector<double> r;
    r.reserve(p.n / 2);
    for (int k = 1; k <= p.n / 2; ++k) r.push_back((2.0 * k) * (2.0 * k + p.a + p.b));
    return r;
}

cplx spectrum_sum(const ExactSpectrum& s) {
    cplx total(0.0, 0.0);
    std::size_t i = 0, j = s.values.size();
    while (i + 1 < j) {
        --j;
        total += s.values[i] + s.values[j];
        ++i;
    }
    if (i + 1 == j) total += s.values[i];
    return total;
}

double spectrum_second_moment(const ExactSpectrum& s) {
    double total = 0.0;
    for (const cplx& v : s.values) total += (v * v).real();
    return total;
}

}  // namespace kaclab
