#include "kaclab/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kaclab/spectra.hpp"

namespace kaclab {

namespace {

using cplx = std::complex<double>;

class Hessenberg {
public:
    explicit Hessenberg(const TridiagonalMatrix& m) : n_(m.order), h_(m.order * m.order, 0.0) {
        for (int k = 0; k + 1 < n_; ++k) {
            at(k, k + 1) = m.superdiag[k];
            at(k + 1, k) = m.subdiag[k];
        }
    }
    double& at(int i, int j) { return h_[i * n_ + j]; }
    double at(int i, int j) const { return h_[i * n_ + j]; }
    int size() const { return n_; }

    /// Iterative radix-2 diagonal similarity equalizing row and column sums.
    void balance() {
        constexpr double radix = 2.0;
        bool again = true;
        while (again) {
            again = false;
            for (int i = 0; i < n_; ++i) {
                double col = 0.0, row = 0.0;
                for (int j = 0; j < n_; ++j) {
                    if (j == i) continue;
                    col += std::fabs(at(j, i));
                    row += std::fabs(at(i, j));
                }
                if (col == 0.0 || row == 0.0) continue;
                const double total = col + row;
                double f = 1.0;
                double g = row / radix;
                while (col < g) {
                    f *= radix;
                    col *= radix * radix;
                }
                g = row * radix;
                while (col >= g) {
                    f /= radix;
                    col /= radix * radix;
                }
                if ((col + row) / f < 0.95 * total) {
                    again = true;
                    const double inv = 1.0 / f;
                    for (int j = 0; j < n_; ++j) at(i, j) *= inv;
                    for (int j = 0; j < n_; ++j) at(j, i) *= f;
                }
            }
        }
    }

private:
    int n_;
    std::vector<double> h_;
};

/// Eigenvalues of [[a, b], [c, d]] with a cancellation-free quadratic: the
/// dominant root from the half-trace and discriminant, the other from the
/// determinant quotient.
void two_by_two(double a, double b, double c, double d, cplx& r1, cplx& r2) {
    const double half_diff = (a - d) / 2.0;
    const double disc = half_diff * half_diff + b * c;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double z = half_diff + std::copysign(sq, half_diff);
        // Roots of the shifted problem relative to d: z and -bc/z.
        if (z == 0.0) {
            r1 = cplx(d, 0.0);
            r2 = cplx(d, 0.0);
        } else {
            r1 = cplx(d + z, 0.0);
            r2 = cplx(d - b * c / z, 0.0);
        }
    } else {
        const double mid = (a + d) / 2.0;
        const double sq = std::sqrt(-disc);
        r1 = cplx(mid, -sq);
        r2 = cplx(mid, sq);
    }
}

}  // namespace

ComputedSpectrum solve_unsymmetric(const TridiagonalMatrix& m, const SolverConfig& cfg) {
    if (m.order < 1) throw std::invalid_argument("solve_unsymmetric: empty matrix");
    ComputedSpectrum out;
    Hessenberg h(m);
    if (cfg.balance) h.balance();
    const int n = h.size();

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j < n; ++j) anorm += std::fabs(h.at(i, j));
    if (anorm == 0.0) anorm = 1.0;

    int en = n - 1;
    int its = 0;
    const long budget = static_cast<long>(cfg.max_sweeps_per_eigenvalue) * n;
    while (en >= 0) {
        // Deflation scan: l is the top of the active unreduced window.
        int l = en;
        while (l > 0) {
            double s = std::fabs(h.at(l - 1, l - 1)) + std::fabs(h.at(l, l));
            if (s == 0.0) s = anorm;
            if (std::fabs(h.at(l, l - 1)) <= cfg.deflation_tol * s) {
                h.at(l, l - 1) = 0.0;
                break;
            }
            --l;
        }

        if (l == en) {
            out.values.emplace_back(h.at(en, en), 0.0);
            ++out.deflations;
            --en;
            its = 0;
            continue;
        }
        if (l == en - 1) {
            cplx r1, r2;
            two_by_two(h.at(en - 1, en - 1), h.at(en - 1, en), h.at(en, en - 1),
                       h.at(en, en), r1, r2);
            out.values.push_back(r1);
            out.values.push_back(r2);
            out.deflations += 2;
            en -= 2;
            its = 0;
            continue;
        }

        if (out.iterations >= budget) {
            out.converged = false;
            break;
        }

        // Shift pair: the trailing 2x2, replaced every tenth stagnant sweep
        // by the customary ad-hoc values built from the last subdiagonals.
        double s11, s12, s21, s22;
        if (its > 0 && its % 10 == 0) {
            double s = std::fabs(h.at(en, en - 1));
            if (en - 1 > l) s += std::fabs(h.at(en - 1, en - 2));
            s11 = 0.75 * s + h.at(en, en);
            s12 = -0.4375 * s;
            s21 = s;
            s22 = s11;
        } else {
            s11 = h.at(en - 1, en - 1);
            s12 = h.at(en - 1, en);
            s21 = h.at(en, en - 1);
            s22 = h.at(en, en);
        }
        ++its;
        ++out.iterations;
        const double tr = s11 + s22;
        const double det = s11 * s22 - s12 * s21;

        // First column of (H - s1)(H - s2) at the window top, divided by
        // h(l+1, l) to keep the scale moderate.
        const double x0 = h.at(l, l);
        double p = (x0 * x0 - tr * x0 + det) / h.at(l + 1, l) + h.at(l, l + 1);
        double q = h.at(l + 1, l + 1) + x0 - tr;
        double r = h.at(l + 2, l + 1);
        {
            const double sc = std::fabs(p) + std::fabs(q) + std::fabs(r);
            if (sc != 0.0) {
                p /= sc;
                q /= sc;
                r /= sc;
            }
        }

        // Chase the 3x3 bulge down the window.
        for (int k = l; k <= en - 1; ++k) {
            const bool has_third = k != en - 1;
            double sc = 1.0;
            if (k != l) {
                p = h.at(k, k - 1);
                q = h.at(k + 1, k - 1);
                r = has_third ? h.at(k + 2, k - 1) : 0.0;
                // The reflector annihilates these two entries; clear the stored
                // copies or the next sweep reads them back as bulge input.
                h.at(k + 1, k - 1) = 0.0;
                if (has_third) h.at(k + 2, k - 1) = 0.0;
                sc = std::fabs(p) + std::fabs(q) + std::fabs(r);
                if (sc == 0.0) continue;
                p /= sc;
                q /= sc;
                r /= sc;
            }
            const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k != l) h.at(k, k - 1) = -s * sc;
            const double vx = p + s;
            const double xf = vx / s;
            const double yf = q / s;
            const double zf = r / s;
            const double qv = q / vx;
            const double rv = r / vx;

            // Left transform: rows k, k+1, k+2 over the window columns.
            for (int j = k; j <= en; ++j) {
                double pp = h.at(k, j) + qv * h.at(k + 1, j);
                if (has_third) pp += rv * h.at(k + 2, j);
                h.at(k, j) -= pp * xf;
                h.at(k + 1, j) -= pp * yf;
                if (has_third) h.at(k + 2, j) -= pp * zf;
            }
            // Right transform: columns k, k+1, k+2 over the affected rows.
            const int last_row = std::min(en, k + 3);
            for (int i = l; i <= last_row; ++i) {
                double pp = xf * h.at(i, k) + yf * h.at(i, k + 1);
                if (has_third) pp += zf * h.at(i, k + 2);
                h.at(i, k) -= pp;
                h.at(i, k + 1) -= pp * qv;
                if (has_third) h.at(i, k + 2) -= pp * rv;
            }
        }
    }

    std::sort(out.values.begin(), out.values.end(), complex_less);
    return out;
}

ComputedSpectrum solve_symmetric(const SymmetricTridiagonalMatrix& m, const SolverConfig& cfg) {
    if (m.order < 1) throw std::invalid_argument("solve_symmetric: empty matrix");
    const int n = m.order;
    std::vector<double> d(n, 0.0);
    std::vector<double> e(m.offdiag);
    e.push_back(0.0);

    ComputedSpectrum out;
    for (int l = 0; l < n; ++l) {
        int its = 0;
        while (true) {
            int mm = l;
            while (mm < n - 1) {
                const double dd = std::fabs(d[mm]) + std::fabs(d[mm + 1]);
                if (std::fabs(e[mm]) <= cfg.deflation_tol * dd || e[mm] == 0.0) break;
                ++mm;
            }
            if (mm == l) {
                ++out.deflations;
                break;
            }
            if (its++ >= cfg.max_sweeps_per_eigenvalue) {
                out.converged = false;
                for (int i = 0; i < l; ++i) out.values.emplace_back(d[i], 0.0);
                std::sort(out.values.begin(), out.values.end(), complex_less);
                return out;
            }
            ++out.iterations;

            // Implicit QL sweep with the Wilkinson shift taken from the
            // leading 2x2 of the window.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = mm - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[mm] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (i >= l) continue;  // premature zero: restart the scan
            d[l] -= p;
            e[l] = g;
            e[mm] = 0.0;
        }
    }
    for (int i = 0; i < n; ++i) out.values.emplace_back(d[i], 0.0);
    std::sort(out.values.begin(), out.values.end(), complex_less);
    return out;
}

int sturm_count(const SymmetricTridiagonalMatrix& m, double t) {
    if (m.order < 1) throw std::invalid_argument("sturm_count: empty matrix");
    // LDL^T pivots of m - tI; negative pivots count eigenvalues below t.
    // Exact zero pivots are nudged positive, which makes the count strict
    // (an eigenvalue exactly at t is not included).
    constexpr double tiny = 1e-290;
    int count = 0;
    double q = -t;
    if (q == 0.0) q = tiny;
    if (q < 0.0) ++count;
    for (int i = 1; i < m.order; ++i) {
        const double e = m.offdiag[i - 1];
        q = -t - e * e / q;
        if (q == 0.0) q = tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> bisection_eigenvalues(const SymmetricTridiagonalMatrix& m, double tol) {
    if (m.order < 1) throw std::invalid_argument("bisection_eigenvalues: empty matrix");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("bisection_eigenvalues: tol must be positive and finite");
    const int n = m.order;
    double radius = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        if (i > 0) s += std::fabs(m.offdiag[i - 1]);
        if (i < n - 1) s += std::fabs(m.offdiag[i]);
        radius = std::max(radius, s);
    }
    radius = radius * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()) + tol;

    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) {
        double lo = -radius, hi = radius;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count(m, mid) >= j + 1)
                hi = mid;
            else
                lo = mid;
        }
        out[j] = 0.5 * (lo + hi);
    }
    return out;
}

}  // namespace kaclab
