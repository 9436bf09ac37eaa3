#include "kaclab/dual_hahn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kaclab {

namespace {

void check_point(int n, int x, const DualHahnParams& p, const char* where) {
    if (p.N < 0) throw std::invalid_argument(std::string(where) + ": N must be >= 0");
    if (n < 0 || n > p.N)
        throw std::invalid_argument(std::string(where) + ": need 0 <= n <= N");
    if (x < 0 || x > p.N)
        throw std::invalid_argument(std::string(where) + ": need 0 <= x <= N");
    if (!std::isfinite(p.gamma) || !std::isfinite(p.delta))
        throw std::invalid_argument(std::string(where) + ": gamma, delta must be finite");
}

void check_window(const DualHahnParams& p, const char* where) {
    if (!p.valid())
        throw std::invalid_argument(std::string(where) +
                                    ": requires gamma > -1, delta > -1, N >= 0");
}

/// Orthonormal-recurrence coefficients of the family: the values
/// S_n = R_n / sqrt(h_n) satisfy lambda S_n = off[n-1] S_{n-1} + diag[n] S_n
/// + off[n] S_{n+1}, so [S_n(lambda(x))]_n is an eigenvector of the symmetric
/// tridiagonal (diag, off) for the exactly known eigenvalue lambda(x).
struct JacobiForm {
    std::vector<double> diag;
    std::vector<double> off;
};

JacobiForm jacobi_form(const DualHahnParams& p) {
    JacobiForm j;
    const double g = p.gamma, d = p.delta;
    const int N = p.N;
    j.diag.resize(N + 1);
    j.off.resize(std::max(N, 0));
    for (int n = 0; n <= N; ++n)
        j.diag[n] = (n + g + 1) * (N - n) + n * (d + N + 1 - n);
    for (int n = 0; n < N; ++n)
        j.off[n] = -std::sqrt((n + g + 1) * (N - n) * (n + 1.0) * (d + N - n));
    return j;
}

constexpr double kTinyPivot = 1e-290;

}  // namespace

bool DualHahnParams::valid() const { return gamma > -1.0 && delta > -1.0 && N >= 0; }

double DualHahnParams::lattice(int x) const { return x * (x + gamma + delta + 1); }

double dual_hahn_R(int n, int x, const DualHahnParams& p) {
    check_point(n, x, p, "dual_hahn_R");
    const int terms = std::min(n, x);
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < terms; ++j) {
        const double lower = (j + p.gamma + 1) * (j - p.N) * (j + 1.0);
        if (lower == 0.0)
            throw PoleError("dual_hahn_R: lower parameter pole at term " +
                            std::to_string(j + 1));
        term *= (j - x) * (j + x + p.gamma + p.delta + 1) * (j - n) / lower;
        sum += term;
    }
    return sum;
}

double dual_hahn_weight(int x, const DualHahnParams& p) {
    check_point(0, x, p, "dual_hahn_weight");
    check_window(p, "dual_hahn_weight");
    const double g = p.gamma, d = p.delta;
    const int N = p.N;
    // w(0) = N! / (g+d+2)_N, then ratios w(x+1)/w(x); every factor is O(1).
    double w = 1.0;
    for (int i = 1; i <= N; ++i) w *= i / (g + d + 1 + i);
    for (int t = 0; t < x; ++t) {
        if (t == 0)
            w *= (g + d + 3) * (g + 1) * N / ((d + 1) * (g + d + N + 2));
        else
            w *= (2 * t + g + d + 3) * (g + t + 1) * (N - t) * (t + g + d + 1) /
                 ((2 * t + g + d + 1) * (t + 1.0) * (d + t + 1) * (t + g + d + N + 2));
    }
    return w;
}

double dual_hahn_norm(int n, const DualHahnParams& p) {
    check_point(n, 0, p, "dual_hahn_norm");
    check_window(p, "dual_hahn_norm");
    const double g = p.gamma, d = p.delta;
    const int N = p.N;
    // h_0 = N! / (d+1)_N, then h_{n+1}/h_n = (n+1)(d+N-n) / ((N-n)(g+1+n)).
    double h = 1.0;
    for (int i = 1; i <= N; ++i) h *= i / (d + i);
    for (int t = 0; t < n; ++t) h *= (t + 1.0) * (d + N - t) / ((N - t) * (g + 1 + t));
    return h;
}

std::vector<double> orthonormal_row(int x, const DualHahnParams& p) {
    check_point(0, x, p, "orthonormal_row");
    check_window(p, "orthonormal_row");
    const int N = p.N;
    if (N == 0) return {1.0};

    const JacobiForm jf = jacobi_form(p);
    const double lambda = p.lattice(x);

    // Twisted factorization of J - lambda I: pivots of LDL^T from the top and
    // of UDU^T from the bottom, joined where the combined pivot is smallest.
    std::vector<double> dp(N + 1), dm(N + 1);
    dp[0] = jf.diag[0] - lambda;
    for (int i = 1; i <= N; ++i) {
        double piv = dp[i - 1];
        if (piv == 0.0) piv = kTinyPivot;
        dp[i] = (jf.diag[i] - lambda) - jf.off[i - 1] * jf.off[i - 1] / piv;
    }
    dm[N] = jf.diag[N] - lambda;
    for (int i = N - 1; i >= 0; --i) {
        double piv = dm[i + 1];
        if (piv == 0.0) piv = kTinyPivot;
        dm[i] = (jf.diag[i] - lambda) - jf.off[i] * jf.off[i] / piv;
    }
    int twist = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t <= N; ++t) {
        const double gap = std::fabs(dp[t] + dm[t] - (jf.diag[t] - lambda));
        if (gap < best) {
            best = gap;
            twist = t;
        }
    }

    std::vector<double> v(N + 1);
    v[twist] = 1.0;
    for (int i = twist - 1; i >= 0; --i) {
        double piv = dp[i];
        if (piv == 0.0) piv = kTinyPivot;
        v[i] = -jf.off[i] * v[i + 1] / piv;
    }
    for (int i = twist + 1; i <= N; ++i) {
        double piv = dm[i];
        if (piv == 0.0) piv = kTinyPivot;
        v[i] = -jf.off[i - 1] * v[i - 1] / piv;
    }

    // The exact row has unit length and a positive leading value, which pins
    // both free constants of the solve.
    double norm2 = 0.0;
    for (double w : v) norm2 += w * w;
    double s = 1.0 / std::sqrt(norm2);
    if (v[0] < 0.0) s = -s;
    for (double& w : v) w *= s;
    return v;
}

double orthonormal_R(int n, int x, const DualHahnParams& p) {
    check_point(n, x, p, "orthonormal_R");
    return orthonormal_row(x, p)[n];
}

double recurrence_residual(int which, int n, int x, const DualHahnParams& p) {
    check_window(p, "recurrence_residual");
    if (n < 0 || n > p.N - 1)
        throw std::invalid_argument("recurrence_residual: need 0 <= n <= N-1");
    const double g = p.gamma, d = p.delta;
    const int N = p.N;
    const DualHahnParams inner{g + 1, d + 1, N - 1};
    const DualHahnParams lowered{g + 1, d - 1, N};

    // A coefficient that is exactly zero suppresses its evaluation, so the
    // lattice argument x-1 is never requested at x = 0.
    switch (which) {
        case 0: {
            if (x < 0 || x > N)
                throw std::invalid_argument("recurrence_residual: need 0 <= x <= N");
            const double rhs_c = std::sqrt(x * (x + g + d + 1));
            const double lhs = std::sqrt((n + 1 + g) * (N - n)) * orthonormal_R(n, x, p) -
                               std::sqrt((n + 1.0) * (N - n + d)) * orthonormal_R(n + 1, x, p);
            const double rhs = rhs_c == 0.0 ? 0.0 : rhs_c * orthonormal_R(n, x - 1, inner);
            return std::fabs(lhs - rhs);
        }
        case 1: {
            if (x < 1 || x > N)
                throw std::invalid_argument("recurrence_residual: need 1 <= x <= N");
            const double c2 = std::sqrt((n + 2 + g) * (N - n - 1.0));
            double lhs = -std::sqrt((n + 1.0) * (N - n + d)) * orthonormal_R(n, x - 1, inner);
            if (c2 != 0.0) lhs += c2 * orthonormal_R(n + 1, x - 1, inner);
            const double rhs = std::sqrt(x * (x + g + d + 1)) * orthonormal_R(n + 1, x, p);
            return std::fabs(lhs - rhs);
        }
        case 2: {
            if (x < 0 || x > N)
                throw std::invalid_argument("recurrence_residual: need 0 <= x <= N");
            if (!(d > 0.0))
                throw std::invalid_argument(
                    "recurrence_residual: the delta-lowered relations need delta > 0");
            const double lhs = std::sqrt((n + 1 + g) * (N - n + d)) * orthonormal_R(n, x, p) -
                               std::sqrt((n + 1.0) * (N - n)) * orthonormal_R(n + 1, x, p);
            const double rhs = std::sqrt((x + g + 1) * (x + d)) * orthonormal_R(n, x, lowered);
            return std::fabs(lhs - rhs);
        }
        case 3: {
            if (x < 0 || x > N)
                throw std::invalid_argument("recurrence_residual: need 0 <= x <= N");
            if (!(d > 0.0))
                throw std::invalid_argument(
                    "recurrence_residual: the delta-lowered relations need delta > 0");
            const double lhs =
                -std::sqrt((n + 1.0) * (N - n)) * orthonormal_R(n, x, lowered) +
                std::sqrt((n + 2 + g) * (N - n + d - 1)) * orthonormal_R(n + 1, x, lowered);
            const double rhs = std::sqrt((x + g + 1) * (x + d)) * orthonormal_R(n + 1, x, p);
            return std::fabs(lhs - rhs);
        }
        default:
            throw std::invalid_argument("recurrence_residual: which must be 0..3");
    }
}

std::array<double, 4> recurrence_residuals(int n, int x, const DualHahnParams& p) {
    if (x < 1 || x > p.N)
        throw std::invalid_argument("recurrence_residuals: need 1 <= x <= N");
    return {recurrence_residual(0, n, x, p), recurrence_residual(1, n, x, p),
            recurrence_residual(2, n, x, p), recurrence_residual(3, n, x, p)};
}

namespace {

void check_vector_args(int n, double a, double b, int k, int sign, bool even,
                       const char* where) {
    if (n < 1 || (even ? n % 2 != 0 : n % 2 != 1))
        throw std::invalid_argument(std::string(where) + ": wrong parity of n");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::invalid_argument(
            std::string(where) +
            ": the closed-form eigenvectors are available for a > -1, b > -1 only");
    const int m = even ? n / 2 : (n - 1) / 2;
    if (k < 0 || k > m)
        throw std::invalid_argument(std::string(where) + ": need 0 <= k <= " +
                                    std::to_string(m));
    if (even && k == 0) {
        if (sign != 0)
            throw std::invalid_argument(std::string(where) +
                                        ": the null vector (k = 0) takes sign = 0");
    } else if (sign != 1 && sign != -1) {
        throw std::invalid_argument(std::string(where) + ": sign must be +1 or -1");
    }
}

}  // namespace

std::vector<double> eigenvector_even(int n, double a, double b, int k, int sign) {
    check_vector_args(n, a, b, k, sign, true, "eigenvector_even");
    const int m = n / 2;
    const DualHahnParams odd_family{(a - 1) / 2, (b - 1) / 2, m};
    const DualHahnParams even_family{(a + 1) / 2, (b + 1) / 2, m - 1};
    const std::vector<double> odd_row = orthonormal_row(k, odd_family);
    const std::vector<double> even_row =
        k == 0 ? std::vector<double>() : orthonormal_row(k - 1, even_family);

    std::vector<double> u(n + 1);
    for (int l = 1; l <= n + 1; ++l) {
        if (l % 2 == 1) {
            const int s = (l - 1) / 2;
            u[l - 1] = (s % 2 == 0 ? 1.0 : -1.0) * odd_row[s];
        } else if (k == 0) {
            u[l - 1] = 0.0;
        } else {
            const int s = l / 2 - 1;
            u[l - 1] = sign * (s % 2 == 0 ? 1.0 : -1.0) * even_row[s];
        }
    }
    return u;
}

std::vector<double> eigenvector_odd(int n, double a, double b, int k, int sign) {
    check_vector_args(n, a, b, k, sign, false, "eigenvector_odd");
    const int m = (n - 1) / 2;
    const DualHahnParams odd_family{(a - 1) / 2, (b + 1) / 2, m};
    const DualHahnParams even_family{(a + 1) / 2, (b - 1) / 2, m};
    const std::vector<double> odd_row = orthonormal_row(k, odd_family);
    const std::vector<double> even_row = orthonormal_row(k, even_family);

    std::vector<double> u(n + 1);
    for (int l = 1; l <= n + 1; ++l) {
        if (l % 2 == 1) {
            const int s = (l - 1) / 2;
            u[l - 1] = (s % 2 == 0 ? 1.0 : -1.0) * odd_row[s];
        } else {
            const int s = l / 2 - 1;
            u[l - 1] = sign * (s % 2 == 0 ? 1.0 : -1.0) * even_row[s];
        }
    }
    return u;
}

EigenvectorSet eigenvector_set(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("eigenvector_set: n must be >= 1");
    if (!(a > -1.0) || !(b > -1.0))
        throw std::invalid_argument(
            "eigenvector_set: the closed-form eigenvectors are available for "
            "a > -1, b > -1 only");
    EigenvectorSet set;
    set.order = n + 1;
    set.eigenvalues = exact_eigenvalues({n, a, b});

    struct Item {
        double value;
        std::vector<double> vec;
    };
    std::vector<Item> items;
    items.reserve(n + 1);
    if (n % 2 == 0) {
        const int m = n / 2;
        items.push_back({0.0, eigenvector_even(n, a, b, 0, 0)});
        for (int k = 1; k <= m; ++k) {
            const double v = std::sqrt((2.0 * k) * (2.0 * k + a + b));
            items.push_back({-v, eigenvector_even(n, a, b, k, -1)});
            items.push_back({+v, eigenvector_even(n, a, b, k, +1)});
        }
    } else {
        const int m = (n - 1) / 2;
        for (int k = 0; k <= m; ++k) {
            const double v = std::sqrt((2.0 * k + 1 + a) * (2.0 * k + 1 + b));
            items.push_back({-v, eigenvector_odd(n, a, b, k, -1)});
            items.push_back({+v, eigenvector_odd(n, a, b, k, +1)});
        }
    }
    std::sort(items.begin(), items.end(),
              [](const Item& x, const Item& y) { return x.value < y.value; });

    set.columns.reserve(items.size());
    for (Item& it : items) {
        double norm2 = 0.0;
        for (double w : it.vec) norm2 += w * w;
        const double s = 1.0 / std::sqrt(norm2);
        for (double& w : it.vec) w *= s;
        set.columns.push_back(std::move(it.vec));
    }
    return set;
}

}  // namespace kaclab
