#include "kaclab/tridiagonal.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace kaclab {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_params(const MatrixParams& p) {
    if (p.n < 1) throw std::invalid_argument("matrix parameter n must be >= 1");
    if (!std::isfinite(p.a) || !std::isfinite(p.b))
        throw std::invalid_argument("matrix parameters a, b must be finite");
}

std::string param_label(const char* name, const MatrixParams& p) {
    std::ostringstream os;
    os << name << "(n=" << p.n << ",a=" << p.a << ",b=" << p.b << ")";
    return os.str();
}

}  // namespace

NonPositiveProductError::NonPositiveProductError(int index, double product)
    : std::domain_error("off-diagonal product at band k=" + std::to_string(index) +
                        " is " + format_double(product) +
                        "; the symmetric form needs every product positive"),
      index_(index),
      product_(product) {}

TridiagonalMatrix clement(int n) {
    if (n < 1) throw std::invalid_argument("clement: n must be >= 1");
    TridiagonalMatrix m;
    m.order = n + 1;
    m.superdiag.resize(n);
    m.subdiag.resize(n);
    for (int k = 1; k <= n; ++k) {
        m.superdiag[k - 1] = static_cast<double>(k);
        m.subdiag[k - 1] = static_cast<double>(n + 1 - k);
    }
    m.label = "clement(n=" + std::to_string(n) + ")";
    return m;
}

TridiagonalMatrix extended(const MatrixParams& p) {
    check_params(p);
    const int n = p.n;
    TridiagonalMatrix m;
    m.order = n + 1;
    m.superdiag.resize(n);
    m.subdiag.resize(n);
    for (int k = 1; k <= n; ++k) {
        m.superdiag[k - 1] = (k % 2 == 0) ? k : k + p.a;
        // Band position j holds the mirrored index k = n + 1 - j.
        const int mirrored = n + 1 - k;
        m.subdiag[k - 1] = (mirrored % 2 == 0) ? mirrored : mirrored + p.b;
    }
    m.label = param_label("extended", p);
    return m;
}

TridiagonalMatrix special(int n, double a) {
    if (n < 1) throw std::invalid_argument("special: n must be >= 1");
    const double b = (n % 2 == 0) ? -a : a;
    TridiagonalMatrix m = extended({n, a, b});
    std::ostringstream os;
    os << "special(n=" << n << ",a=" << a << ")";
    m.label = os.str();
    return m;
}

TridiagonalMatrix scale(const TridiagonalMatrix& m, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("scale: factor must be finite");
    TridiagonalMatrix r = m;
    for (double& v : r.superdiag) v *= s;
    for (double& v : r.subdiag) v *= s;
    std::ostringstream os;
    os << s << "*" << m.label;
    r.label = os.str();
    return r;
}

SymmetricTridiagonalMatrix symmetrize(const TridiagonalMatrix& m) {
    SymmetricTridiagonalMatrix r;
    r.order = m.order;
    r.offdiag.resize(m.superdiag.size());
    for (std::size_t k = 0; k < m.superdiag.size(); ++k) {
        const double product = m.superdiag[k] * m.subdiag[k];
        if (!(product > 0.0))
            throw NonPositiveProductError(static_cast<int>(k) + 1, product);
        r.offdiag[k] = std::sqrt(product);
    }
    r.label = "sym(" + m.label + ")";
    return r;
}

SymmetricTridiagonalMatrix symmetric_extended(const MatrixParams& p) {
    check_params(p);
    const int n = p.n;
    SymmetricTridiagonalMatrix r;
    r.order = n + 1;
    r.offdiag.resize(n);
    for (int k = 1; k <= n; ++k) {
        double product;
        if (n % 2 == 0)
            product = (k % 2 == 0) ? k * (n + 1 - k + p.b) : (k + p.a) * (n + 1 - k);
        else
            product = (k % 2 == 0) ? static_cast<double>(k) * (n + 1 - k)
                                   : (k + p.a) * (n + 1 - k + p.b);
        if (!(product > 0.0)) throw NonPositiveProductError(k, product);
        r.offdiag[k - 1] = std::sqrt(product);
    }
    r.label = param_label("symmetric_extended", p);
    return r;
}

TridiagonalMatrix as_tridiagonal(const SymmetricTridiagonalMatrix& m) {
    TridiagonalMatrix r;
    r.order = m.order;
    r.superdiag = m.offdiag;
    r.subdiag = m.offdiag;
    r.label = m.label;
    return r;
}

double infinity_norm(const TridiagonalMatrix& m) {
    double worst = 0.0;
    for (int row = 0; row < m.order; ++row) {
        double s = 0.0;
        if (row > 0) s += std::fabs(m.subdiag[row - 1]);
        if (row < m.order - 1) s += std::fabs(m.superdiag[row]);
        worst = std::max(worst, s);
    }
    return worst;
}

double infinity_norm(const SymmetricTridiagonalMatrix& m) {
    return infinity_norm(as_tridiagonal(m));
}

std::string format_matrix(const TridiagonalMatrix& m) {
    std::string out = "tridiag " + std::to_string(m.order) + "\n";
    for (std::size_t k = 0; k < m.superdiag.size(); ++k) {
        if (k) out += ' ';
        out += format_double(m.superdiag[k]);
    }
    out += '\n';
    for (std::size_t k = 0; k < m.subdiag.size(); ++k) {
        if (k) out += ' ';
        out += format_double(m.subdiag[k]);
    }
    out += '\n';
    return out;
}

TridiagonalMatrix parse_matrix(std::istream& in) {
    std::string tag;
    int order = 0;
    if (!(in >> tag) || tag != "tridiag" || !(in >> order) || order < 1)
        throw std::invalid_argument("parse_matrix: expected header 'tridiag <order>'");
    TridiagonalMatrix m;
    m.order = order;
    m.superdiag.resize(order - 1);
    m.subdiag.resize(order - 1);
    for (double& v : m.superdiag)
        if (!(in >> v)) throw std::invalid_argument("parse_matrix: truncated superdiagonal");
    for (double& v : m.subdiag)
        if (!(in >> v)) throw std::invalid_argument("parse_matrix: truncated subdiagonal");
    m.label = "parsed";
    return m;
}

TridiagonalMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

}  // namespace kaclab
