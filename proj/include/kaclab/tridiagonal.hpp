#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kaclab {

/// Parameter triple (n, a, b) shared by the two-parameter matrix family.
/// The matrix built from it has order n + 1.
struct MatrixParams {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
};

/// Zero-diagonal tridiagonal matrix of size order x order, stored as its two
/// off-diagonal bands. superdiag[k] is the entry (k, k+1) and subdiag[k] the
/// entry (k+1, k), both 0-based with k = 0..order-2. Documentation and error
/// messages use the conventional 1-based band index k = 1..order-1.
struct TridiagonalMatrix {
    int order = 0;
    std::vector<double> superdiag;
    std::vector<double> subdiag;
    std::string label;
};

/// Symmetric zero-diagonal tridiagonal matrix; offdiag[k] is the common value
/// of the entries (k, k+1) and (k+1, k).
struct SymmetricTridiagonalMatrix {
    int order = 0;
    std::vector<double> offdiag;
    std::string label;
};

/// Thrown by the symmetrizing transforms when an off-diagonal product
/// superdiag[k] * subdiag[k] is zero or negative. index is the 1-based band
/// position of the first offending product.
class NonPositiveProductError : public std::domain_error {
public:
    NonPositiveProductError(int index, double product);
    int index() const { return index_; }
    double product() const { return product_; }

private:
    int index_;
    double product_;
};

/// Classic integer test matrix of order n + 1: superdiagonal 1, 2, ..., n and
/// subdiagonal n, n-1, ..., 1. Its eigenvalues are -n, -n+2, ..., n.
TridiagonalMatrix clement(int n);

/// Two-parameter extension of order n + 1. Superdiagonal entry k (1-based) is
/// k for even k and k + a for odd k; subdiagonal entry at band position
/// n + 1 - k is k for even k and k + b for odd k. For even n both corner
/// bands equal n and carry no parameter; for odd n they are n + b (bottom of
/// the first column) and n + a (end of the superdiagonal).
TridiagonalMatrix extended(const MatrixParams& p);

/// One-parameter family: extended(n, a, -a) for even n (whose spectrum does
/// not depend on a) and extended(n, a, a) for odd n.
TridiagonalMatrix special(int n, double a);

/// Every entry multiplied by s; the label records the scaling.
TridiagonalMatrix scale(const TridiagonalMatrix& m, double s);

/// Diagonal similarity to symmetric form: offdiag[k] = sqrt(superdiag[k] *
/// subdiag[k]). Defined only when every product is strictly positive;
/// otherwise throws NonPositiveProductError with the first bad band index.
SymmetricTridiagonalMatrix symmetrize(const TridiagonalMatrix& m);

/// Symmetric form of extended(p) written directly from closed-form products,
/// without building the unsymmetric matrix first. Even n uses
/// sqrt(k (n+1-k+b)) at even k and sqrt((k+a)(n+1-k)) at odd k; odd n uses
/// sqrt(k (n+1-k)) at even k and sqrt((k+a)(n+1-k+b)) at odd k.
SymmetricTridiagonalMatrix symmetric_extended(const MatrixParams& p);

/// View a symmetric tridiagonal as a general one (superdiag == subdiag).
TridiagonalMatrix as_tridiagonal(const SymmetricTridiagonalMatrix& m);

/// Max absolute row sum.
double infinity_norm(const TridiagonalMatrix& m);
double infinity_norm(const SymmetricTridiagonalMatrix& m);

/// Plain-text serialization: a line "tridiag <order>", one line with the
/// order-1 superdiagonal entries and one with the subdiagonal entries, all
/// printed with 17 significant digits so values round-trip exactly.
std::string format_matrix(const TridiagonalMatrix& m);
TridiagonalMatrix parse_matrix(std::istream& in);
TridiagonalMatrix parse_matrix(const std::string& text);

}  // namespace kaclab
