#include "charpoly/types.hpp"

#include <algorithm>

namespace charpoly {

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    DenseMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw StructureError("from_rows: matrix must be square");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (double v : a_) {
        const double r = v / scale;
        s += r * r;
    }
    return scale * std::sqrt(s);
}

SymTridiagonal::SymTridiagonal(std::vector<double> alpha, std::vector<double> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.empty()) throw IndexError("tridiagonal order must be >= 1");
    if (beta_.size() + 1 != alpha_.size())
        throw StructureError("tridiagonal: need n-1 subdiagonal entries for n diagonal entries");
    for (double v : alpha_)
        if (!std::isfinite(v)) throw OverflowError("tridiagonal: non-finite diagonal entry");
    for (double v : beta_)
        if (!std::isfinite(v)) throw OverflowError("tridiagonal: non-finite subdiagonal entry");
}

DenseMatrix SymTridiagonal::densify() const {
    const int n = order();
    DenseMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i - 1, i - 1) = alpha(i);
    for (int i = 2; i <= n; ++i) {
        m(i - 1, i - 2) = beta(i);
        m(i - 2, i - 1) = beta(i);
    }
    return m;
}

UpperHessenberg validate_hessenberg(DenseMatrix a) {
    a.ensure_finite("validate_hessenberg");
    const int n = a.order();
    for (int j = 0; j < n; ++j)
        for (int i = j + 2; i < n; ++i)
            if (a(i, j) != 0.0)
                throw StructureError("validate_hessenberg: nonzero below first subdiagonal at (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return UpperHessenberg(std::move(a));
}

bool is_sym_tridiagonal(const UpperHessenberg& h) {
    const int n = h.order();
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= c; ++r) {
            const double v = h.entry(r, c);
            if (c == r) continue;
            if (c == r + 1) {
                if (v != h.entry(c, r)) return false;  // superdiagonal must mirror beta
            } else if (v != 0.0) {
                return false;
            }
        }
    return true;
}

SymTridiagonal as_sym_tridiagonal(const UpperHessenberg& h) {
    if (!is_sym_tridiagonal(h))
        throw StructureError("as_sym_tridiagonal: matrix is not symmetric tridiagonal");
    const int n = h.order();
    std::vector<double> alpha(static_cast<std::size_t>(n));
    std::vector<double> beta(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i <= n; ++i) alpha[static_cast<std::size_t>(i) - 1] = h.alpha(i);
    for (int i = 2; i <= n; ++i) beta[static_cast<std::size_t>(i) - 2] = h.beta(i);
    return SymTridiagonal(std::move(alpha), std::move(beta));
}

std::string method_name(Method m) {
    switch (m) {
        case Method::labudde_sym: return "labudde-sym";
        case Method::labudde_hess: return "labudde-hess";
        case Method::eig_summation: return "eig-summation";
        case Method::leverrier: return "leverrier";
    }
    return "unknown";
}

}  // namespace charpoly
