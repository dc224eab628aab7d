#include "charpoly/reduction.hpp"

#include <cmath>
#include <vector>

namespace charpoly {

bool is_upper_hessenberg(const DenseMatrix& a) {
    const int n = a.order();
    for (int j = 0; j < n; ++j)
        for (int i = j + 2; i < n; ++i)
            if (a(i, j) != 0.0) return false;
    return true;
}

namespace {

// Householder vector for x = a(k+1..n-1, col), scaled against overflow.
// Returns false when rows k+2..n-1 of the column are already exactly zero.
// On success v holds the (unnormalized) reflector restricted to rows
// k+1..n-1 and *alpha the new subdiagonal value -sign(x_1)*||x||.
bool reflector(const DenseMatrix& a, int col, std::vector<double>& v, double* alpha, double* tau) {
    const int n = a.order();
    const int lo = col + 1;
    bool needed = false;
    for (int i = lo + 1; i < n; ++i)
        if (a(i, col) != 0.0) { needed = true; break; }
    if (!needed) return false;

    double scale = 0.0;
    for (int i = lo; i < n; ++i) scale = std::max(scale, std::fabs(a(i, col)));
    double ss = 0.0;
    for (int i = lo; i < n; ++i) {
        const double r = a(i, col) / scale;
        ss += r * r;
    }
    const double sigma = scale * std::sqrt(ss);
    const double x1 = a(lo, col);
    *alpha = (x1 >= 0.0) ? -sigma : sigma;

    v.assign(static_cast<std::size_t>(n), 0.0);
    v[static_cast<std::size_t>(lo)] = x1 - *alpha;  // no cancellation: signs match
    for (int i = lo + 1; i < n; ++i) v[static_cast<std::size_t>(i)] = a(i, col);
    double vtv = 0.0;
    for (int i = lo; i < n; ++i) vtv += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    *tau = 2.0 / vtv;
    return true;
}

void accumulate_q(DenseMatrix& q, const std::vector<double>& v, double tau, int lo) {
    const int n = q.order();
    for (int i = 0; i < n; ++i) {
        double w = 0.0;
        for (int j = lo; j < n; ++j) w += q(i, j) * v[static_cast<std::size_t>(j)];
        w *= tau;
        for (int j = lo; j < n; ++j) q(i, j) -= w * v[static_cast<std::size_t>(j)];
    }
}

}  // namespace

HessenbergReduction to_hessenberg(const DenseMatrix& a, bool want_q, double nu) {
    a.ensure_finite("to_hessenberg");
    const int n = a.order();

    DenseMatrix h = a;
    DenseMatrix q = want_q ? DenseMatrix::identity(n) : DenseMatrix(1);

    std::vector<double> v;
    for (int col = 0; col + 2 < n; ++col) {
        double alpha = 0.0, tau = 0.0;
        if (!reflector(h, col, v, &alpha, &tau)) continue;
        const int lo = col + 1;

        // left: rows lo..n-1 of columns col+1..n-1
        for (int j = col + 1; j < n; ++j) {
            double s = 0.0;
            for (int i = lo; i < n; ++i) s += v[static_cast<std::size_t>(i)] * h(i, j);
            s *= tau;
            for (int i = lo; i < n; ++i) h(i, j) -= s * v[static_cast<std::size_t>(i)];
        }
        h(lo, col) = alpha;
        for (int i = lo + 1; i < n; ++i) h(i, col) = 0.0;

        // right: all rows, columns lo..n-1
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = lo; j < n; ++j) s += h(i, j) * v[static_cast<std::size_t>(j)];
            s *= tau;
            for (int j = lo; j < n; ++j) h(i, j) -= s * v[static_cast<std::size_t>(j)];
        }

        if (want_q) accumulate_q(q, v, tau, lo);
    }

    h.ensure_finite("to_hessenberg");
    HessenbergReduction out{validate_hessenberg(std::move(h)),
                            ReductionReport{nu * static_cast<double>(n) * n * a.frobenius_norm() * 0x1.0p-53,
                                            nu, false},
                            std::nullopt};
    if (want_q) out.q = std::move(q);
    return out;
}

TridiagonalReduction to_tridiagonal(const DenseMatrix& a, bool want_q, double nu) {
    a.ensure_finite("to_tridiagonal");
    if (!a.is_symmetric()) throw StructureError("to_tridiagonal: input is not symmetric");
    const int n = a.order();

    DenseMatrix t = a;
    DenseMatrix q = want_q ? DenseMatrix::identity(n) : DenseMatrix(1);

    std::vector<double> v, p(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (int col = 0; col + 2 < n; ++col) {
        double alpha = 0.0, tau = 0.0;
        if (!reflector(t, col, v, &alpha, &tau)) continue;
        const int lo = col + 1;

        // rank-2 update of the trailing block: p = tau*T*v, w = p - (tau/2)(p.v)v,
        // T <- T - v w^T - w v^T. The update formula is symmetric in (i,j), so
        // the block stays exactly symmetric.
        for (int i = lo; i < n; ++i) {
            double s = 0.0;
            for (int j = lo; j < n; ++j) s += t(i, j) * v[static_cast<std::size_t>(j)];
            p[static_cast<std::size_t>(i)] = tau * s;
        }
        double pv = 0.0;
        for (int i = lo; i < n; ++i) pv += p[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        const double half = 0.5 * tau * pv;
        for (int i = lo; i < n; ++i)
            w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - half * v[static_cast<std::size_t>(i)];
        for (int i = lo; i < n; ++i)
            for (int j = lo; j < n; ++j)
                t(i, j) -= v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] +
                           w[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];

        t(lo, col) = alpha;
        t(col, lo) = alpha;
        for (int i = lo + 1; i < n; ++i) {
            t(i, col) = 0.0;
            t(col, i) = 0.0;
        }

        if (want_q) accumulate_q(q, v, tau, lo);
    }

    t.ensure_finite("to_tridiagonal");
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> sub(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = t(i, i);
    for (int i = 1; i < n; ++i) sub[static_cast<std::size_t>(i) - 1] = t(i, i - 1);

    TridiagonalReduction out{SymTridiagonal(std::move(diag), std::move(sub)),
                             ReductionReport{nu * static_cast<double>(n) * n * a.frobenius_norm() * 0x1.0p-53,
                                             nu, true},
                             std::nullopt};
    if (want_q) out.q = std::move(q);
    return out;
}

}  // namespace charpoly
