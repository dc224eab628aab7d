#include <algorithm>
#include <cmath>

#include "charpoly/labudde.hpp"

namespace charpoly {

namespace {

// products[m-1] = beta_i * beta_{i-1} * ... * beta_{i-m+1}, extended one
// factor at a time. Returns true if a product of nonzero factors flushed
// to zero.
bool fill_subdiagonal_products(const UpperHessenberg& h, int i, double* products) {
    bool underflowed = false;
    products[0] = h.beta(i);
    for (int m = 2; m <= i - 1; ++m) {
        const double f = h.beta(i - m + 1);
        products[m - 1] = products[m - 2] * f;
        if (products[m - 1] == 0.0 && products[m - 2] != 0.0 && f != 0.0) underflowed = true;
    }
    return underflowed;
}

}  // namespace

SubdiagonalProducts subdiagonal_products(const UpperHessenberg& h, int i) {
    if (i < 2 || i > h.order()) throw IndexError("subdiagonal_products: need 2 <= i <= n");
    SubdiagonalProducts r;
    r.products.resize(static_cast<std::size_t>(i) - 1);
    r.underflowed = fill_subdiagonal_products(h, i, r.products.data());
    return r;
}

// Same level-by-level scheme as the symmetric recursion, but each update
// subtracts a sum of superdiagonal-weighted products of earlier values. The
// sum is accumulated left to right (m = 1, 2, ...) with the pure product
// term last.
//
// Storage is by diagonals of the (level, index) table: the history terms a
// single update reads all share level - index, so each inner loop walks one
// contiguous slice instead of one element from each of up to k rows. That
// keeps the working set streamable; the row layout went memory-bound past
// order ~300. cD[d][j-1] holds c_j for the leading submatrix of order d+j.
//
// Bound weights follow the operations actually performed: a term whose value
// passed through r roundings (its multiplications plus the left-to-right
// additions it participates in) contributes gamma(r) times its magnitude
// (plain u when r = 1). Exactly-zero terms are omitted: adding zero rounds
// nothing and perturbs nothing. Prior-level errors propagate with the
// products' magnitudes. A trailing (1 + 8u) absorbs the bound arithmetic.
CoeffResult charpoly_hess(const UpperHessenberg& h, int k) {
    const int n = h.order();
    if (k < 1 || k > n) throw IndexError("charpoly_hess: need 1 <= k <= n");

    if (is_sym_tridiagonal(h)) return charpoly_sym(as_sym_tridiagonal(h), k);

    const double u = unit_roundoff;
    std::vector<double> gam(static_cast<std::size_t>(k) + 2);
    for (int t = 0; t <= k + 1; ++t) gam[static_cast<std::size_t>(t)] = gamma(t, u);
    const double g2 = gam[2];
    auto weight = [&](int roundings) { return roundings == 1 ? u : gam[static_cast<std::size_t>(roundings)]; };

    bool underflow = false;

    // hp[l][m-1] = fl[h_{l-m,l} * beta_l * ... * beta_{l-m+1}], one row per level
    std::vector<std::vector<double>> hp(static_cast<std::size_t>(n) + 1);
    std::vector<double> prod(static_cast<std::size_t>(n));
    for (int l = 2; l <= n; ++l) {
        underflow |= fill_subdiagonal_products(h, l, prod.data());
        auto& row = hp[static_cast<std::size_t>(l)];
        row.resize(static_cast<std::size_t>(l) - 1);
        for (int m = 1; m <= l - 1; ++m)
            row[static_cast<std::size_t>(m) - 1] = h.entry(l - m, l) * prod[static_cast<std::size_t>(m) - 1];
    }

    std::vector<std::vector<double>> cD(static_cast<std::size_t>(n)), eD(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
        const std::size_t len = static_cast<std::size_t>(std::min(n - d, k));
        cD[static_cast<std::size_t>(d)].assign(len, 0.0);
        eD[static_cast<std::size_t>(d)].assign(len, 0.0);
    }

    std::vector<double> vals(static_cast<std::size_t>(k));
    std::vector<int> mults(static_cast<std::size_t>(k));

    for (int d = 0; d < n; ++d) {
        double* cs = cD[static_cast<std::size_t>(d)].data();
        double* es = eD[static_cast<std::size_t>(d)].data();
        const double* cp = d > 0 ? cD[static_cast<std::size_t>(d) - 1].data() : nullptr;
        const double* ep = d > 0 ? eD[static_cast<std::size_t>(d) - 1].data() : nullptr;
        const int lhi = std::min(n, d + k);
        for (int l = d + 1; l <= lhi; ++l) {
            const int j = l - d;
            const double al = h.alpha(l);
            const double aabs = std::fabs(al);

            if (d == 0 && l == 1) {
                cs[0] = -al;
                es[0] = 0.0;
                continue;
            }
            if (j == 1) {
                cs[0] = cp[0] - al;
                es[0] = ep[0] + u * std::fabs(cs[0]);
                continue;
            }

            const double* hpl = hp[static_cast<std::size_t>(l)].data();
            const double t1 = al * cs[j - 2];

            int q = 0;
            for (int m = 1; m <= j - 2; ++m) {
                const double hpm = hpl[m - 1];
                if (hpm == 0.0) continue;
                const double cv = cs[j - m - 2];
                if (cv == 0.0) continue;
                const double g = hpm * cv;
                if (g == 0.0) continue;  // product underflowed; adding it is a no-op
                vals[static_cast<std::size_t>(q)] = g;
                mults[static_cast<std::size_t>(q)] = m + 1;
                ++q;
            }
            if (hpl[j - 2] != 0.0) {  // pure product term, no coefficient factor
                vals[static_cast<std::size_t>(q)] = hpl[j - 2];
                mults[static_cast<std::size_t>(q)] = j - 1;
                ++q;
            }
            double gsum = 0.0;
            for (int p = 0; p < q; ++p) gsum = (p == 0) ? vals[0] : gsum + vals[static_cast<std::size_t>(p)];

            double e;
            if (d == 0) {  // closing a full leading submatrix: c_l of order l
                cs[j - 1] = -((q > 0) ? t1 + gsum : t1);
                e = aabs * es[j - 2];
                for (int m = 1; m <= j - 2; ++m)
                    e += std::fabs(hpl[m - 1]) * es[j - m - 2];
                e += u * std::fabs(t1);
                e += u * std::fabs(cs[j - 1]);
            } else {
                const double t2 = cp[j - 1] - t1;
                cs[j - 1] = (q > 0) ? t2 - gsum : t2;
                e = ep[j - 1];
                e += aabs * es[j - 2];
                for (int m = 1; m <= j - 2; ++m)
                    e += std::fabs(hpl[m - 1]) * es[j - m - 2];
                e += u * std::fabs(cp[j - 1]);
                e += u * std::fabs(cs[j - 1]);
                e += g2 * std::fabs(t1);
            }
            for (int p = 0; p < q; ++p) {
                const int adds = (q == 1) ? 0 : (p == 0 ? q - 1 : q - p);
                e += weight(mults[static_cast<std::size_t>(p)] + adds) * std::fabs(vals[static_cast<std::size_t>(p)]);
            }
            es[j - 1] = e;
        }
    }

    CoeffResult r;
    r.method = Method::labudde_hess;
    r.underflow_flagged = underflow;
    r.coeffs.resize(static_cast<std::size_t>(k));
    r.bounds.resize(static_cast<std::size_t>(k));
    const double inflate = 1.0 + 8.0 * u;
    for (int j = 1; j <= k; ++j) {
        r.coeffs[static_cast<std::size_t>(j) - 1] = cD[static_cast<std::size_t>(n - j)][static_cast<std::size_t>(j) - 1];
        r.bounds[static_cast<std::size_t>(j) - 1] = eD[static_cast<std::size_t>(n - j)][static_cast<std::size_t>(j) - 1] * inflate;
    }

    for (double v : r.coeffs)
        if (!std::isfinite(v)) throw OverflowError("charpoly_hess: coefficient overflow");
    return r;
}

}  // namespace charpoly
