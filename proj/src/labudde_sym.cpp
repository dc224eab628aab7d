#include <algorithm>
#include <cmath>

#include "charpoly/labudde.hpp"

namespace charpoly {

double gamma(std::int64_t n, double u) {
    if (n < 0) throw DomainError("gamma: n must be >= 0");
    if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("gamma: u must be positive and finite");
    const double nu = static_cast<double>(n) * u;
    if (nu >= 1.0) throw DomainError("gamma: need n*u < 1");
    return nu / (1.0 - nu);
}

// Rows are computed level by level over the leading principal submatrices;
// only two previous rows are ever read, so the state is three rolling rows.
//
// Error recurrences: every update adds u times the magnitudes rounded at
// this step, gamma(2) times magnitudes that passed through two roundings,
// and propagates prior row errors with weight |alpha_i| resp. beta_i^2.
// Products that are exactly zero are omitted: fl[x - 0] = x performs no
// rounding, so neither the value nor the bound changes. A trailing factor
// (1 + 4u) absorbs the rounding of the bound arithmetic itself.
CoeffResult charpoly_sym(const SymTridiagonal& t, int k) {
    const int n = t.order();
    if (k < 1 || k > n) throw IndexError("charpoly_sym: need 1 <= k <= n");

    const double u = unit_roundoff;
    const double g2 = gamma(2, u);

    std::vector<double> c_prev2(k, 0.0), c_prev(k, 0.0), c_cur(k, 0.0);
    std::vector<double> e_prev2(k, 0.0), e_prev(k, 0.0), e_cur(k, 0.0);

    c_cur[0] = -t.alpha(1);  // exact
    e_cur[0] = 0.0;

    for (int i = 2; i <= n; ++i) {
        std::swap(c_prev2, c_prev);
        std::swap(c_prev, c_cur);
        std::swap(e_prev2, e_prev);
        std::swap(e_prev, e_cur);

        const double ai = t.alpha(i);

        c_cur[0] = c_prev[0] - ai;
        e_cur[0] = e_prev[0] + u * std::fabs(c_cur[0]);

        if (i == 2) {
            if (k >= 2) {
                const double m1 = t.alpha(1) * ai;
                const double b2 = t.beta(2) * t.beta(2);
                c_cur[1] = m1 - b2;
                e_cur[1] = u * (std::fabs(m1) + b2 + std::fabs(c_cur[1]));
            }
            continue;
        }

        const double bi = t.beta(i);
        const double b2 = bi * bi;  // one rounding, shared across the level
        const double aabs = std::fabs(ai);

        if (k >= 2) {
            const double t1 = ai * c_prev[0];
            const double t2 = c_prev[1] - t1;
            c_cur[1] = (b2 != 0.0) ? t2 - b2 : t2;
            double e = e_prev[1];
            e += aabs * e_prev[0];
            e += u * std::fabs(c_prev[1]);
            e += u * std::fabs(c_cur[1]);
            e += g2 * std::fabs(t1);
            if (b2 != 0.0) e += u * b2;
            e_cur[1] = e;
        }

        const int jhi = std::min(i - 1, k);
        for (int j = 3; j <= jhi; ++j) {
            const double t1 = ai * c_prev[j - 2];
            const double t2 = c_prev[j - 1] - t1;
            const double cj2 = c_prev2[j - 3];
            const bool have_t3 = (b2 != 0.0 && cj2 != 0.0);
            const double t3 = have_t3 ? b2 * cj2 : 0.0;
            c_cur[j - 1] = have_t3 ? t2 - t3 : t2;
            double e = e_prev[j - 1];
            e += aabs * e_prev[j - 2];
            e += b2 * e_prev2[j - 3];
            e += u * std::fabs(c_prev[j - 1]);
            e += u * std::fabs(c_cur[j - 1]);
            e += g2 * std::fabs(t1);
            if (have_t3) e += g2 * std::fabs(t3);
            e_cur[j - 1] = e;
        }

        if (i <= k) {  // close the row: coefficient j = i appears first at this level
            const double t1 = ai * c_prev[i - 2];
            const double ci2 = c_prev2[i - 3];
            const bool have_t3 = (b2 != 0.0 && ci2 != 0.0);
            const double t3 = have_t3 ? b2 * ci2 : 0.0;
            c_cur[i - 1] = -(have_t3 ? t1 + t3 : t1);
            double e = aabs * e_prev[i - 2];
            e += b2 * e_prev2[i - 3];
            e += u * std::fabs(t1);
            e += u * std::fabs(c_cur[i - 1]);
            if (have_t3) e += g2 * std::fabs(t3);
            e_cur[i - 1] = e;
        }
    }

    CoeffResult r;
    r.method = Method::labudde_sym;
    r.coeffs.assign(c_cur.begin(), c_cur.end());
    r.bounds.resize(static_cast<std::size_t>(k));
    const double inflate = 1.0 + 4.0 * u;
    for (int j = 0; j < k; ++j) r.bounds[static_cast<std::size_t>(j)] = e_cur[static_cast<std::size_t>(j)] * inflate;

    for (double v : r.coeffs)
        if (!std::isfinite(v)) throw OverflowError("charpoly_sym: coefficient overflow");
    return r;
}

}  // namespace charpoly
