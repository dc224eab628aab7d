#include "charpoly/oracle.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace charpoly {

namespace {

bool is_hessenberg_exact(const RationalMatrix& m) {
    const int n = m.order();
    for (int j = 0; j < n; ++j)
        for (int i = j + 2; i < n; ++i)
            if (m(i, j) != 0) return false;
    return true;
}

}  // namespace

RationalMatrix lift(const DenseMatrix& a) {
    a.ensure_finite("lift");
    const int n = a.order();
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = mpq_class(a(i, j));  // exact: doubles are dyadic rationals
    return m;
}

mpq_class exact_trace(const RationalMatrix& m) {
    mpq_class t = 0;
    for (int i = 0; i < m.order(); ++i) t += m(i, i);
    return t;
}

mpq_class exact_det(const RationalMatrix& m) {
    const int n = m.order();

    // Clear denominators row by row; det scales by the product of the
    // row multipliers.
    std::vector<mpz_class> w(static_cast<std::size_t>(n) * n);
    mpz_class denom_scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpz_class f = l / m(i, j).get_den();
            w[static_cast<std::size_t>(i) * n + j] = m(i, j).get_num() * f;
        }
        denom_scale *= l;
    }

    auto at = [&](int i, int j) -> mpz_class& { return w[static_cast<std::size_t>(i) * n + j]; };

    // Bareiss: every division below is exact.
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return mpq_class(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }

    mpq_class det(sign * at(n - 1, n - 1), denom_scale);
    det.canonicalize();
    return det;
}

RationalPoly exact_charpoly_newton(const RationalMatrix& m) {
    const int n = m.order();

    // Common denominator scale: work with the integer matrix scale*m, then
    // divide scale^k back out of c_k.
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den().get_mpz_t());

    std::vector<mpz_class> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class f = scale / m(i, j).get_den();
            a[static_cast<std::size_t>(i) * n + j] = m(i, j).get_num() * f;
        }

    auto ia = [&](int i, int j) -> const mpz_class& { return a[static_cast<std::size_t>(i) * n + j]; };

    // c_1 = -tr(A);  B_1 = A + c_1 I;  c_k = -tr(A B_{k-1})/k;  B_k = A B_{k-1} + c_k I.
    // Over the integers every c_k is an integer and the division by k is exact.
    std::vector<mpz_class> c_int(static_cast<std::size_t>(n));
    std::vector<mpz_class> b(a), p(static_cast<std::size_t>(n) * n);

    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += ia(i, i);
    c_int[0] = -tr;
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] += c_int[0];

    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class& acc = p[static_cast<std::size_t>(i) * n + j];
                acc = 0;
                for (int l = 0; l < n; ++l)
                    mpz_addmul(acc.get_mpz_t(), ia(i, l).get_mpz_t(),
                               b[static_cast<std::size_t>(l) * n + j].get_mpz_t());
            }
        tr = 0;
        for (int i = 0; i < n; ++i) tr += p[static_cast<std::size_t>(i) * n + i];
        tr = -tr;
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw DomainError("newton recursion: trace not divisible by k");
        mpz_divexact_ui(c_int[static_cast<std::size_t>(k) - 1].get_mpz_t(), tr.get_mpz_t(),
                        static_cast<unsigned long>(k));
        b.swap(p);
        for (int i = 0; i < n; ++i)
            b[static_cast<std::size_t>(i) * n + i] += c_int[static_cast<std::size_t>(k) - 1];
    }

    RationalPoly c(static_cast<std::size_t>(n));
    mpz_class spow = 1;
    for (int k = 1; k <= n; ++k) {
        spow *= scale;
        c[static_cast<std::size_t>(k) - 1] = mpq_class(c_int[static_cast<std::size_t>(k) - 1], spow);
        c[static_cast<std::size_t>(k) - 1].canonicalize();
    }
    return c;
}

RationalPoly exact_charpoly_hessenberg(const RationalMatrix& m) {
    const int n = m.order();
    if (!is_hessenberg_exact(m))
        throw StructureError("exact_charpoly_hessenberg: nonzero below first subdiagonal");

    auto a = [&](int i) -> const mpq_class& { return m(i - 1, i - 1); };
    auto bsub = [&](int i) -> const mpq_class& { return m(i - 1, i - 2); };
    auto h = [&](int r, int c) -> const mpq_class& { return m(r - 1, c - 1); };

    // c[i][j] = j-th coefficient for the leading principal i x i submatrix.
    std::vector<RationalPoly> c(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i));
    auto cc = [&](int i, int j) -> mpq_class& { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) - 1]; };

    cc(1, 1) = -a(1);
    if (n >= 2) {
        cc(2, 1) = cc(1, 1) - a(2);
        cc(2, 2) = a(1) * a(2) - h(1, 2) * bsub(2);
    }
    std::vector<mpq_class> prod(static_cast<std::size_t>(n));  // prod[m] = b_i b_{i-1} ... b_{i-m+1}
    for (int i = 3; i <= n; ++i) {
        prod[1] = bsub(i);
        for (int mm = 2; mm <= i - 1; ++mm) prod[static_cast<std::size_t>(mm)] = prod[static_cast<std::size_t>(mm) - 1] * bsub(i - mm + 1);

        cc(i, 1) = cc(i - 1, 1) - a(i);
        for (int j = 2; j <= i - 1; ++j) {
            mpq_class s = cc(i - 1, j) - a(i) * cc(i - 1, j - 1);
            for (int mm = 1; mm <= j - 2; ++mm)
                s -= h(i - mm, i) * prod[static_cast<std::size_t>(mm)] * cc(i - mm - 1, j - mm - 1);
            s -= h(i - j + 1, i) * prod[static_cast<std::size_t>(j) - 1];
            cc(i, j) = s;
        }
        mpq_class s = -a(i) * cc(i - 1, i - 1);
        for (int mm = 1; mm <= i - 2; ++mm)
            s -= h(i - mm, i) * prod[static_cast<std::size_t>(mm)] * cc(i - mm - 1, i - mm - 1);
        s -= h(1, i) * prod[static_cast<std::size_t>(i) - 1];
        cc(i, i) = s;
    }
    return c[static_cast<std::size_t>(n)];
}

RationalPoly exact_charpoly(const RationalMatrix& m) {
    if (is_hessenberg_exact(m)) return exact_charpoly_hessenberg(m);
    return exact_charpoly_newton(m);
}

double to_double_round_up(const mpq_class& x) {
    const double d0 = mpq_get_d(x.get_mpq_t());  // truncated toward zero
    if (!std::isfinite(d0)) return std::numeric_limits<double>::infinity();
    if (mpq_class(d0) >= x) return d0;
    return std::nextafter(d0, std::numeric_limits<double>::infinity());
}

double to_double_nearest(const mpq_class& x) {
    const double d0 = mpq_get_d(x.get_mpq_t());
    if (!std::isfinite(d0)) return d0;
    const double up = std::nextafter(d0, std::numeric_limits<double>::infinity());
    const double dn = std::nextafter(d0, -std::numeric_limits<double>::infinity());
    mpq_class best = abs(mpq_class(d0) - x);
    double res = d0;
    if (std::isfinite(up)) {
        mpq_class e = abs(mpq_class(up) - x);
        if (e < best) { best = e; res = up; }
    }
    if (std::isfinite(dn)) {
        mpq_class e = abs(mpq_class(dn) - x);
        if (e < best) { best = e; res = dn; }
    }
    return res;
}

std::vector<CoeffError> error_report(const std::vector<double>& computed, const RationalPoly& exact) {
    if (computed.size() > exact.size())
        throw IndexError("error_report: more computed coefficients than exact ones");
    std::vector<CoeffError> out(computed.size());
    for (std::size_t j = 0; j < computed.size(); ++j) {
        const mpq_class& ex = exact[j];
        mpq_class diff = abs(mpq_class(computed[j]) - ex);
        out[j].abs_err = to_double_round_up(diff);
        if (ex == 0) {
            out[j].exact_zero = true;
            out[j].rel_err = std::numeric_limits<double>::quiet_NaN();
        } else {
            mpq_class rel = diff / abs(ex);
            out[j].rel_err = to_double_round_up(rel);
        }
    }
    return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace charpoly
