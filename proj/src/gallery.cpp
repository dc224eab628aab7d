#include "charpoly/gallery.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace charpoly {
namespace gallery {

namespace {

double param_or(const GallerySpec& s, const std::string& key, double fallback) {
    auto it = s.params.find(key);
    return it == s.params.end() ? fallback : it->second;
}

void check_params(const GallerySpec& s, std::initializer_list<const char*> allowed) {
    for (const auto& kv : s.params) {
        bool ok = false;
        for (const char* a : allowed)
            if (kv.first == a) { ok = true; break; }
        if (!ok) throw SpecError("gallery " + s.name + ": unknown parameter '" + kv.first + "'");
    }
}

int checked_n(const GallerySpec& s) {
    if (s.n < 1) throw SpecError("gallery " + s.name + ": need n >= 1");
    return s.n;
}

DenseMatrix forsythe(int n, double nu) {
    DenseMatrix a(n);
    for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
    a(n - 1, 0) = nu;
    return a;
}

KnownCoeffs forsythe_known(int n, double nu) {
    KnownCoeffs k(static_cast<std::size_t>(n), mpq_class(0));
    k[static_cast<std::size_t>(n) - 1] = -mpq_class(nu);
    return k;
}

DenseMatrix rotate(const DenseMatrix& f, std::uint64_t seed) {
    const int n = f.order();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c)
        if (r(c, c) < 0.0) q.col(c) = -q.col(c);

    Eigen::MatrixXd fd(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fd(i, j) = f(i, j);
    Eigen::MatrixXd rotated = q * fd * q.transpose();

    DenseMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = rotated(i, j);
    return out;
}

}  // namespace

GalleryMatrix build(const GallerySpec& spec) {
    const std::string& name = spec.name;

    if (name == "forsythe" || name == "forsythe-rotated") {
        check_params(spec, {"nu"});
        const int n = checked_n(spec);
        const double nu = param_or(spec, "nu", 1e-10);
        if (!(nu > 0.0) || !std::isfinite(nu)) throw SpecError("gallery forsythe: need nu > 0");
        DenseMatrix f = forsythe(n, nu);
        if (name == "forsythe-rotated") {
            if (!spec.has_seed) throw SpecError("gallery forsythe-rotated: seed required");
            f = rotate(f, spec.seed);
        }
        return {std::move(f), forsythe_known(n, nu)};
    }

    if (name == "hansen") {
        check_params(spec, {});
        const int n = checked_n(spec);
        DenseMatrix a(n);
        a(0, 0) = 1.0;
        for (int i = 1; i < n; ++i) {
            a(i, i) = 2.0;
            a(i, i - 1) = -1.0;
            a(i - 1, i) = -1.0;
        }
        KnownCoeffs k(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            mpz_class b = binomial(static_cast<unsigned long>(2 * n - j), static_cast<unsigned long>(j));
            if (j % 2 != 0) b = -b;
            k[static_cast<std::size_t>(j) - 1] = mpq_class(b);
        }
        return {std::move(a), std::move(k)};
    }

    if (name == "toeplitz-indef") {
        check_params(spec, {"b"});
        const int n = checked_n(spec);
        const double b = param_or(spec, "b", 100.0);
        if (!std::isfinite(b)) throw SpecError("gallery toeplitz-indef: need finite b");
        DenseMatrix a(n);
        for (int i = 1; i < n; ++i) {
            a(i, i - 1) = b;
            a(i - 1, i) = b;
        }
        KnownCoeffs k(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; j += 2) k[static_cast<std::size_t>(j) - 1] = mpq_class(0);
        return {std::move(a), std::move(k)};
    }

    if (name == "frank") {
        check_params(spec, {});
        const int n = checked_n(spec);
        DenseMatrix a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = std::max(1, i - 1); j <= n; ++j)
                a(i - 1, j - 1) = static_cast<double>(n + 1 - std::max(i, j));
        return {std::move(a), std::nullopt};
    }

    if (name == "chow" || name == "chow-transpose") {
        check_params(spec, {});
        const int n = checked_n(spec);
        if (n > 1000) throw SpecError("gallery chow: entries 2^n overflow, n too large");
        DenseMatrix a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = std::max(1, i - 1); j <= n; ++j)
                a(i - 1, j - 1) = std::ldexp(1.0, j - i + 1) + (i == j ? 1.0 : 0.0);
        if (name == "chow") a = a.transposed();
        return {std::move(a), std::nullopt};
    }

    if (name == "companion") {
        check_params(spec, {});
        const int n = static_cast<int>(spec.coeffs.size());
        if (n < 1) throw SpecError("gallery companion: need a coefficient list");
        if (spec.n != 0 && spec.n != n)
            throw SpecError("gallery companion: n conflicts with coefficient count");
        for (double c : spec.coeffs)
            if (!std::isfinite(c)) throw SpecError("gallery companion: non-finite coefficient");
        DenseMatrix a(n);
        for (int i = 1; i < n; ++i) a(i, i - 1) = 1.0;
        for (int r = 0; r < n; ++r) a(r, n - 1) = -spec.coeffs[static_cast<std::size_t>(n - 1 - r)];
        KnownCoeffs k(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) k[static_cast<std::size_t>(j)] = mpq_class(spec.coeffs[static_cast<std::size_t>(j)]);
        return {std::move(a), std::move(k)};
    }

    if (name == "all-ones") {
        check_params(spec, {});
        const int n = checked_n(spec);
        DenseMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = 1.0;
        KnownCoeffs k(static_cast<std::size_t>(n), mpq_class(0));
        k[0] = -mpq_class(n);
        return {std::move(a), std::move(k)};
    }

    throw SpecError("unknown gallery matrix '" + name + "'");
}

}  // namespace gallery
}  // namespace charpoly
