#include "charpoly/bounds.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace charpoly {

namespace {
constexpr double kUnit = 0x1.0p-53;

void check_nonnegative(const std::vector<double>& values) {
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("elem_sym: values must be nonnegative and finite");
    }
}
}  // namespace

SingularSpectrum SingularSpectrum::from_matrix(const DenseMatrix& a) {
    const int n = a.order();
    a.ensure_finite("singular spectrum");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    SingularSpectrum s;
    s.sigma.assign(svd.singularValues().data(), svd.singularValues().data() + n);
    return s;
}

std::vector<double> elem_sym_all(const std::vector<double>& values) {
    check_nonnegative(values);
    const std::size_t n = values.size();
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    std::size_t filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++filled;
        for (std::size_t t = filled; t >= 1; --t) e[t] += values[i] * e[t - 1];
    }
    for (double v : e)
        if (!std::isfinite(v)) throw OverflowError("elem_sym: overflow");
    return e;
}

double elem_sym(const std::vector<double>& values, int j) {
    if (j < 0 || j > static_cast<int>(values.size()))
        throw IndexError("elem_sym: need 0 <= j <= n");
    return elem_sym_all(values)[static_cast<std::size_t>(j)];
}

double elem_sym_top(const SingularSpectrum& s, int j) {
    const int n = static_cast<int>(s.sigma.size());
    if (j < 1 || j > n) throw IndexError("elem_sym_top: need 1 <= j <= n");
    std::vector<double> top(s.sigma.begin(), s.sigma.begin() + j);
    const double v = elem_sym(top, j - 1);

    double prod = 1.0;  // j * sigma_1 ... sigma_{j-1} dominates each of the j terms
    for (int i = 0; i + 1 < j; ++i) prod *= s.sigma[static_cast<std::size_t>(i)];
    const double cap = static_cast<double>(j) * prod;
    if (std::isfinite(cap) && v > cap * (1.0 + 1e-9))
        throw std::logic_error("elem_sym_top: exceeded its analytic cap");
    return v;
}

namespace {

OverallBound assemble(const SingularSpectrum& s, double frobenius, const CoeffResult& r, double nu,
                      bool symmetric) {
    const int n = static_cast<int>(s.sigma.size());
    const int k = r.k();
    if (k > n) throw IndexError("overall bound: more coefficients than singular values");
    if (r.bounds.size() != r.coeffs.size())
        throw IndexError("overall bound: malformed coefficient result");
    if (!(nu > 0.0)) throw DomainError("overall bound: need nu > 0");

    const double u = kUnit;
    const double n2 = static_cast<double>(n) * n;
    if (!(frobenius < 1.0 / (nu * n2 * u)))
        throw HypothesisError("overall bound: ||A||_F too large for the first-order model");

    OverallBound out;
    out.nu = nu;
    out.u = u;
    out.frobenius = frobenius;
    out.total.resize(static_cast<std::size_t>(k));
    out.condition.resize(static_cast<std::size_t>(k));
    out.running = r.bounds;

    const double base = nu * n2 * frobenius * u;

    if (symmetric) {
        std::vector<double> esf = elem_sym_all(s.sigma);
        for (int j = 1; j <= k; ++j) {
            const double c = static_cast<double>(n - j + 1) * esf[static_cast<std::size_t>(j) - 1] * base;
            out.condition[static_cast<std::size_t>(j) - 1] = c;
        }
    } else {
        // s_{j-1} of the j largest, built incrementally as sigmas join.
        std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
        e[0] = 1.0;
        double binom = 1.0;  // C(n, j), updated multiplicatively
        for (int j = 1; j <= k; ++j) {
            for (std::size_t t = static_cast<std::size_t>(j); t >= 1; --t)
                e[t] += s.sigma[static_cast<std::size_t>(j) - 1] * e[t - 1];
            binom *= static_cast<double>(n - j + 1) / static_cast<double>(j);
            const double c = binom * e[static_cast<std::size_t>(j) - 1] * base;
            out.condition[static_cast<std::size_t>(j) - 1] = c;
        }
    }

    for (int j = 0; j < k; ++j) {
        out.total[static_cast<std::size_t>(j)] =
            out.condition[static_cast<std::size_t>(j)] + out.running[static_cast<std::size_t>(j)];
        if (!std::isfinite(out.total[static_cast<std::size_t>(j)]))
            throw OverflowError("overall bound: overflow");
    }
    return out;
}

}  // namespace

OverallBound overall_bound_sym(const SingularSpectrum& s, double frobenius, const CoeffResult& r,
                               double nu) {
    return assemble(s, frobenius, r, nu, true);
}

OverallBound overall_bound_sym(const DenseMatrix& a, const CoeffResult& r, double nu) {
    return assemble(SingularSpectrum::from_matrix(a), a.frobenius_norm(), r, nu, true);
}

OverallBound overall_bound_nonsym(const SingularSpectrum& s, double frobenius, const CoeffResult& r,
                                  double nu) {
    return assemble(s, frobenius, r, nu, false);
}

OverallBound overall_bound_nonsym(const DenseMatrix& a, const CoeffResult& r, double nu) {
    return assemble(SingularSpectrum::from_matrix(a), a.frobenius_norm(), r, nu, false);
}

}  // namespace charpoly
