#include "charpoly/baselines.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace charpoly {

std::vector<std::complex<double>> summation_algorithm(const std::vector<std::complex<double>>& lams) {
    const std::size_t n = lams.size();
    std::vector<std::complex<double>> c(n + 1, std::complex<double>(0.0, 0.0));
    c[0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
        const std::complex<double> lam = lams[j - 1];
        for (std::size_t t = j; t >= 1; --t) c[t] -= lam * c[t - 1];
    }
    return std::vector<std::complex<double>>(c.begin() + 1, c.end());
}

bool is_conjugate_closed(const std::vector<std::complex<double>>& lams, double tol) {
    std::vector<bool> used(lams.size(), false);
    for (std::size_t i = 0; i < lams.size(); ++i) {
        if (used[i] || std::fabs(lams[i].imag()) <= tol) continue;
        bool found = false;
        for (std::size_t j = 0; j < lams.size(); ++j) {
            if (j == i || used[j]) continue;
            if (std::fabs(lams[j].real() - lams[i].real()) <= tol &&
                std::fabs(lams[j].imag() + lams[i].imag()) <= tol) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

RealifiedCoeffs realify(const std::vector<std::complex<double>>& coeffs) {
    RealifiedCoeffs r;
    r.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        r.coeffs.push_back(c.real());
        r.max_imag = std::max(r.max_imag, std::fabs(c.imag()));
    }
    return r;
}

CoeffResult poly_via_eig(const DenseMatrix& a) {
    const int n = a.order();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);

    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw EigFailure("poly_via_eig: eigensolver did not converge");

    std::vector<std::complex<double>> lams(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lams[static_cast<std::size_t>(i)] = es.eigenvalues()(i);

    // Real input: the solver returns a conjugate-closed spectrum, so the
    // imaginary parts of the coefficients are pure roundoff.
    RealifiedCoeffs rc = realify(summation_algorithm(lams));

    CoeffResult r;
    r.method = Method::eig_summation;
    r.coeffs = std::move(rc.coeffs);
    r.bounds.assign(static_cast<std::size_t>(n), 0.0);
    r.realify_residue = rc.max_imag;
    return r;
}

std::vector<double> leverrier(const DenseMatrix& a) {
    const int n = a.order();
    a.ensure_finite("leverrier");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);

    // Newton identities on the power traces s_k = trace(A^k); one matrix
    // product per step. The power entries grow like ||A||^k, which is the
    // cancellation this baseline is meant to exhibit.
    std::vector<double> s(static_cast<std::size_t>(n));
    Eigen::MatrixXd p = m;
    s[0] = p.trace();
    for (int k = 2; k <= n; ++k) {
        p = m * p;
        s[static_cast<std::size_t>(k) - 1] = p.trace();
    }

    std::vector<double> c(static_cast<std::size_t>(n));
    c[0] = -s[0];
    for (int k = 2; k <= n; ++k) {
        double acc = s[static_cast<std::size_t>(k) - 1];
        for (int j = 1; j < k; ++j)
            acc += c[static_cast<std::size_t>(j) - 1] * s[static_cast<std::size_t>(k - j) - 1];
        c[static_cast<std::size_t>(k) - 1] = -acc / static_cast<double>(k);
    }
    for (double v : c)
        if (!std::isfinite(v)) throw OverflowError("leverrier: coefficient overflow");
    return c;
}

}  // namespace charpoly
