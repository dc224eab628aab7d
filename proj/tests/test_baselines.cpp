#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "charpoly/baselines.hpp"
#include "charpoly/labudde.hpp"
#include "charpoly/oracle.hpp"

using namespace charpoly;
using cd = std::complex<double>;

TEST_CASE("summation algorithm on small spectra") {
    // (lambda-1)(lambda-2) = lambda^2 - 3 lambda + 2
    std::vector<cd> r = summation_algorithm({cd(1.0), cd(2.0)});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == cd(-3.0));
    CHECK(r[1] == cd(2.0));

    // (lambda-i)(lambda+i) = lambda^2 + 1
    std::vector<cd> c = summation_algorithm({cd(0.0, 1.0), cd(0.0, -1.0)});
    CHECK(c[0] == cd(0.0));
    CHECK(c[1] == cd(1.0));

    CHECK(summation_algorithm({}).empty());
}

TEST_CASE("conjugate closure check") {
    CHECK(is_conjugate_closed({cd(1.0), cd(2.0)}));
    CHECK(is_conjugate_closed({cd(1.0, 2.0), cd(1.0, -2.0)}));
    CHECK_FALSE(is_conjugate_closed({cd(1.0, 2.0)}));
    CHECK_FALSE(is_conjugate_closed({cd(1.0, 2.0), cd(1.0, -2.5)}));
}

TEST_CASE("realify keeps the largest discarded imaginary part") {
    RealifiedCoeffs r = realify({cd(1.0, 1e-9), cd(2.0, -3e-8)});
    CHECK(r.coeffs[0] == 1.0);
    CHECK(r.coeffs[1] == 2.0);
    CHECK(r.max_imag == 3e-8);
}

TEST_CASE("poly via eig on a diagonal matrix is exact") {
    DenseMatrix d(3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    CoeffResult r = poly_via_eig(d);
    CHECK(r.method == Method::eig_summation);
    CHECK(r.coeffs[0] == -6.0);
    CHECK(r.coeffs[1] == 11.0);
    CHECK(r.coeffs[2] == -6.0);
    CHECK(r.realify_residue == 0.0);
}

TEST_CASE("poly via eig handles complex pairs") {
    // rotation-like matrix: eigenvalues +-i, p = lambda^2 + 1
    DenseMatrix a = DenseMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
    CoeffResult r = poly_via_eig(a);
    CHECK(r.coeffs[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.coeffs[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("summation equals the symmetric recursion on diagonal matrices") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        std::vector<double> lam(static_cast<std::size_t>(n));
        for (double& v : lam) v = dist(rng);

        std::vector<cd> clam(lam.begin(), lam.end());
        std::vector<cd> viasum = summation_algorithm(clam);

        std::vector<double> beta(lam.size() > 0 ? lam.size() - 1 : 0, 0.0);
        CoeffResult viasym = charpoly_sym(SymTridiagonal(lam, beta), n);
        for (int j = 0; j < n; ++j) {
            CAPTURE(trial);
            CHECK(viasum[static_cast<std::size_t>(j)].imag() == 0.0);
            CHECK(viasum[static_cast<std::size_t>(j)].real() ==
                  viasym.coeffs[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("leverrier identity matrix") {
    std::vector<double> c = leverrier(DenseMatrix::identity(2));
    CHECK(c[0] == -2.0);
    CHECK(c[1] == 1.0);
}

TEST_CASE("leverrier all-ones 3x3") {
    DenseMatrix a(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = 1.0;
    std::vector<double> c = leverrier(a);
    CHECK(c[0] == -3.0);
    CHECK(std::fabs(c[1]) <= 1e-12);
    CHECK(std::fabs(c[2]) <= 1e-12);
}

TEST_CASE("leverrier matches the oracle on benign integer matrices") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        DenseMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
        std::vector<double> c = leverrier(a);
        RationalPoly exact = exact_charpoly(lift(a));
        std::vector<CoeffError> errs = error_report(c, exact);
        for (int j = 0; j < n; ++j) {
            CAPTURE(trial);
            if (!errs[static_cast<std::size_t>(j)].exact_zero)
                CHECK(errs[static_cast<std::size_t>(j)].rel_err <= 1e-10);
            else
                CHECK(errs[static_cast<std::size_t>(j)].abs_err <= 1e-8);
        }
    }
}

TEST_CASE("leverrier blows up on the all-ones matrix at n=40") {
    DenseMatrix a(40);
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j) a(i, j) = 1.0;
    std::vector<double> c = leverrier(a);
    double worst = 0.0;
    for (int k = 22; k <= 40; ++k)
        worst = std::max(worst, std::fabs(c[static_cast<std::size_t>(k) - 1]));
    CHECK(worst > 1e15);  // exact value is 0 for every k >= 2
}
