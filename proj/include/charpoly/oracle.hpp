#pragma once

#include <gmpxx.h>

#include <vector>

#include "charpoly/types.hpp"

namespace charpoly {

/// Square matrix over the rationals, row-major, 0-based access.
/// mpq_class keeps every entry in lowest terms with positive denominator.
class RationalMatrix {
  public:
    explicit RationalMatrix(int n)
        : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw IndexError("matrix order must be >= 1");
    }

    int order() const { return n_; }

    mpq_class& operator()(int i, int j) { return a_[idx(i, j)]; }
    const mpq_class& operator()(int i, int j) const { return a_[idx(i, j)]; }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw IndexError("matrix index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<mpq_class> a_;
};

/// Exact characteristic polynomial coefficients c_1..c_n (monic leading 1
/// implicit), coeffs[j-1] = c_j.
using RationalPoly = std::vector<mpq_class>;

/// Exact embedding of an IEEE double matrix into the rationals. Every finite
/// double is a dyadic rational, so the lift is lossless; decimal literals
/// keep their binary value (lift of 1e-10 is not 1/10^10).
RationalMatrix lift(const DenseMatrix& a);

mpq_class exact_trace(const RationalMatrix& m);

/// Determinant by fraction-free elimination (denominators cleared per row,
/// integer Bareiss core, exact divisions throughout).
mpq_class exact_det(const RationalMatrix& m);

/// Newton-identity recursion over the rationals: denominators are cleared,
/// the integer-preserving trace recursion runs in arbitrary-precision
/// integers, and the power-of-the-scale factor is divided back out.
RationalPoly exact_charpoly_newton(const RationalMatrix& m);

/// Leading-principal-minor recursion for upper Hessenberg input, evaluated
/// exactly over the rationals. StructureError unless the strict lower part
/// of m is exactly zero.
RationalPoly exact_charpoly_hessenberg(const RationalMatrix& m);

/// Exact characteristic polynomial. Hessenberg-structured input (tridiagonal
/// included) is routed to the Hessenberg recursion, everything else to the
/// Newton path; the two agree exactly.
RationalPoly exact_charpoly(const RationalMatrix& m);

/// Per-coefficient comparison of a computed coefficient vector against exact
/// values. Differences are formed in rational arithmetic and rounded upward,
/// so the reported errors never understate.
struct CoeffError {
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool exact_zero = false;  // exact coefficient is 0; rel_err meaningless (NaN)
};

std::vector<CoeffError> error_report(const std::vector<double>& computed,
                                     const RationalPoly& exact);

/// Nearest double to x (used for display; ties resolved toward the
/// truncation-side candidate).
double to_double_nearest(const mpq_class& x);

/// Smallest representable double >= x. Pre: x >= 0.
double to_double_round_up(const mpq_class& x);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace charpoly
