#pragma once

#include <cstdint>
#include <vector>

#include "charpoly/types.hpp"

namespace charpoly {

/// Unit roundoff of IEEE binary64 (round to nearest): 2^-53.
inline constexpr double unit_roundoff = 0x1.0p-53;

/// gamma(n) = n*u / (1 - n*u), the standard accumulated-rounding factor.
/// gamma(0) = 0. DomainError unless n*u < 1.
double gamma(std::int64_t n, double u = unit_roundoff);

/// Characteristic polynomial coefficients c_1..c_k of a symmetric
/// tridiagonal matrix by the leading-principal-submatrix recursion, together
/// with running per-coefficient rounding-error bounds. O(n k) time, O(k)
/// memory. The recursion is evaluated with a fixed operation order, so
/// results are reproducible bit for bit; beta enters only as beta^2.
CoeffResult charpoly_sym(const SymTridiagonal& t, int k);

/// Running products beta_i, beta_i*beta_{i-1}, ..., beta_i*...*beta_2 used by
/// the Hessenberg recursion at level i (products[m-1] has m factors).
/// underflowed is set when a product of nonzero factors flushes to zero.
struct SubdiagonalProducts {
    std::vector<double> products;
    bool underflowed = false;
};

SubdiagonalProducts subdiagonal_products(const UpperHessenberg& h, int i);

/// Characteristic polynomial coefficients c_1..c_k of an upper Hessenberg
/// matrix, with running error bounds. O(n k^2) time, O(k^2) memory.
/// Exactly symmetric tridiagonal input is delegated to charpoly_sym (the
/// Hessenberg recursion specializes to the symmetric one there, and the
/// symmetric path is both cheaper and carries the tighter bound constant);
/// the result is then tagged Method::labudde_sym.
CoeffResult charpoly_hess(const UpperHessenberg& h, int k);

}  // namespace charpoly
