#pragma once

#include <complex>
#include <vector>

#include "charpoly/types.hpp"

namespace charpoly {

/// Coefficients c_1..c_n of prod_j (lambda - lam_j), by repeated synthetic
/// multiplication: c starts at (1, 0, ..., 0) and each eigenvalue updates
/// c(2..j+1) -= lam_j * c(1..j) in place, high index first.
std::vector<std::complex<double>> summation_algorithm(const std::vector<std::complex<double>>& lams);

/// True when the multiset of eigenvalues is closed under conjugation
/// (|Im| <= tol counts as real; pairs match within tol).
bool is_conjugate_closed(const std::vector<std::complex<double>>& lams, double tol = 0.0);

struct RealifiedCoeffs {
    std::vector<double> coeffs;
    double max_imag = 0.0;  // largest |Im| discarded
};

/// Drops imaginary parts, recording the largest magnitude discarded.
RealifiedCoeffs realify(const std::vector<std::complex<double>>& coeffs);

/// Coefficients via the eigenvalues of a backward-stable dense eigensolver
/// followed by summation_algorithm. Bounds are zeros (the method carries
/// none); realify_residue records the discarded imaginary mass.
CoeffResult poly_via_eig(const DenseMatrix& a);

/// Trace recursion: c_1 = -tr(A), B_1 = A + c_1 I,
/// c_k = -tr(A B_{k-1})/k, B_k = A B_{k-1} + c_k I. O(n^4), floating point;
/// prone to catastrophic growth, kept as a comparison baseline.
std::vector<double> leverrier(const DenseMatrix& a);

}  // namespace charpoly
