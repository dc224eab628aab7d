#pragma once

#include <vector>

#include "charpoly/types.hpp"

namespace charpoly {

/// Singular values, descending. The a-priori coefficient bounds are driven
/// by elementary symmetric functions of these.
struct SingularSpectrum {
    std::vector<double> sigma;

    static SingularSpectrum from_matrix(const DenseMatrix& a);
};

/// Elementary symmetric function s_j of nonnegative values (s_0 = 1),
/// by the cancellation-free coefficient recurrence.
double elem_sym(const std::vector<double>& values, int j);

/// All of s_0..s_n at once.
std::vector<double> elem_sym_all(const std::vector<double>& values);

/// s_{j-1} of the j largest singular values. Satisfies
/// s_{j-1}^{(j)} <= j * sigma_1 ... sigma_{j-1}, which is asserted.
double elem_sym_top(const SingularSpectrum& s, int j);

/// Per-coefficient a-priori bound: condition[j-1] covers the orthogonal
/// reduction's backward error pushed through the coefficient map,
/// running[j-1] is the recursion's own rounding bound, total is their sum.
struct OverallBound {
    std::vector<double> total;
    std::vector<double> condition;
    std::vector<double> running;
    double nu = 0.0;
    double u = 0.0;
    double frobenius = 0.0;
};

/// Symmetric pipeline: condition term (n-j+1) * s_{j-1} * nu * n^2 * ||A||_F * u.
/// HypothesisError unless ||A||_F < 1/(nu n^2 u).
OverallBound overall_bound_sym(const DenseMatrix& a, const CoeffResult& r, double nu = 10.0);
OverallBound overall_bound_sym(const SingularSpectrum& s, double frobenius, const CoeffResult& r,
                               double nu = 10.0);

/// Nonsymmetric pipeline: condition term C(n,j) * s_{j-1}^{(j)} * nu * n^2 * ||A||_F * u.
OverallBound overall_bound_nonsym(const DenseMatrix& a, const CoeffResult& r, double nu = 10.0);
OverallBound overall_bound_nonsym(const SingularSpectrum& s, double frobenius, const CoeffResult& r,
                                  double nu = 10.0);

}  // namespace charpoly
