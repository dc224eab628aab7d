#pragma once

#include <optional>

#include "charpoly/types.hpp"

namespace charpoly {

/// Normwise backward-error model for the orthogonal reduction:
/// the computed form is exact for some A + E with ||E||_F <= estimate.
struct ReductionReport {
    double backward_error_estimate = 0.0;  // nu * n^2 * ||A||_F * u
    double nu = 10.0;
    bool used_symmetric_path = false;
};

struct HessenbergReduction {
    UpperHessenberg h;
    ReductionReport report;
    std::optional<DenseMatrix> q;  // accumulated transform, A ~ Q H Q^T
};

struct TridiagonalReduction {
    SymTridiagonal t;
    ReductionReport report;
    std::optional<DenseMatrix> q;
};

/// Householder reduction to upper Hessenberg form. Columns whose
/// below-subdiagonal part is already exactly zero are skipped, so an input
/// that is already Hessenberg passes through bit for bit. Annihilated
/// entries are written as exact zeros.
HessenbergReduction to_hessenberg(const DenseMatrix& a, bool want_q = false, double nu = 10.0);

/// Householder reduction of an exactly symmetric matrix to symmetric
/// tridiagonal form (rank-2 update per reflector). StructureError if the
/// input is not symmetric.
TridiagonalReduction to_tridiagonal(const DenseMatrix& a, bool want_q = false, double nu = 10.0);

/// Exact structural scan: no nonzeros below the first subdiagonal.
bool is_upper_hessenberg(const DenseMatrix& a);

}  // namespace charpoly
