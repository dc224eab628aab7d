#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charpoly/oracle.hpp"
#include "charpoly/types.hpp"

namespace charpoly {
namespace gallery {

/// Exact coefficients where the family has a closed form; entries are
/// nullopt where no closed form is attached (partial knowledge is real:
/// the indefinite Toeplitz family pins only the odd coefficients).
using KnownCoeffs = std::vector<std::optional<mpq_class>>;

struct GallerySpec {
    std::string name;
    int n = 0;                            // ignored for companion (derived from coeffs)
    std::map<std::string, double> params; // "nu" (forsythe), "b" (toeplitz-indef)
    std::vector<double> coeffs;           // companion only
    std::uint64_t seed = 0;
    bool has_seed = false;
};

struct GalleryMatrix {
    DenseMatrix a;
    std::optional<KnownCoeffs> known;
};

/// Families:
///   forsythe          superdiagonal ones, nu in the bottom-left corner
///   forsythe-rotated  Q F Q^T for a seeded random orthogonal Q
///   hansen            tridiagonal, diag (1,2,...,2), off-diagonal -1
///   toeplitz-indef    tridiagonal, zero diagonal, off-diagonal b
///   frank             upper Hessenberg, f_ij = n+1-max(i,j) on and above
///   chow-transpose    upper Hessenberg, 2^{j-i+1} + [i=j]
///   chow              its transpose (lower Hessenberg)
///   companion         subdiagonal ones, last column -c_n..-c_1 top down
///   all-ones
/// SpecError on unknown name or invalid parameters.
GalleryMatrix build(const GallerySpec& spec);

}  // namespace gallery
}  // namespace charpoly
