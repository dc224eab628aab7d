#pragma once

#include <iosfwd>
#include <string>

#include "charpoly/types.hpp"

namespace charpoly {

/// Reads a square real matrix in Matrix Market format. Supports the
/// "array" (dense, column-major) and "coordinate" (sparse) layouts with
/// real or integer fields, general or symmetric storage. Symmetric files
/// carry only the lower triangle; the mirror entries are filled in.
/// Complex, pattern, skew-symmetric and hermitian files are rejected.
DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix_market_file(const std::string& path);

}  // namespace charpoly
