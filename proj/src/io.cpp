#include "charpoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace charpoly {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return true;
    }
    return false;
}

double parse_value(const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw SpecError("matrix market: bad numeric value '" + tok + "'");
    }
    if (used != tok.size()) throw SpecError("matrix market: bad numeric value '" + tok + "'");
    return v;
}

}  // namespace

DenseMatrix read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SpecError("matrix market: empty input");
    std::istringstream hdr(line);
    std::string banner, object, layout, field, symmetry;
    hdr >> banner >> object >> layout >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket") throw SpecError("matrix market: missing banner");
    if (lower(object) != "matrix") throw SpecError("matrix market: object must be 'matrix'");
    layout = lower(layout);
    field = lower(field);
    symmetry = lower(symmetry);

    if (field == "complex") throw SpecError("matrix market: complex matrices are not supported");
    if (field == "pattern") throw SpecError("matrix market: pattern matrices are not supported");
    if (field != "real" && field != "integer")
        throw SpecError("matrix market: unknown field '" + field + "'");
    if (symmetry == "skew-symmetric" || symmetry == "hermitian")
        throw SpecError("matrix market: symmetry '" + symmetry + "' is not supported");
    if (symmetry != "general" && symmetry != "symmetric")
        throw SpecError("matrix market: unknown symmetry '" + symmetry + "'");
    const bool sym = symmetry == "symmetric";

    if (!next_data_line(in, line)) throw SpecError("matrix market: missing size line");
    std::istringstream sz(line);

    if (layout == "array") {
        long rows = -1, cols = -1;
        if (!(sz >> rows >> cols) || rows <= 0 || cols <= 0)
            throw SpecError("matrix market: bad size line");
        if (rows != cols) throw StructureError("matrix market: matrix is not square");
        const int n = static_cast<int>(rows);
        DenseMatrix a(n);
        // Column-major entry stream; symmetric storage walks the lower triangle only.
        const long expected = sym ? rows * (rows + 1) / 2 : rows * cols;
        long seen = 0;
        int r = 0, c = 0;
        while (seen < expected && next_data_line(in, line)) {
            std::istringstream toks(line);
            std::string tok;
            while (seen < expected && toks >> tok) {
                const double v = parse_value(tok);
                a(r, c) = v;
                if (sym && r != c) a(c, r) = v;
                ++seen;
                ++r;
                if (r == n) {
                    ++c;
                    r = sym ? c : 0;
                }
            }
        }
        if (seen != expected) throw SpecError("matrix market: truncated array data");
        a.ensure_finite("matrix market");
        return a;
    }

    if (layout == "coordinate") {
        long rows = -1, cols = -1, nnz = -1;
        if (!(sz >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0)
            throw SpecError("matrix market: bad size line");
        if (rows != cols) throw StructureError("matrix market: matrix is not square");
        const int n = static_cast<int>(rows);
        DenseMatrix a(n);
        for (long e = 0; e < nnz; ++e) {
            if (!next_data_line(in, line)) throw SpecError("matrix market: truncated coordinate data");
            std::istringstream entry(line);
            long i = 0, j = 0;
            std::string tok;
            if (!(entry >> i >> j >> tok)) throw SpecError("matrix market: bad coordinate entry");
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw SpecError("matrix market: coordinate out of range");
            const double v = parse_value(tok);
            a(static_cast<int>(i) - 1, static_cast<int>(j) - 1) = v;
            if (sym && i != j) a(static_cast<int>(j) - 1, static_cast<int>(i) - 1) = v;
        }
        a.ensure_finite("matrix market");
        return a;
    }

    throw SpecError("matrix market: unknown layout '" + layout + "'");
}

DenseMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    return read_matrix_market(in);
}

}  // namespace charpoly
