#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace charpoly {

// Shape or structural-zero violations (non-square input, asymmetry where
// symmetry is required, nonzeros below the permitted band).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values: in input entries or produced by an intermediate step.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A-priori hypothesis of an overall bound fails for the given matrix.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The external eigensolver did not converge.
struct EigFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent problem setup from the user (gallery name,
// parameter set, file contents).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense square real matrix, row-major, 0-based access.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(check_order(n)), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int order() const { return n_; }

    double& operator()(int i, int j) { return a_[idx(i, j)]; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Frobenius norm, overflow-guarded by scaling with the largest magnitude.
    double frobenius_norm() const;

    bool is_finite() const {
        for (double v : a_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    /// Exact (bitwise ==) symmetry test.
    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void ensure_finite(const char* what) const {
        if (!is_finite()) throw OverflowError(std::string(what) + ": non-finite entry");
    }

  private:
    static int check_order(int n) {
        if (n < 1) throw IndexError("matrix order must be >= 1");
        return n;
    }
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw IndexError("matrix index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<double> a_;
};

/// Symmetric tridiagonal matrix: diagonal alpha(1..n), subdiagonal beta(2..n).
/// Only the diagonal and one off-diagonal band are stored; the matrix it
/// denotes is symmetric by construction.
class SymTridiagonal {
  public:
    SymTridiagonal(std::vector<double> alpha, std::vector<double> beta);

    int order() const { return static_cast<int>(alpha_.size()); }

    /// Diagonal entry, 1-based: alpha(i) = t_{i,i}, 1 <= i <= n.
    double alpha(int i) const {
        if (i < 1 || i > order()) throw IndexError("alpha index out of range");
        return alpha_[static_cast<std::size_t>(i) - 1];
    }
    /// Subdiagonal entry, 1-based: beta(i) = t_{i,i-1} = t_{i-1,i}, 2 <= i <= n.
    double beta(int i) const {
        if (i < 2 || i > order()) throw IndexError("beta index out of range");
        return beta_[static_cast<std::size_t>(i) - 2];
    }

    const std::vector<double>& alphas() const { return alpha_; }
    const std::vector<double>& betas() const { return beta_; }

    DenseMatrix densify() const;

  private:
    std::vector<double> alpha_;  // length n
    std::vector<double> beta_;   // length n-1, beta_[i-2] = beta(i)
};

class UpperHessenberg;

/// Checks the strict lower structure (exact zeros below the first
/// subdiagonal) and finiteness; throws StructureError / OverflowError.
UpperHessenberg validate_hessenberg(DenseMatrix a);

/// Upper Hessenberg matrix. Construction goes through validate_hessenberg,
/// so every instance satisfies the structural-zero invariant.
class UpperHessenberg {
  public:
    int order() const { return a_.order(); }

    /// Diagonal entry, 1-based.
    double alpha(int i) const { return a_(i - 1, i - 1); }
    /// Subdiagonal entry h_{i,i-1}, 1-based, 2 <= i <= n.
    double beta(int i) const { return a_(i - 1, i - 2); }
    /// General entry h_{r,c}, 1-based.
    double entry(int r, int c) const { return a_(r - 1, c - 1); }

    const DenseMatrix& dense() const { return a_; }

  private:
    friend UpperHessenberg validate_hessenberg(DenseMatrix a);
    explicit UpperHessenberg(DenseMatrix a) : a_(std::move(a)) {}

    DenseMatrix a_;
};

/// True iff H is exactly symmetric and tridiagonal (bitwise equality on the
/// band, exact zeros above the first superdiagonal).
bool is_sym_tridiagonal(const UpperHessenberg& h);

/// Extracts the band; StructureError unless is_sym_tridiagonal(h).
SymTridiagonal as_sym_tridiagonal(const UpperHessenberg& h);

enum class Method {
    labudde_sym,
    labudde_hess,
    eig_summation,
    leverrier,
};

std::string method_name(Method m);

/// Coefficients c_1..c_k of the characteristic polynomial
///   det(lambda I - A) = lambda^n + c_1 lambda^{n-1} + ... + c_n,
/// stored without the implicit leading 1 (coeffs[j-1] = c_j), together with
/// per-coefficient running rounding-error bounds where the method provides
/// them (zeros otherwise).
struct CoeffResult {
    std::vector<double> coeffs;
    std::vector<double> bounds;
    Method method = Method::labudde_sym;
    /// A subdiagonal product underflowed to zero; bounds may be unreliable.
    bool underflow_flagged = false;
    /// Largest |Im| discarded when an eigenvalue-based method realifies.
    double realify_residue = 0.0;

    int k() const { return static_cast<int>(coeffs.size()); }
};

}  // namespace charpoly
