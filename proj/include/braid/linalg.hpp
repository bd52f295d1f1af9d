#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "braid/errors.hpp"

namespace braid {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Entries are validated to be finite
/// whenever a matrix is built from user-supplied data.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    // Validating constructor used by deserialization paths.
    static ComplexMatrix from_entries(std::size_t rows, std::size_t cols,
                                      std::vector<cplx> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const cplx> entries() const { return entries_; }

    bool is_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

using ComplexVector = std::vector<cplx>;

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(cplx s, const ComplexMatrix& a);

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v);
cplx inner(const ComplexVector& a, const ComplexVector& b); // <a|b>, conjugate-linear in a
double vector_norm(const ComplexVector& v);

/// Kronecker product of the given factors, left to right.
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);
ComplexMatrix tensor_product(std::initializer_list<ComplexMatrix> factors);

/// Maximum absolute entry.
double max_abs(const ComplexMatrix& a);
double frobenius(const ComplexMatrix& a);

/// Max-abs entrywise difference. Shapes must match.
double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b);

enum class MatrixProperty { unitary, hermitian, involution, projector };

struct PropertyReport {
    bool pass = false;
    double residual = 0.0;        // max-abs norm
    double frobenius_residual = 0.0; // secondary diagnostic
};

/// Residuals: unitary |A†A-I|, hermitian |A-A†|, involution |A²-I|,
/// projector |A²-A|, all in the max-abs norm.
PropertyReport check_property(const ComplexMatrix& a, MatrixProperty property, double tol);

std::string property_name(MatrixProperty p);

// Default tolerances (overridable at every call site).
inline constexpr double kRelationTol = 1e-10;
inline constexpr double kConstructorTol = 1e-12;
// Dense realizations are refused above this total dimension.
inline constexpr std::size_t kDenseLimit = 4096;

} // namespace braid
