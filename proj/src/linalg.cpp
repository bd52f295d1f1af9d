#include "braid/linalg.hpp"

#include <cmath>
#include <utility>

namespace braid {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (const cplx& v : row) m(i, j++) = v;
        ++i;
    }
    if (!m.is_finite()) throw Error("from_rows: non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::from_entries(std::size_t rows, std::size_t cols,
                                          std::vector<cplx> entries) {
    if (entries.size() != rows * cols)
        throw ShapeError("from_entries: rows*cols does not match entry count");
    ComplexMatrix m(rows, cols);
    m.entries_ = std::move(entries);
    if (!m.is_finite()) throw Error("from_entries: non-finite entry");
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous in b and c.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("subtract: shape mismatch");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

ComplexMatrix scale(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols() != v.size()) throw ShapeError("matvec: dimension mismatch");
    ComplexVector out(a.rows(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw ShapeError("inner: dimension mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vector_norm(const ComplexVector& v) {
    double acc = 0.0;
    for (const cplx& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) throw EmptyProduct("tensor_product: empty factor list");
    ComplexMatrix acc = factors[0];
    for (std::size_t f = 1; f < factors.size(); ++f) {
        const ComplexMatrix& b = factors[f];
        ComplexMatrix next(acc.rows() * b.rows(), acc.cols() * b.cols());
        for (std::size_t i = 0; i < acc.rows(); ++i)
            for (std::size_t j = 0; j < acc.cols(); ++j) {
                const cplx aij = acc(i, j);
                if (aij == cplx{0.0, 0.0}) continue;
                for (std::size_t p = 0; p < b.rows(); ++p)
                    for (std::size_t q = 0; q < b.cols(); ++q)
                        next(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
            }
        acc = std::move(next);
    }
    return acc;
}

ComplexMatrix tensor_product(std::initializer_list<ComplexMatrix> factors) {
    std::vector<ComplexMatrix> fs(factors);
    return tensor_product(std::span<const ComplexMatrix>(fs));
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const cplx& v : a.entries()) acc += std::norm(v);
    return std::sqrt(acc);
}

double matrix_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix_residual: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

PropertyReport check_property(const ComplexMatrix& a, MatrixProperty property, double tol) {
    if (!a.square()) throw ShapeError("check_property: matrix not square");
    ComplexMatrix diff;
    switch (property) {
        case MatrixProperty::unitary:
            diff = subtract(multiply(adjoint(a), a), ComplexMatrix::identity(a.rows()));
            break;
        case MatrixProperty::hermitian:
            diff = subtract(a, adjoint(a));
            break;
        case MatrixProperty::involution:
            diff = subtract(multiply(a, a), ComplexMatrix::identity(a.rows()));
            break;
        case MatrixProperty::projector:
            diff = subtract(multiply(a, a), a);
            break;
    }
    PropertyReport report;
    report.residual = max_abs(diff);
    report.frobenius_residual = frobenius(diff);
    report.pass = report.residual <= tol;
    return report;
}

std::string property_name(MatrixProperty p) {
    switch (p) {
        case MatrixProperty::unitary: return "unitary";
        case MatrixProperty::hermitian: return "hermitian";
        case MatrixProperty::involution: return "involution";
        case MatrixProperty::projector: return "projector";
    }
    return "?";
}

} // namespace braid
