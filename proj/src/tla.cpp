#include "braid/tla.hpp"

#include <cmath>

namespace braid {

cplx solve_phase(double d) {
    if (!(d >= 1.0 && d <= 2.0))
        throw OutOfUnitaryWindow("solve_phase: d must lie in [1,2], got " + std::to_string(d));
    const double theta = 0.5 * std::acos(-d / 2.0);
    return std::polar(1.0, theta);
}

TlaScalars TlaScalars::from_d(double d) {
    TlaScalars s;
    s.A = solve_phase(d); // validates the window
    s.d = d;
    s.a_squared = 1.0 / (d * d);
    s.theta = 0.5 * std::acos(-d / 2.0);
    return s;
}

TlaScalars TlaScalars::from_a_squared(double a_squared) {
    if (!(a_squared >= 0.25 && a_squared <= 1.0))
        throw OutOfUnitaryWindow("a² must lie in [1/4,1], got " + std::to_string(a_squared));
    // a² = 1/4 maps to d = 2 exactly; guard the sqrt rounding at the boundary.
    double d = 1.0 / std::sqrt(a_squared);
    if (d > 2.0) d = 2.0;
    if (d < 1.0) d = 1.0;
    TlaScalars s = from_d(d);
    s.a_squared = a_squared;
    return s;
}

RelationReport check_tla(const TlaPair& pair, double tol) {
    const ComplexMatrix& h1 = pair.h1;
    const ComplexMatrix& h2 = pair.h2;
    if (!h1.square() || !h2.square() || h1.rows() != h2.rows())
        throw ShapeError("check_tla: generators must be square and of equal shape");

    RelationReport report;
    auto record = [&](const std::string& name, const ComplexMatrix& lhs,
                      const ComplexMatrix& rhs) {
        const double r = matrix_residual(lhs, rhs);
        report.residuals[name] = r;
        report.max_residual = std::max(report.max_residual, r);
    };

    record("h1.h2.h1 = h1", multiply(multiply(h1, h2), h1), h1);
    record("h2.h1.h2 = h2", multiply(multiply(h2, h1), h2), h2);
    record("h1^2 = d.h1", multiply(h1, h1), scale(pair.d, h1));
    record("h2^2 = d.h2", multiply(h2, h2), scale(pair.d, h2));
    record("h1 hermitian", h1, adjoint(h1));
    record("h2 hermitian", h2, adjoint(h2));

    report.pass = report.max_residual <= tol;
    return report;
}

BraidReport check_braid(const ComplexMatrix& sigma1, const ComplexMatrix& sigma2, double tol) {
    if (!sigma1.square() || !sigma2.square() || sigma1.rows() != sigma2.rows())
        throw ShapeError("check_braid: generators must be square and of equal shape");
    const ComplexMatrix lhs = multiply(multiply(sigma1, sigma2), sigma1);
    const ComplexMatrix rhs = multiply(multiply(sigma2, sigma1), sigma2);
    BraidReport report;
    report.residual = matrix_residual(lhs, rhs);
    report.pass = report.residual <= tol;
    return report;
}

namespace {
void require_unit_phase(cplx A) {
    if (std::abs(std::abs(A) - 1.0) > 1e-12)
        throw PhaseError("jones_generators: |A| must equal 1");
}
} // namespace

std::pair<ComplexMatrix, ComplexMatrix> jones_generators(const TlaPair& pair, cplx A) {
    require_unit_phase(A);
    const ComplexMatrix id = ComplexMatrix::identity(pair.h1.rows());
    const cplx Ainv = 1.0 / A;
    return {add(scale(A, pair.h1), scale(Ainv, id)), add(scale(A, pair.h2), scale(Ainv, id))};
}

std::pair<ComplexMatrix, ComplexMatrix> jones_inverses(const TlaPair& pair, cplx A) {
    require_unit_phase(A);
    const ComplexMatrix id = ComplexMatrix::identity(pair.h1.rows());
    const cplx Ainv = 1.0 / A;
    return {add(scale(Ainv, pair.h1), scale(A, id)), add(scale(Ainv, pair.h2), scale(A, id))};
}

} // namespace braid
