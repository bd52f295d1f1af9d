#include "braid/reference.hpp"

#include <cmath>

namespace braid {

ComplexMatrix bell_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, 0, 0, -s},
                                     {0, s, -s, 0},
                                     {0, s, s, 0},
                                     {s, 0, 0, s}});
}

ComplexMatrix hadamard_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

double yang_baxter_residual(const ComplexMatrix& r) {
    if (!r.square()) throw ShapeError("yang_baxter_residual: R must be square");
    const auto dim = r.rows();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (d * d != dim) throw ShapeError("yang_baxter_residual: R must act on a DxD pair");
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix ri = tensor_product({r, id});
    const ComplexMatrix ir = tensor_product({id, r});
    const ComplexMatrix lhs = multiply(multiply(ri, ir), ri);
    const ComplexMatrix rhs = multiply(multiply(ir, ri), ir);
    return matrix_residual(lhs, rhs);
}

} // namespace braid
