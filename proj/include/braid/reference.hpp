#pragma once

#include "braid/linalg.hpp"

namespace braid {

/// The 4x4 Bell basis-change matrix.
ComplexMatrix bell_matrix();

/// The 2x2 Hadamard matrix.
ComplexMatrix hadamard_matrix();

/// Max-abs residual of (R⊗I)(I⊗R)(R⊗I) - (I⊗R)(R⊗I)(I⊗R) for a
/// two-site operator R acting on a pair of D-level systems.
double yang_baxter_residual(const ComplexMatrix& r);

} // namespace braid
