#include "braid/connector.hpp"

#include <cmath>
#include <string>

namespace braid {

double ConnectorGate::phase() const { return std::arg(std::conj(alpha)); }

ComplexMatrix ConnectorGate::dense(std::size_t dense_limit) const {
    const std::size_t dim = psi.dim();
    if (dim > dense_limit)
        throw DenseLimitExceeded("connector: dense realization refused above limit " +
                                 std::to_string(dense_limit));
    const cplx Ainv2 = 1.0 / (A * A);
    ComplexMatrix m(dim, dim);
    // σ₁σ₂ = A²d²·α|c⟩⟨ψ| + d·|c⟩⟨c| + d·|ψ⟩⟨ψ| + A⁻²·I
    const cplx rank_cpsi = A * A * d * d * alpha;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            cplx v{0.0, 0.0};
            if (i == component_index)
                v += rank_cpsi * std::conj(psi.amplitudes[j]) +
                     (j == component_index ? cplx{d, 0.0} : cplx{0.0, 0.0});
            v += d * psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
            if (i == j) v += Ainv2;
            m(i, j) = v;
        }
    }
    return m;
}

ConnectorGate connect(const QuditRegisterState& psi, const std::vector<int>& component,
                      double threshold_tol) {
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw NormError("connect: |ψ⟩ must be normalized within 1e-10");
    ConnectorGate gate;
    gate.D = psi.D;
    gate.n = psi.n;
    gate.psi = psi;
    gate.component_index = psi.index_of(component);
    gate.alpha = psi.amplitudes[gate.component_index];

    const double alpha_sq = std::norm(gate.alpha);
    if (alpha_sq < 0.25 - threshold_tol)
        throw BelowThreshold("connect: |α|² = " + std::to_string(alpha_sq) +
                                 " is below the 1/4 threshold",
                             alpha_sq);

    double d = 1.0 / std::abs(gate.alpha);
    // fp guard at the window boundaries
    if (d > 2.0) d = 2.0;
    if (d < 1.0) d = 1.0;
    gate.d = d;
    gate.A = solve_phase(d);
    return gate;
}

QuditRegisterState apply_connector(const ConnectorGate& gate, const QuditRegisterState& state) {
    if (state.D != gate.D || state.n != gate.n || state.dim() != gate.psi.dim())
        throw ShapeError("apply_connector: state dimension mismatch");
    const cplx Ainv2 = 1.0 / (gate.A * gate.A);
    const cplx psi_v = inner(gate.psi.amplitudes, state.amplitudes);
    const cplx c_v = state.amplitudes[gate.component_index];

    QuditRegisterState out = state;
    for (std::size_t i = 0; i < out.dim(); ++i)
        out.amplitudes[i] = Ainv2 * state.amplitudes[i] + gate.d * psi_v * gate.psi.amplitudes[i];
    out.amplitudes[gate.component_index] +=
        gate.d * c_v + gate.A * gate.A * gate.d * gate.d * gate.alpha * psi_v;
    return out;
}

std::vector<AdmissibleComponent> admissible_components(const QuditRegisterState& psi,
                                                       double threshold_tol) {
    std::vector<AdmissibleComponent> out;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        const double alpha_sq = std::norm(psi.amplitudes[i]);
        if (alpha_sq >= 0.25 - threshold_tol)
            out.push_back({i, psi.digits_of(i), alpha_sq});
    }
    return out;
}

} // namespace braid
