#pragma once

#include <cstddef>
#include <vector>

#include "braid/state.hpp"
#include "braid/tla.hpp"

namespace braid {

/// The σ₁σ₂ gate built from the projector pair E₁ = |c⟩⟨c|, E₂ = |ψ⟩⟨ψ|.
/// Acting on the component basis state it reproduces |ψ⟩ up to the pure
/// phase e^{-i·arg α} (equivalently e^{i·arg α*}); on any vector
/// orthogonal to span{|c⟩, |ψ⟩} it is the scalar A⁻².
struct ConnectorGate {
    std::size_t D = 2;
    std::size_t n = 1;
    std::size_t component_index = 0;
    cplx alpha;      // amplitude of the component in |ψ⟩
    double d = 0.0;  // 1/|α|
    cplx A;          // solve_phase(d)
    QuditRegisterState psi;

    /// Phase of the generated state relative to |ψ⟩: arg(α*) = -arg(α).
    double phase() const;

    /// Dense σ₁σ₂ = A²d²·E₁E₂ + d·E₁ + d·E₂ + A⁻²·I (verification path).
    ComplexMatrix dense(std::size_t dense_limit = kDenseLimit) const;
};

/// Build the connector for the given component digits. Requires |ψ⟩
/// normalized within 1e-10 and |α|² ≥ 1/4 (closed boundary, tol 1e-12).
ConnectorGate connect(const QuditRegisterState& psi, const std::vector<int>& component,
                      double threshold_tol = 1e-12);

/// Rank-structured application: A⁻²·v plus a correction supported on
/// span{|c⟩, |ψ⟩}, using two inner products.
QuditRegisterState apply_connector(const ConnectorGate& gate, const QuditRegisterState& state);

/// All basis components whose amplitude admits a connector gate.
struct AdmissibleComponent {
    std::size_t index = 0;
    std::vector<int> digits;
    double alpha_squared = 0.0;
};
std::vector<AdmissibleComponent> admissible_components(const QuditRegisterState& psi,
                                                       double threshold_tol = 1e-12);

} // namespace braid
