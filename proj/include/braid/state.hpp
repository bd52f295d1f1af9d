#pragma once

#include <cstddef>
#include <vector>

#include "braid/linalg.hpp"

namespace braid {

/// Amplitude vector of an n-qudit register over the computational basis,
/// lexicographic order: |s₁s₂…sₙ⟩ ↔ Σ sⱼ·D^(n-j) (s₁ most significant).
struct QuditRegisterState {
    std::size_t D = 2;
    std::size_t n = 1;
    ComplexVector amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const { return vector_norm(amplitudes); }

    /// Digits of a lexicographic basis index, most significant first.
    std::vector<int> digits_of(std::size_t index) const;
    std::size_t index_of(const std::vector<int>& digits) const;
};

/// Dⁿ as a size, guarding overflow for absurd inputs.
std::size_t power_dim(std::size_t D, std::size_t n);

/// |s₁…sₙ⟩ with the given digits.
QuditRegisterState basis_state(std::size_t D, std::size_t n, const std::vector<int>& digits);

/// Zero state of the right dimension (all amplitudes 0); mostly internal.
QuditRegisterState zero_state(std::size_t D, std::size_t n);

/// ⟨s1|s2⟩.
cplx overlap(const QuditRegisterState& s1, const QuditRegisterState& s2);

/// Von Neumann entropy (base 2) across the cut {positions} vs the rest.
/// Positions are 1-based; the subset must be proper and nonempty.
double entanglement_entropy(const QuditRegisterState& state, const std::vector<int>& positions);

/// Schmidt coefficients (singular values) across the same cut.
std::vector<double> schmidt_coefficients(const QuditRegisterState& state,
                                         const std::vector<int>& positions);

} // namespace braid
