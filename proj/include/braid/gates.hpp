#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "braid/state.hpp"
#include "braid/tla.hpp"

namespace braid {

/// A Hermitian involution dressing one non-pivot site of the register.
struct Involution {
    enum class Kind { identity, transposition, custom };

    Kind kind = Kind::identity;
    int s = 0; // transposition levels
    int t = 0;
    ComplexMatrix matrix; // custom only

    static Involution make_identity() { return {}; }
    static Involution make_transposition(int s, int t);
    static Involution make_custom(ComplexMatrix m);
};

/// Realize the involution as a D×D matrix. Custom matrices are checked
/// for Hermiticity and M² = I.
ComplexMatrix realize_involution(const Involution& spec, std::size_t D);

/// Full parameter bundle of one braid gate B_{ql}(n,k).
struct GateParams {
    std::size_t D = 2;
    std::size_t n = 1;
    std::size_t k = 1; // pivot position, 1-based
    int q = 0;         // pivot level
    int l = 1;         // target level, l ≠ q
    double a = 0.0;
    double b = 0.0; // b = b_sign·√(1-a²)
    int b_sign = +1;
    double phi = 0.0;
    TlaScalars scalars; // derived from a (positive branch d = 1/a)

    double a_squared() const { return a * a; }
    double b_squared() const { return b * b; }

    static GateParams make(std::size_t D, std::size_t n, std::size_t k, int q, int l,
                           double a_squared, int b_sign = +1, double phi = 0.0);
};

/// Local operators at the pivot site:
///   e1 = |q⟩⟨q|,  e2 = a²|q⟩⟨q| + b²|l⟩⟨l|,
///   e3 = a·b·(e^{-iφ}|q⟩⟨l| + e^{iφ}|l⟩⟨q|).
std::array<ComplexMatrix, 3> make_local_ops(std::size_t D, int q, int l, double a, int b_sign,
                                            double phi);

/// The two TLA generators E₁, E₂ in structured form: E₁ puts e1 at the
/// pivot with identities elsewhere; E₂ adds the λ-dressed e3 term.
struct TlGenerators {
    GateParams params;
    std::vector<ComplexMatrix> lambdas; // realized, n-1 entries, sites j ≠ k in order
    ComplexMatrix e1, e2, e3;

    ComplexMatrix dense_e1(std::size_t dense_limit = kDenseLimit) const;
    ComplexMatrix dense_e2(std::size_t dense_limit = kDenseLimit) const;
};

TlGenerators make_tl_generators(const GateParams& params, const std::vector<Involution>& lambdas);

/// B_{ql}(n,k) = σ₁σ₂ stored as the sum of two tensor-product terms:
///   (⊗I) ⊗ term_diag ⊗ (⊗I)  +  (⊗λ) ⊗ term_offdiag ⊗ (⊗λ)
/// with the pivot-site matrices
///   term_diag    = d·a²|q⟩⟨q| + (d·b² + A⁻²)|l⟩⟨l| + A⁻²·Σ_{m≠q,l}|m⟩⟨m|
///   term_offdiag = d·a·b·(e^{iφ}|l⟩⟨q| - e^{-iφ}A⁴|q⟩⟨l|)
struct StructuredBraidGate {
    GateParams params;
    std::vector<Involution> lambda_specs;
    std::vector<ComplexMatrix> lambdas; // realized
    ComplexMatrix term_diag;
    ComplexMatrix term_offdiag;
};

StructuredBraidGate make_braid_gate(const GateParams& params,
                                    const std::vector<Involution>& lambdas);

/// Apply the gate without materializing the Dⁿ×Dⁿ matrix.
QuditRegisterState apply_gate(const StructuredBraidGate& gate, const QuditRegisterState& state);

/// Dense realization (verification path); refuses Dⁿ > dense_limit.
ComplexMatrix gate_to_dense(const StructuredBraidGate& gate,
                            std::size_t dense_limit = kDenseLimit);

/// Apply a single-site D×D operator at 1-based position `site`.
void apply_one_site(ComplexVector& amplitudes, std::size_t D, std::size_t n, std::size_t site,
                    const ComplexMatrix& op);

} // namespace braid
