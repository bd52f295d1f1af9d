#pragma once

#include <map>
#include <string>
#include <utility>

#include "braid/linalg.hpp"

namespace braid {

/// The scalar bundle tying together the loop parameter d, the squared
/// superposition weight a², and the unit phase A with d = -A² - A⁻².
/// Only the positive branch d = 1/a ∈ [1,2] is representable; anything
/// outside the unitarity window is rejected at construction.
struct TlaScalars {
    double d = 0.0;
    double a_squared = 0.0;
    cplx A;
    double theta = 0.0; // A = e^{iθ}, θ ∈ [π/3, π/2]

    static TlaScalars from_d(double d);
    static TlaScalars from_a_squared(double a_squared);
};

/// A = e^{iθ} with θ = ½·arccos(-d/2). Requires d ∈ [1,2].
cplx solve_phase(double d);

/// Two candidate TLA generators h₁, h₂ with their loop parameter.
struct TlaPair {
    ComplexMatrix h1;
    ComplexMatrix h2;
    double d = 0.0;
};

struct RelationReport {
    bool pass = false;
    std::map<std::string, double> residuals;
    double max_residual = 0.0;
};

/// Residuals of h₁h₂h₁-h₁, h₂h₁h₂-h₂, hᵢ²-d·hᵢ and Hermiticity.
RelationReport check_tla(const TlaPair& pair, double tol = kRelationTol);

struct BraidReport {
    bool pass = false;
    double residual = 0.0;
};

/// Residual of σ₁σ₂σ₁ - σ₂σ₁σ₂.
BraidReport check_braid(const ComplexMatrix& sigma1, const ComplexMatrix& sigma2,
                        double tol = kRelationTol);

/// σᵢ = A·hᵢ + A⁻¹·I. Requires |A| = 1.
std::pair<ComplexMatrix, ComplexMatrix> jones_generators(const TlaPair& pair, cplx A);

/// σᵢ⁻¹ = A⁻¹·hᵢ + A·I for the same pair.
std::pair<ComplexMatrix, ComplexMatrix> jones_inverses(const TlaPair& pair, cplx A);

} // namespace braid
