#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "braid/gates.hpp"

namespace braid {

/// Amplitudes α_{l,r}, r = 0..l, of the successively superposed state.
struct CoefficientTable {
    int l = 0;
    std::vector<cplx> entries; // size l+1
};

/// Parameter recipe producing equal-weight branches:
///   a_j² = (l-j+1)/(l-j+2),  b_j² = 1/(l-j+2),  j = 1..l.
struct GhzParamSet {
    int l = 0;
    std::vector<std::pair<double, double>> pairs; // (a_j², b_j²)
    std::vector<int> b_signs;
};

GhzParamSet ghz_params(int l, const std::vector<int>& b_signs = {});

/// Closed-form branch amplitudes from the per-step scalars (a_j, b_j, A_j):
///   α_{l0} = a_l·a_{l-1}···a_1
///   α_{lp} = (Π_{j=p+1..l} A_j⁻²)·b_p·a_{p-1}···a_1
struct ChainScalars {
    double a = 0.0;
    double b = 0.0;
    cplx A;
};
CoefficientTable coefficients_closed_form(int l, const std::vector<ChainScalars>& params);

/// One step of a successive-superposition chain: the gate B_{q,level}(n,k).
struct ChainStep {
    int level = 1; // target level l of this step
    double a_squared = 0.5;
    int b_sign = +1;
    double phi = 0.0;
    std::vector<Involution> lambdas; // n-1 entries
};

/// Apply B_{q,l_m}···B_{q,l_1} to the start state. All steps share
/// (D,n,k,q). If max_norm_drift is given, the largest |norm-1| over all
/// intermediate states is reported there.
QuditRegisterState run_superposition_chain(std::size_t D, std::size_t n, std::size_t k, int q,
                                           const std::vector<ChainStep>& steps,
                                           const QuditRegisterState& start,
                                           double* max_norm_drift = nullptr);

/// |GHZ⟩_l over pivot level q: equal-weight branches on the l+1 levels
/// {q} ∪ relabel({1..l}) where relabel swaps 0 and q. q = 0 gives the
/// plain construction from |00…0⟩.
QuditRegisterState generate_ghz(std::size_t D, std::size_t n, int l, std::size_t k = 1,
                                const std::vector<int>& b_signs = {}, int q = 0);

} // namespace braid
