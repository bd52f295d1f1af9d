#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "braid/gates.hpp"

namespace braid {

/// Residuals of the seven local-operator identities:
///   e1² = e1, e2²+e3² = e2, e2e3+e3e2 = e3, e1e2e1 = a²e1, e1e3e1 = 0,
///   e2e1e2+e3e1e3 = a²e2, e2e1e3+e3e1e2 = a²e3.
std::map<std::string, double> local_identity_residuals(const ComplexMatrix& e1,
                                                       const ComplexMatrix& e2,
                                                       const ComplexMatrix& e3, double a_squared);

struct SweepOptions {
    std::size_t D = 2;
    std::size_t n = 2;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    double tol_local = 1e-13;
    double tol_tla = 1e-10;
    double tol_braid = 1e-9;
    double tol_unitary = 1e-9;
    double tol_closed_form = 1e-12;
    double tol_apply = 1e-12;
    std::size_t dense_limit = kDenseLimit;
};

struct SweepReport {
    bool pass = false;
    std::size_t trials = 0;
    // Worst residual observed per relation, across all trials.
    std::map<std::string, double> max_residuals;
};

/// Randomized identity sweep over gate configurations at fixed (D,n).
/// Deterministic for a given seed; per-trial substreams are derived from
/// the root seed, so results do not depend on evaluation order.
SweepReport run_verification_sweep(const SweepOptions& options);

/// Deterministic per-trial seed derivation (splitmix64 over root ^ index).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

} // namespace braid
