#include "braid/chains.hpp"

#include <cmath>
#include <string>

namespace braid {

GhzParamSet ghz_params(int l, const std::vector<int>& b_signs) {
    if (l < 1) throw LevelError("ghz_params: l must be at least 1");
    if (!b_signs.empty() && b_signs.size() != static_cast<std::size_t>(l))
        throw ArityError("ghz_params: b_signs must have l entries");
    GhzParamSet set;
    set.l = l;
    set.pairs.reserve(static_cast<std::size_t>(l));
    for (int j = 1; j <= l; ++j) {
        const double denom = static_cast<double>(l - j + 2);
        set.pairs.emplace_back(static_cast<double>(l - j + 1) / denom, 1.0 / denom);
    }
    set.b_signs = b_signs.empty() ? std::vector<int>(static_cast<std::size_t>(l), +1) : b_signs;
    return set;
}

CoefficientTable coefficients_closed_form(int l, const std::vector<ChainScalars>& params) {
    if (l < 1) throw LevelError("coefficients_closed_form: l must be at least 1");
    if (params.size() != static_cast<std::size_t>(l))
        throw ArityError("coefficients_closed_form: expected l parameter triples");
    for (const ChainScalars& p : params) {
        const double a2 = p.a * p.a;
        if (!(a2 >= 0.25 - 1e-15 && a2 <= 1.0 + 1e-15))
            throw OutOfUnitaryWindow("coefficients_closed_form: a² outside [1/4,1]");
    }

    CoefficientTable table;
    table.l = l;
    table.entries.assign(static_cast<std::size_t>(l) + 1, cplx{0.0, 0.0});

    cplx alpha0{1.0, 0.0};
    for (const ChainScalars& p : params) alpha0 *= p.a;
    table.entries[0] = alpha0;

    for (int p = 1; p <= l; ++p) {
        cplx amp{1.0, 0.0};
        for (int j = p + 1; j <= l; ++j) {
            const cplx A = params[static_cast<std::size_t>(j - 1)].A;
            amp /= A * A;
        }
        amp *= params[static_cast<std::size_t>(p - 1)].b;
        for (int j = 1; j < p; ++j) amp *= params[static_cast<std::size_t>(j - 1)].a;
        table.entries[static_cast<std::size_t>(p)] = amp;
    }
    return table;
}

QuditRegisterState run_superposition_chain(std::size_t D, std::size_t n, std::size_t k, int q,
                                           const std::vector<ChainStep>& steps,
                                           const QuditRegisterState& start,
                                           double* max_norm_drift) {
    if (start.D != D || start.n != n) throw ShapeError("chain: start state shape mismatch");
    QuditRegisterState state = start;
    double drift = std::abs(state.norm() - 1.0);
    for (const ChainStep& step : steps) {
        const GateParams params =
            GateParams::make(D, n, k, q, step.level, step.a_squared, step.b_sign, step.phi);
        const StructuredBraidGate gate = make_braid_gate(params, step.lambdas);
        state = apply_gate(gate, state);
        drift = std::max(drift, std::abs(state.norm() - 1.0));
    }
    if (max_norm_drift) *max_norm_drift = drift;
    return state;
}

QuditRegisterState generate_ghz(std::size_t D, std::size_t n, int l, std::size_t k,
                                const std::vector<int>& b_signs, int q) {
    if (l < 1 || static_cast<std::size_t>(l) > D - 1)
        throw LevelError("generate_ghz: l must lie in [1, D-1], got " + std::to_string(l));
    if (q < 0 || static_cast<std::size_t>(q) >= D)
        throw LevelError("generate_ghz: pivot level q out of range");
    const GhzParamSet set = ghz_params(l, b_signs);

    // Relabeling 0 <-> q carries the pivot-0 recipe to pivot q.
    auto relabel = [q](int level) { return level == 0 ? q : (level == q ? 0 : level); };

    std::vector<ChainStep> steps;
    steps.reserve(static_cast<std::size_t>(l));
    for (int p = 1; p <= l; ++p) {
        ChainStep step;
        step.level = relabel(p);
        step.a_squared = set.pairs[static_cast<std::size_t>(p - 1)].first;
        step.b_sign = set.b_signs[static_cast<std::size_t>(p - 1)];
        step.lambdas.assign(n - 1, Involution::make_transposition(q, relabel(p)));
        steps.push_back(std::move(step));
    }

    const QuditRegisterState start = basis_state(D, n, std::vector<int>(n, q));
    return run_superposition_chain(D, n, k, q, steps, start);
}

} // namespace braid
