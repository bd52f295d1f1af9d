#include "braid/verify.hpp"

#include <cmath>
#include <random>

#include "braid/reference.hpp"
#include "braid/tla.hpp"

namespace braid {

std::map<std::string, double> local_identity_residuals(const ComplexMatrix& e1,
                                                       const ComplexMatrix& e2,
                                                       const ComplexMatrix& e3,
                                                       double a_squared) {
    const std::size_t D = e1.rows();
    const ComplexMatrix zero(D, D);
    std::map<std::string, double> out;
    out["e1^2 = e1"] = matrix_residual(multiply(e1, e1), e1);
    out["e2^2 + e3^2 = e2"] = matrix_residual(add(multiply(e2, e2), multiply(e3, e3)), e2);
    out["e2.e3 + e3.e2 = e3"] = matrix_residual(add(multiply(e2, e3), multiply(e3, e2)), e3);
    out["e1.e2.e1 = a2.e1"] =
        matrix_residual(multiply(multiply(e1, e2), e1), scale(a_squared, e1));
    out["e1.e3.e1 = 0"] = matrix_residual(multiply(multiply(e1, e3), e1), zero);
    out["e2.e1.e2 + e3.e1.e3 = a2.e2"] = matrix_residual(
        add(multiply(multiply(e2, e1), e2), multiply(multiply(e3, e1), e3)), scale(a_squared, e2));
    out["e2.e1.e3 + e3.e1.e2 = a2.e3"] = matrix_residual(
        add(multiply(multiply(e2, e1), e3), multiply(multiply(e3, e1), e2)), scale(a_squared, e3));
    return out;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = root ^ (index * 0x9e3779b97f4a7c15ULL) ^ 0xbf58476d1ce4e5b9ULL;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<Involution> draw_involutions(std::mt19937_64& rng, std::size_t D, std::size_t n) {
    std::vector<Involution> lambdas;
    std::uniform_int_distribution<int> kind(0, D == 2 ? 2 : 1);
    std::uniform_int_distribution<int> level(0, static_cast<int>(D) - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        switch (kind(rng)) {
            case 0:
                lambdas.push_back(Involution::make_identity());
                break;
            case 1: {
                int s = level(rng);
                int t = level(rng);
                while (t == s) t = level(rng);
                lambdas.push_back(Involution::make_transposition(s, t));
                break;
            }
            default:
                lambdas.push_back(Involution::make_custom(hadamard_matrix()));
                break;
        }
    }
    return lambdas;
}

QuditRegisterState random_state(std::mt19937_64& rng, std::size_t D, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    QuditRegisterState s = zero_state(D, n);
    for (cplx& a : s.amplitudes) a = {gauss(rng), gauss(rng)};
    const double norm = s.norm();
    for (cplx& a : s.amplitudes) a /= norm;
    return s;
}

} // namespace

SweepReport run_verification_sweep(const SweepOptions& opt) {
    if (power_dim(opt.D, opt.n) > opt.dense_limit)
        throw DenseLimitExceeded("verification sweep needs dense realizations; D^n too large");

    SweepReport report;
    report.trials = opt.trials;
    auto record = [&](const std::string& name, double value) {
        auto [it, inserted] = report.max_residuals.try_emplace(name, value);
        if (!inserted) it->second = std::max(it->second, value);
    };

    bool pass = true;
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        std::mt19937_64 rng(derive_seed(opt.seed, trial));
        std::uniform_int_distribution<int> level(0, static_cast<int>(opt.D) - 1);
        std::uniform_real_distribution<double> a2_draw(0.25, 1.0);
        std::uniform_real_distribution<double> phi_draw(0.0, 2.0 * M_PI);
        std::uniform_int_distribution<int> coin(0, 1);
        std::uniform_int_distribution<std::size_t> k_draw(1, opt.n);

        const int q = level(rng);
        int l = level(rng);
        while (l == q) l = level(rng);
        const GateParams params =
            GateParams::make(opt.D, opt.n, k_draw(rng), q, l, a2_draw(rng),
                             coin(rng) ? +1 : -1, phi_draw(rng));
        const std::vector<Involution> lambdas = draw_involutions(rng, opt.D, opt.n);

        // Local identities at the pivot site.
        const TlGenerators gens = make_tl_generators(params, lambdas);
        for (const auto& [name, value] :
             local_identity_residuals(gens.e1, gens.e2, gens.e3, params.a_squared())) {
            record(name, value);
            if (value > opt.tol_local) pass = false;
        }

        // Dense TLA pair and Jones generators.
        const ComplexMatrix E1 = gens.dense_e1(opt.dense_limit);
        const ComplexMatrix E2 = gens.dense_e2(opt.dense_limit);
        for (const ComplexMatrix* E : {&E1, &E2}) {
            const auto herm = check_property(*E, MatrixProperty::hermitian, opt.tol_tla);
            const auto proj = check_property(*E, MatrixProperty::projector, opt.tol_tla);
            record("E hermitian", herm.residual);
            record("E projector", proj.residual);
            if (!herm.pass || !proj.pass) pass = false;
        }

        const double d = params.scalars.d;
        const TlaPair pair{scale(d, E1), scale(d, E2), d};
        const RelationReport tla = check_tla(pair, opt.tol_tla);
        record("tla", tla.max_residual);
        if (!tla.pass) pass = false;

        const auto [sigma1, sigma2] = jones_generators(pair, params.scalars.A);
        const BraidReport braid = check_braid(sigma1, sigma2, opt.tol_braid);
        record("braid", braid.residual);
        if (!braid.pass) pass = false;
        for (const ComplexMatrix* s : {&sigma1, &sigma2}) {
            const auto u = check_property(*s, MatrixProperty::unitary, opt.tol_unitary);
            record("sigma unitary", u.residual);
            if (!u.pass) pass = false;
        }

        // Closed-form gate against the independent product route.
        const StructuredBraidGate gate = make_braid_gate(params, lambdas);
        const ComplexMatrix closed = gate_to_dense(gate, opt.dense_limit);
        const ComplexMatrix product = multiply(sigma1, sigma2);
        const double eq = matrix_residual(closed, product);
        record("closed form = sigma1.sigma2", eq);
        if (eq > opt.tol_closed_form) pass = false;

        const auto gate_unitary = check_property(closed, MatrixProperty::unitary, opt.tol_tla);
        record("gate unitary", gate_unitary.residual);
        if (!gate_unitary.pass) pass = false;

        // Structured application against the dense matrix-vector product.
        const QuditRegisterState probe = random_state(rng, opt.D, opt.n);
        const QuditRegisterState fast = apply_gate(gate, probe);
        const ComplexVector slow = matvec(closed, probe.amplitudes);
        double apply_res = 0.0;
        for (std::size_t i = 0; i < slow.size(); ++i)
            apply_res = std::max(apply_res, std::abs(slow[i] - fast.amplitudes[i]));
        record("structured apply = dense apply", apply_res);
        if (apply_res > opt.tol_apply) pass = false;

        record("apply norm drift", std::abs(fast.norm() - 1.0));
        if (std::abs(fast.norm() - 1.0) > opt.tol_apply) pass = false;
    }
    report.pass = pass;
    return report;
}

} // namespace braid
