#include "braid/gates.hpp"

#include <cmath>
#include <string>

namespace braid {

Involution Involution::make_transposition(int s, int t) {
    Involution inv;
    inv.kind = Kind::transposition;
    inv.s = s;
    inv.t = t;
    return inv;
}

Involution Involution::make_custom(ComplexMatrix m) {
    Involution inv;
    inv.kind = Kind::custom;
    inv.matrix = std::move(m);
    return inv;
}

ComplexMatrix realize_involution(const Involution& spec, std::size_t D) {
    switch (spec.kind) {
        case Involution::Kind::identity:
            return ComplexMatrix::identity(D);
        case Involution::Kind::transposition: {
            if (spec.s < 0 || spec.t < 0 || static_cast<std::size_t>(spec.s) >= D ||
                static_cast<std::size_t>(spec.t) >= D)
                throw InvalidInvolution("transposition level out of range for D=" +
                                        std::to_string(D));
            ComplexMatrix m = ComplexMatrix::identity(D);
            const auto s = static_cast<std::size_t>(spec.s);
            const auto t = static_cast<std::size_t>(spec.t);
            m(s, s) = 0.0;
            m(t, t) = 0.0;
            m(s, t) = 1.0;
            m(t, s) = 1.0;
            return m;
        }
        case Involution::Kind::custom: {
            const ComplexMatrix& m = spec.matrix;
            if (!m.square() || m.rows() != D)
                throw InvalidInvolution("custom involution must be DxD");
            if (check_property(m, MatrixProperty::hermitian, kConstructorTol).residual >
                kConstructorTol)
                throw InvalidInvolution("custom involution is not Hermitian");
            if (check_property(m, MatrixProperty::involution, kConstructorTol).residual >
                kConstructorTol)
                throw InvalidInvolution("custom involution does not square to I");
            return m;
        }
    }
    throw InvalidInvolution("unknown involution kind");
}

GateParams GateParams::make(std::size_t D, std::size_t n, std::size_t k, int q, int l,
                            double a_squared, int b_sign, double phi) {
    if (D < 2) throw LevelError("GateParams: D must be at least 2");
    if (n < 1) throw LevelError("GateParams: n must be at least 1");
    if (k < 1 || k > n) throw LevelError("GateParams: k must lie in [1,n]");
    if (q < 0 || static_cast<std::size_t>(q) >= D)
        throw LevelError("GateParams: pivot level q out of range");
    if (l < 0 || static_cast<std::size_t>(l) >= D)
        throw LevelError("GateParams: target level l out of range");
    if (q == l) throw PivotCollision("GateParams: pivot and target level coincide (q = l)");
    if (!(a_squared >= 0.25 && a_squared <= 1.0))
        throw OutOfUnitaryWindow("GateParams: a² must lie in [1/4,1], got " +
                                 std::to_string(a_squared));
    if (b_sign != 1 && b_sign != -1) throw Error("GateParams: b_sign must be ±1");

    GateParams p;
    p.D = D;
    p.n = n;
    p.k = k;
    p.q = q;
    p.l = l;
    p.a = std::sqrt(a_squared);
    p.b = b_sign * std::sqrt(std::max(0.0, 1.0 - a_squared));
    p.b_sign = b_sign;
    p.phi = phi;
    p.scalars = TlaScalars::from_a_squared(a_squared);
    return p;
}

std::array<ComplexMatrix, 3> make_local_ops(std::size_t D, int q, int l, double a, int b_sign,
                                            double phi) {
    if (q == l) throw PivotCollision("make_local_ops: q = l");
    const double a2 = a * a;
    if (!(a2 >= 0.25 - 1e-15 && a2 <= 1.0 + 1e-15))
        throw OutOfUnitaryWindow("make_local_ops: a² outside [1/4,1]");
    if (q < 0 || l < 0 || static_cast<std::size_t>(q) >= D || static_cast<std::size_t>(l) >= D)
        throw LevelError("make_local_ops: level out of range");
    const double b = b_sign * std::sqrt(std::max(0.0, 1.0 - a2));
    const auto uq = static_cast<std::size_t>(q);
    const auto ul = static_cast<std::size_t>(l);

    ComplexMatrix e1(D, D), e2(D, D), e3(D, D);
    e1(uq, uq) = 1.0;
    e2(uq, uq) = a2;
    e2(ul, ul) = b * b;
    e3(uq, ul) = a * b * std::polar(1.0, -phi);
    e3(ul, uq) = a * b * std::polar(1.0, phi);
    return {e1, e2, e3};
}

namespace {

std::vector<ComplexMatrix> realize_all(const std::vector<Involution>& specs, std::size_t D,
                                       std::size_t n) {
    if (specs.size() != n - 1)
        throw ArityError("expected n-1 = " + std::to_string(n - 1) + " involutions, got " +
                         std::to_string(specs.size()));
    std::vector<ComplexMatrix> out;
    out.reserve(specs.size());
    for (const Involution& s : specs) out.push_back(realize_involution(s, D));
    return out;
}

// Factor list I…I, M, I…I with M at the 1-based pivot position.
std::vector<ComplexMatrix> identity_dressed(const ComplexMatrix& pivot_op, std::size_t D,
                                            std::size_t n, std::size_t k) {
    std::vector<ComplexMatrix> factors(n, ComplexMatrix::identity(D));
    factors[k - 1] = pivot_op;
    return factors;
}

// Factor list λ₁…λ_{k-1}, M, λ_{k+1}…λ_n.
std::vector<ComplexMatrix> lambda_dressed(const ComplexMatrix& pivot_op,
                                          const std::vector<ComplexMatrix>& lambdas,
                                          std::size_t n, std::size_t k) {
    std::vector<ComplexMatrix> factors;
    factors.reserve(n);
    std::size_t li = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (j == k)
            factors.push_back(pivot_op);
        else
            factors.push_back(lambdas[li++]);
    }
    return factors;
}

void require_dense(std::size_t D, std::size_t n, std::size_t dense_limit) {
    if (power_dim(D, n) > dense_limit)
        throw DenseLimitExceeded("dense realization refused: D^n exceeds limit " +
                                 std::to_string(dense_limit));
}

} // namespace

TlGenerators make_tl_generators(const GateParams& params, const std::vector<Involution>& lambdas) {
    TlGenerators g;
    g.params = params;
    g.lambdas = realize_all(lambdas, params.D, params.n);
    const auto ops = make_local_ops(params.D, params.q, params.l, params.a, params.b_sign,
                                    params.phi);
    g.e1 = ops[0];
    g.e2 = ops[1];
    g.e3 = ops[2];
    return g;
}

ComplexMatrix TlGenerators::dense_e1(std::size_t dense_limit) const {
    require_dense(params.D, params.n, dense_limit);
    return tensor_product(
        std::span<const ComplexMatrix>(identity_dressed(e1, params.D, params.n, params.k)));
}

ComplexMatrix TlGenerators::dense_e2(std::size_t dense_limit) const {
    require_dense(params.D, params.n, dense_limit);
    const auto diag = identity_dressed(e2, params.D, params.n, params.k);
    const auto off = lambda_dressed(e3, lambdas, params.n, params.k);
    return add(tensor_product(std::span<const ComplexMatrix>(diag)),
               tensor_product(std::span<const ComplexMatrix>(off)));
}

StructuredBraidGate make_braid_gate(const GateParams& params,
                                    const std::vector<Involution>& lambdas) {
    StructuredBraidGate gate;
    gate.params = params;
    gate.lambda_specs = lambdas;
    gate.lambdas = realize_all(lambdas, params.D, params.n);

    const std::size_t D = params.D;
    const auto uq = static_cast<std::size_t>(params.q);
    const auto ul = static_cast<std::size_t>(params.l);
    const double d = params.scalars.d;
    const cplx A = params.scalars.A;
    const cplx Ainv2 = 1.0 / (A * A);
    const cplx A4 = A * A * A * A;

    ComplexMatrix diag(D, D);
    for (std::size_t m = 0; m < D; ++m) diag(m, m) = Ainv2;
    diag(uq, uq) = d * params.a_squared();
    diag(ul, ul) = d * params.b_squared() + Ainv2;
    gate.term_diag = diag;

    // Sign on the |q⟩⟨l| entry follows from expanding σ₁σ₂; see gate tests.
    ComplexMatrix off(D, D);
    const double dab = d * params.a * params.b;
    off(ul, uq) = dab * std::polar(1.0, params.phi);
    off(uq, ul) = -dab * std::polar(1.0, -params.phi) * A4;
    gate.term_offdiag = off;
    return gate;
}

void apply_one_site(ComplexVector& amplitudes, std::size_t D, std::size_t n, std::size_t site,
                    const ComplexMatrix& op) {
    if (op.rows() != D || op.cols() != D) throw ShapeError("apply_one_site: operator must be DxD");
    if (site < 1 || site > n) throw ShapeError("apply_one_site: site out of range");
    const std::size_t dim = amplitudes.size();
    std::size_t stride = 1;
    for (std::size_t j = 0; j < n - site; ++j) stride *= D;
    const std::size_t block = stride * D;

    std::vector<cplx> scratch(D);
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            for (std::size_t s = 0; s < D; ++s) scratch[s] = amplitudes[base + inner + s * stride];
            for (std::size_t s = 0; s < D; ++s) {
                cplx acc{0.0, 0.0};
                for (std::size_t t = 0; t < D; ++t) acc += op(s, t) * scratch[t];
                amplitudes[base + inner + s * stride] = acc;
            }
        }
    }
}

QuditRegisterState apply_gate(const StructuredBraidGate& gate, const QuditRegisterState& state) {
    const GateParams& p = gate.params;
    if (state.D != p.D || state.n != p.n || state.dim() != power_dim(p.D, p.n))
        throw ShapeError("apply_gate: state dimension does not match gate");

    // Diagonal term: a level-dependent scalar at the pivot site.
    QuditRegisterState out = state;
    {
        const std::size_t dim = state.dim();
        std::size_t stride = 1;
        for (std::size_t j = 0; j < p.n - p.k; ++j) stride *= p.D;
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const std::size_t level = (idx / stride) % p.D;
            out.amplitudes[idx] = gate.term_diag(level, level) * state.amplitudes[idx];
        }
    }

    // Off-diagonal term: pivot-site flip, then λ dressing site by site.
    ComplexVector off = state.amplitudes;
    apply_one_site(off, p.D, p.n, p.k, gate.term_offdiag);
    std::size_t li = 0;
    for (std::size_t j = 1; j <= p.n; ++j) {
        if (j == p.k) continue;
        const ComplexMatrix& lam = gate.lambdas[li++];
        bool is_identity = true;
        for (std::size_t r = 0; r < p.D && is_identity; ++r)
            for (std::size_t c = 0; c < p.D; ++c)
                if (lam(r, c) != cplx{r == c ? 1.0 : 0.0, 0.0}) {
                    is_identity = false;
                    break;
                }
        if (!is_identity) apply_one_site(off, p.D, p.n, j, lam);
    }
    for (std::size_t idx = 0; idx < out.dim(); ++idx) out.amplitudes[idx] += off[idx];
    return out;
}

ComplexMatrix gate_to_dense(const StructuredBraidGate& gate, std::size_t dense_limit) {
    const GateParams& p = gate.params;
    require_dense(p.D, p.n, dense_limit);
    const auto diag = identity_dressed(gate.term_diag, p.D, p.n, p.k);
    const auto off = lambda_dressed(gate.term_offdiag, gate.lambdas, p.n, p.k);
    return add(tensor_product(std::span<const ComplexMatrix>(diag)),
               tensor_product(std::span<const ComplexMatrix>(off)));
}

} // namespace braid
