#include <doctest.h>

#include <cmath>
#include <random>

#include "braid/gates.hpp"
#include "braid/reference.hpp"
#include "braid/verify.hpp"

using namespace braid;

namespace {

QuditRegisterState random_state(std::mt19937_64& rng, std::size_t D, std::size_t n) {
    std::normal_distribution<double> g;
    QuditRegisterState s = zero_state(D, n);
    for (cplx& a : s.amplitudes) a = {g(rng), g(rng)};
    const double norm = s.norm();
    for (cplx& a : s.amplitudes) a /= norm;
    return s;
}

} // namespace

TEST_CASE("local ops, qubit case a2=1/2 phi=0") {
    const auto ops = make_local_ops(2, 0, 1, std::sqrt(0.5), +1, 0.0);
    CHECK(matrix_residual(ops[1], ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}})) < 1e-15);
    CHECK(matrix_residual(ops[2], ComplexMatrix::from_rows({{0.0, 0.5}, {0.5, 0.0}})) < 1e-15);
}

TEST_CASE("local ops with relabeled pivot q=1 l=2, D=3") {
    const auto ops = make_local_ops(3, 1, 2, 0.9, +1, 0.2);
    CHECK(std::abs(ops[0](1, 1) - cplx{1.0, 0.0}) < 1e-15);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(ops[1](0, j)) == 0.0);
        CHECK(std::abs(ops[1](j, 0)) == 0.0);
        CHECK(std::abs(ops[2](0, j)) == 0.0);
        CHECK(std::abs(ops[2](j, 0)) == 0.0);
    }
}

TEST_CASE("local ops validation") {
    CHECK_THROWS_AS(make_local_ops(3, 1, 1, 0.8, +1, 0.0), PivotCollision);
    CHECK_THROWS_AS(make_local_ops(3, 0, 1, 0.3, +1, 0.0), OutOfUnitaryWindow);
}

TEST_CASE("local identity suite holds for sampled parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> a2_draw(0.25, 1.0);
    std::uniform_real_distribution<double> phi_draw(0.0, 2.0 * std::acos(-1.0));
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t D = 2 + rng() % 4;
        const int q = static_cast<int>(rng() % D);
        int l = static_cast<int>(rng() % D);
        while (l == q) l = static_cast<int>(rng() % D);
        const double a2 = a2_draw(rng);
        const auto ops = make_local_ops(D, q, l, std::sqrt(a2), rng() % 2 ? +1 : -1,
                                        phi_draw(rng));
        for (const auto& [name, value] : local_identity_residuals(ops[0], ops[1], ops[2], a2)) {
            INFO(name);
            CHECK(value < 1e-13);
        }
    }
}

TEST_CASE("realize_involution") {
    CHECK(matrix_residual(realize_involution(Involution::make_identity(), 3),
                          ComplexMatrix::identity(3)) == 0.0);

    const ComplexMatrix perm = realize_involution(Involution::make_transposition(0, 2), 3);
    const ComplexMatrix expected =
        ComplexMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(matrix_residual(perm, expected) == 0.0);

    CHECK_NOTHROW(realize_involution(Involution::make_custom(hadamard_matrix()), 2));
    CHECK_THROWS_AS(realize_involution(Involution::make_custom(bell_matrix()), 4),
                    InvalidInvolution); // unitary but not an involution
    CHECK_THROWS_AS(realize_involution(Involution::make_transposition(0, 5), 3),
                    InvalidInvolution);
}

TEST_CASE("make_tl_generators reduces to the single-qudit matrices for n=1") {
    const GateParams params = GateParams::make(2, 1, 1, 0, 1, 0.5);
    const TlGenerators gens = make_tl_generators(params, {});
    CHECK(matrix_residual(gens.dense_e1(), gens.e1) == 0.0);
    CHECK(matrix_residual(gens.dense_e2(), add(gens.e2, gens.e3)) == 0.0);
}

TEST_CASE("make_tl_generators with identity dressing is block-structured") {
    const GateParams params = GateParams::make(2, 2, 2, 0, 1, 0.5);
    const std::vector<Involution> lambdas{Involution::make_identity()};
    const TlGenerators gens = make_tl_generators(params, lambdas);
    const ComplexMatrix expected =
        tensor_product({ComplexMatrix::identity(2), add(gens.e2, gens.e3)});
    CHECK(matrix_residual(gens.dense_e2(), expected) < 1e-15);
}

TEST_CASE("make_tl_generators dense realizations are Hermitian projectors") {
    const GateParams params = GateParams::make(3, 3, 2, 1, 0, 0.42, -1, 0.8);
    const std::vector<Involution> lambdas{Involution::make_transposition(1, 0),
                                          Involution::make_transposition(1, 2)};
    const TlGenerators gens = make_tl_generators(params, lambdas);
    for (const ComplexMatrix& E : {gens.dense_e1(), gens.dense_e2()}) {
        CHECK(check_property(E, MatrixProperty::hermitian, 1e-12).pass);
        CHECK(check_property(E, MatrixProperty::projector, 1e-12).pass);
    }
    // E1 E2 E1 = a² E1 and E2 E1 E2 = a² E2
    const ComplexMatrix E1 = gens.dense_e1(), E2 = gens.dense_e2();
    CHECK(matrix_residual(multiply(multiply(E1, E2), E1), scale(params.a_squared(), E1)) < 1e-12);
    CHECK(matrix_residual(multiply(multiply(E2, E1), E2), scale(params.a_squared(), E2)) < 1e-12);
}

TEST_CASE("make_tl_generators rejects wrong lambda count") {
    const GateParams params = GateParams::make(2, 3, 1, 0, 1, 0.5);
    CHECK_THROWS_AS(make_tl_generators(params, {Involution::make_identity()}), ArityError);
}

TEST_CASE("gate params validation") {
    CHECK_THROWS_AS(GateParams::make(2, 1, 1, 1, 1, 0.5), PivotCollision);
    CHECK_THROWS_AS(GateParams::make(2, 1, 1, 0, 1, 0.1), OutOfUnitaryWindow);
    CHECK_THROWS_AS(GateParams::make(2, 2, 3, 0, 1, 0.5), LevelError);
    CHECK_NOTHROW(GateParams::make(2, 1, 1, 1, 0, 0.5)); // q=1, l=0 is allowed
}

TEST_CASE("closed-form gate equals the Jones product") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> a2_draw(0.25, 1.0);
    std::uniform_real_distribution<double> phi_draw(0.0, 2.0 * std::acos(-1.0));
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t D = 2 + rng() % 3;
        const std::size_t n = 1 + rng() % 3;
        const std::size_t k = 1 + rng() % n;
        const int q = static_cast<int>(rng() % D);
        int l = static_cast<int>(rng() % D);
        while (l == q) l = static_cast<int>(rng() % D);
        const GateParams params = GateParams::make(D, n, k, q, l, a2_draw(rng),
                                                   rng() % 2 ? +1 : -1, phi_draw(rng));
        std::vector<Involution> lambdas;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (rng() % 2) {
                lambdas.push_back(Involution::make_identity());
            } else {
                int s = static_cast<int>(rng() % D);
                int t = static_cast<int>(rng() % D);
                while (t == s) t = static_cast<int>(rng() % D);
                lambdas.push_back(Involution::make_transposition(s, t));
            }
        }

        const TlGenerators gens = make_tl_generators(params, lambdas);
        const double d = params.scalars.d;
        const TlaPair pair{scale(d, gens.dense_e1()), scale(d, gens.dense_e2()), d};
        const auto [s1, s2] = jones_generators(pair, params.scalars.A);

        const StructuredBraidGate gate = make_braid_gate(params, lambdas);
        const ComplexMatrix dense = gate_to_dense(gate);
        CHECK(matrix_residual(dense, multiply(s1, s2)) < 1e-12);
        CHECK(check_property(dense, MatrixProperty::unitary, 1e-10).pass);
    }
}

TEST_CASE("identity-lambda gate maps product states to product states") {
    const GateParams params = GateParams::make(3, 2, 1, 0, 2, 0.5, +1, 0.0);
    const std::vector<Involution> lambdas{Involution::make_identity()};
    const StructuredBraidGate gate = make_braid_gate(params, lambdas);
    const ComplexMatrix dense = gate_to_dense(gate);
    // The dense realization factors as (pivot matrix) (x) I.
    ComplexMatrix pivot(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) pivot(i, j) = dense(3 * i, j * 3);
    CHECK(matrix_residual(dense, tensor_product({pivot, ComplexMatrix::identity(3)})) < 1e-13);
}

TEST_CASE("apply_gate reproduces the three-case basis action") {
    const std::size_t D = 4, n = 3, k = 2;
    const int q = 1, l = 3;
    const double phi = 0.7;
    const GateParams params = GateParams::make(D, n, k, q, l, 0.41, -1, phi);
    const std::vector<Involution> lambdas{Involution::make_transposition(1, 3),
                                          Involution::make_transposition(0, 2)};
    const StructuredBraidGate gate = make_braid_gate(params, lambdas);

    const double d = params.scalars.d;
    const double a = params.a, b = params.b;
    const cplx A = params.scalars.A;
    const cplx Ainv2 = 1.0 / (A * A);
    const cplx A4 = A * A * A * A;

    // pivot at q: two branches with weights d a² and e^{iφ} d a b
    {
        const QuditRegisterState in = basis_state(D, n, {0, q, 2});
        const QuditRegisterState out = apply_gate(gate, in);
        const std::size_t stay = in.index_of({0, q, 2});
        // site 1 dressed by X(1,3) fixes 0; site 3 dressed by X(0,2) maps 2 to 0
        const std::size_t flip = in.index_of({0, l, 0});
        CHECK(std::abs(out.amplitudes[stay] - cplx{d * a * a, 0.0}) < 1e-13);
        CHECK(std::abs(out.amplitudes[flip] - std::polar(d * a * b, phi)) < 1e-13);
        double rest = 0.0;
        for (std::size_t i = 0; i < out.dim(); ++i)
            if (i != stay && i != flip) rest = std::max(rest, std::abs(out.amplitudes[i]));
        CHECK(rest < 1e-15);
    }
    // pivot at l: weights (d b² + A⁻²) and -e^{-iφ} A⁴ d a b (sign fixed by
    // the sigma product; the action display drops it)
    {
        const QuditRegisterState in = basis_state(D, n, {0, l, 2});
        const QuditRegisterState out = apply_gate(gate, in);
        const std::size_t stay = in.index_of({0, l, 2});
        const std::size_t flip = in.index_of({0, q, 0});
        CHECK(std::abs(out.amplitudes[stay] - (d * b * b + Ainv2)) < 1e-13);
        CHECK(std::abs(out.amplitudes[flip] - (-std::polar(1.0, -phi) * A4 * d * a * b)) < 1e-13);
    }
    // pivot at m not in {q,l}: pure scalar A⁻²
    {
        const QuditRegisterState in = basis_state(D, n, {3, 0, 1});
        const QuditRegisterState out = apply_gate(gate, in);
        const std::size_t stay = in.index_of({3, 0, 1});
        CHECK(std::abs(out.amplitudes[stay] - Ainv2) < 1e-13);
        double rest = 0.0;
        for (std::size_t i = 0; i < out.dim(); ++i)
            if (i != stay) rest = std::max(rest, std::abs(out.amplitudes[i]));
        CHECK(rest < 1e-15);
    }
}

TEST_CASE("structured and dense application agree for D=3, n=4") {
    std::mt19937_64 rng(5);
    const GateParams params = GateParams::make(3, 4, 3, 0, 2, 0.61, +1, 1.9);
    const std::vector<Involution> lambdas{Involution::make_transposition(0, 2),
                                          Involution::make_identity(),
                                          Involution::make_transposition(1, 2)};
    const StructuredBraidGate gate = make_braid_gate(params, lambdas);
    const ComplexMatrix dense = gate_to_dense(gate);
    const QuditRegisterState in = random_state(rng, 3, 4);
    const QuditRegisterState fast = apply_gate(gate, in);
    const ComplexVector slow = matvec(dense, in.amplitudes);
    for (std::size_t i = 0; i < slow.size(); ++i)
        CHECK(std::abs(slow[i] - fast.amplitudes[i]) < 1e-12);
    CHECK(std::abs(fast.norm() - 1.0) < 1e-12);
}

TEST_CASE("apply_gate preserves norm with custom Hadamard dressing") {
    std::mt19937_64 rng(6);
    const GateParams params = GateParams::make(2, 5, 2, 0, 1, 0.33, +1, 0.25);
    std::vector<Involution> lambdas(4, Involution::make_custom(hadamard_matrix()));
    const StructuredBraidGate gate = make_braid_gate(params, lambdas);
    for (int trial = 0; trial < 10; ++trial) {
        const QuditRegisterState in = random_state(rng, 2, 5);
        CHECK(std::abs(apply_gate(gate, in).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("apply_gate rejects mismatched state dimensions") {
    const GateParams params = GateParams::make(2, 2, 1, 0, 1, 0.5);
    const StructuredBraidGate gate =
        make_braid_gate(params, {Involution::make_identity()});
    CHECK_THROWS_AS(apply_gate(gate, basis_state(2, 3, {0, 0, 0})), ShapeError);
}

TEST_CASE("gate_to_dense honors the dense limit") {
    const GateParams params = GateParams::make(4, 7, 1, 0, 1, 0.5);
    std::vector<Involution> lambdas(6, Involution::make_identity());
    const StructuredBraidGate gate = make_braid_gate(params, lambdas);
    CHECK_THROWS_AS(gate_to_dense(gate), DenseLimitExceeded); // 4^7 > 4096
}
