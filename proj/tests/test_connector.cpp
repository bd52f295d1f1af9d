#include <doctest.h>

#include <cmath>
#include <random>

#include "braid/chains.hpp"
#include "braid/connector.hpp"

using namespace braid;

namespace {

QuditRegisterState random_state_with_alpha(std::mt19937_64& rng, std::size_t D, std::size_t n,
                                           std::size_t component, double alpha_sq,
                                           bool random_phase) {
    std::normal_distribution<double> g;
    QuditRegisterState s = zero_state(D, n);
    for (cplx& a : s.amplitudes) a = {g(rng), g(rng)};
    s.amplitudes[component] = 0.0;
    double rest = s.norm();
    const double rest_target = std::sqrt(1.0 - alpha_sq);
    for (cplx& a : s.amplitudes) a *= rest_target / rest;
    const double phase =
        random_phase ? std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng) : 0.0;
    s.amplitudes[component] = std::polar(std::sqrt(alpha_sq), phase);
    return s;
}

} // namespace

TEST_CASE("connecting a state to itself is the identity action up to phase") {
    const QuditRegisterState psi = basis_state(2, 2, {0, 0});
    const ConnectorGate gate = connect(psi, {0, 0});
    CHECK(gate.d == doctest::Approx(1.0));
    const QuditRegisterState out = apply_connector(gate, psi);
    CHECK(std::abs(overlap(psi, out)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(std::arg(overlap(psi, out))) < 1e-12);
}

TEST_CASE("Bell state from its |00> component") {
    QuditRegisterState bell = zero_state(2, 2);
    bell.amplitudes[0] = 1.0 / std::sqrt(2.0);
    bell.amplitudes[3] = 1.0 / std::sqrt(2.0);
    const ConnectorGate gate = connect(bell, {0, 0});
    CHECK(std::norm(gate.alpha) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(gate.d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const QuditRegisterState out = apply_connector(gate, basis_state(2, 2, {0, 0}));
    for (std::size_t i = 0; i < out.dim(); ++i)
        CHECK(std::abs(out.amplitudes[i] - bell.amplitudes[i]) < 1e-12);

    // agrees with the dense realization
    const ComplexMatrix dense = gate.dense();
    const ComplexVector slow = matvec(dense, basis_state(2, 2, {0, 0}).amplitudes);
    for (std::size_t i = 0; i < slow.size(); ++i)
        CHECK(std::abs(slow[i] - out.amplitudes[i]) < 1e-13);
}

TEST_CASE("TLA embedding residuals of the projector pair") {
    std::mt19937_64 rng(3);
    const QuditRegisterState psi = random_state_with_alpha(rng, 3, 2, 4, 0.55, true);
    const ConnectorGate gate = connect(psi, {1, 1});
    const double alpha_sq = std::norm(gate.alpha);

    const std::size_t dim = psi.dim();
    ComplexMatrix E1(dim, dim), E2(dim, dim);
    E1(gate.component_index, gate.component_index) = 1.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            E2(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);

    CHECK(matrix_residual(multiply(multiply(E1, E2), E1), scale(alpha_sq, E1)) < 1e-12);
    CHECK(matrix_residual(multiply(multiply(E2, E1), E2), scale(alpha_sq, E2)) < 1e-12);

    const double d = gate.d;
    const TlaPair pair{scale(d, E1), scale(d, E2), d};
    CHECK(check_tla(pair, 1e-10).pass);
    const auto [s1, s2] = jones_generators(pair, gate.A);
    CHECK(check_braid(s1, s2, 1e-10).pass);
    CHECK(matrix_residual(multiply(s1, s2), gate.dense()) < 1e-12);
}

TEST_CASE("phase law: the connector reproduces psi up to exp(-i arg alpha)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const QuditRegisterState psi = random_state_with_alpha(
            rng, 2, 3, rng() % 8, 0.26 + 0.6 * std::generate_canonical<double, 53>(rng), true);
        const std::vector<int> digits = psi.digits_of(std::distance(
            psi.amplitudes.begin(),
            std::max_element(psi.amplitudes.begin(), psi.amplitudes.end(),
                             [](const cplx& a, const cplx& b) {
                                 return std::norm(a) < std::norm(b);
                             })));
        const ConnectorGate gate = connect(psi, digits);
        const QuditRegisterState out =
            apply_connector(gate, basis_state(psi.D, psi.n, digits));
        const cplx ov = overlap(psi, out);
        CHECK(std::abs(ov) == doctest::Approx(1.0).epsilon(1e-10));
        // phase is arg(alpha*) = -arg(alpha), the value forced by the
        // sigma product (the d·alpha* factor in the expansion)
        const double expected = std::arg(std::conj(gate.alpha));
        CHECK(std::abs(std::arg(ov) - expected) < 1e-10);
        CHECK(std::abs(gate.phase() - expected) < 1e-14);
    }
}

TEST_CASE("vectors orthogonal to the span are scaled by A^-2") {
    std::mt19937_64 rng(19);
    const QuditRegisterState psi = random_state_with_alpha(rng, 2, 2, 0, 0.5, false);
    const ConnectorGate gate = connect(psi, {0, 0});
    // Build v orthogonal to |00> and psi: zero the component entry, then
    // project out psi restricted to the complement (keeps entry 0 at zero).
    QuditRegisterState v = zero_state(2, 2);
    std::normal_distribution<double> g;
    for (cplx& a : v.amplitudes) a = {g(rng), g(rng)};
    v.amplitudes[0] = 0.0;
    ComplexVector w = psi.amplitudes;
    w[0] = 0.0;
    const cplx proj = inner(w, v.amplitudes) / inner(w, w);
    for (std::size_t i = 0; i < v.dim(); ++i) v.amplitudes[i] -= proj * w[i];
    REQUIRE(std::abs(inner(psi.amplitudes, v.amplitudes)) < 1e-10);

    const QuditRegisterState out = apply_connector(gate, v);
    const cplx Ainv2 = 1.0 / (gate.A * gate.A);
    for (std::size_t i = 0; i < out.dim(); ++i)
        CHECK(std::abs(out.amplitudes[i] - Ainv2 * v.amplitudes[i]) < 1e-10);
}

TEST_CASE("connector gate is norm-preserving on random vectors") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    const QuditRegisterState psi = random_state_with_alpha(rng, 3, 2, 2, 0.4, true);
    const ConnectorGate gate = connect(psi, psi.digits_of(2));
    for (int trial = 0; trial < 100; ++trial) {
        QuditRegisterState v = zero_state(3, 2);
        for (cplx& a : v.amplitudes) a = {g(rng), g(rng)};
        const double norm = v.norm();
        for (cplx& a : v.amplitudes) a /= norm;
        CHECK(std::abs(apply_connector(gate, v).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("threshold sharpness at |alpha|^2 = 1/4") {
    std::mt19937_64 rng(29);
    const QuditRegisterState at_boundary = random_state_with_alpha(rng, 2, 2, 1, 0.25, false);
    const ConnectorGate gate = connect(at_boundary, {0, 1});
    CHECK(gate.d == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(gate.A - cplx{0.0, 1.0}) < 1e-7);

    const QuditRegisterState below = random_state_with_alpha(rng, 2, 2, 1, 0.24, false);
    CHECK_THROWS_AS(connect(below, {0, 1}), BelowThreshold);
    try {
        connect(below, {0, 1});
    } catch (const BelowThreshold& e) {
        CHECK(e.alpha_squared == doctest::Approx(0.24).epsilon(1e-12));
    }
}

TEST_CASE("five-branch GHZ components are below threshold") {
    const QuditRegisterState ghz5 = generate_ghz(5, 2, 4);
    CHECK_THROWS_AS(connect(ghz5, {0, 0}), BelowThreshold);
    CHECK(admissible_components(ghz5).empty());
}

TEST_CASE("connect validates its inputs") {
    QuditRegisterState unnormalized = basis_state(2, 2, {0, 0});
    unnormalized.amplitudes[0] = 0.7;
    CHECK_THROWS_AS(connect(unnormalized, {0, 0}), NormError);
    CHECK_THROWS_AS(connect(basis_state(2, 2, {0, 0}), {0, 2}), LevelError);
    CHECK_THROWS_AS(
        apply_connector(connect(basis_state(2, 2, {0, 0}), {0, 0}), basis_state(2, 3, {0, 0, 0})),
        ShapeError);
}
