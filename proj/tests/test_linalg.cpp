#include <doctest.h>

#include <cmath>
#include <random>

#include "braid/linalg.hpp"
#include "braid/reference.hpp"

using namespace braid;

TEST_CASE("tensor product of identities is the identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix t = tensor_product({i2, i2});
    CHECK(matrix_residual(t, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor product of diagonal factors multiplies diagonals") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
    const double a2 = 0.3, b2 = 0.7;
    const ComplexMatrix b = ComplexMatrix::from_rows({{a2, 0.0}, {0.0, b2}});
    const ComplexMatrix t = tensor_product({a, b});
    const ComplexMatrix expected =
        ComplexMatrix::from_rows({{a2, 0, 0, 0}, {0, b2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(matrix_residual(t, expected) < 1e-15);
}

TEST_CASE("H (x) H maps |00> to the uniform four-amplitude vector") {
    const ComplexMatrix hh = tensor_product({hadamard_matrix(), hadamard_matrix()});
    const ComplexVector v = matvec(hh, {1.0, 0.0, 0.0, 0.0});
    for (const cplx& x : v) CHECK(std::abs(x - cplx{0.5, 0.0}) < 1e-15);
}

TEST_CASE("tensor product is associative") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    auto rand_mat = [&](std::size_t r, std::size_t c) {
        ComplexMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = {g(rng), g(rng)};
        return m;
    };
    const ComplexMatrix a = rand_mat(2, 3), b = rand_mat(3, 2), c = rand_mat(2, 2);
    const ComplexMatrix left = tensor_product({tensor_product({a, b}), c});
    const ComplexMatrix right = tensor_product({a, tensor_product({b, c})});
    CHECK(matrix_residual(left, right) < 1e-14);
}

TEST_CASE("tensor product of empty list is rejected") {
    std::vector<ComplexMatrix> none;
    CHECK_THROWS_AS(tensor_product(std::span<const ComplexMatrix>(none)), EmptyProduct);
}

TEST_CASE("matrix_residual basics") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(matrix_residual(id, id) == 0.0);

    // The Bell matrix is not Hermitian; its residual against its adjoint is 2/sqrt(2).
    const ComplexMatrix r = bell_matrix();
    CHECK(matrix_residual(r, adjoint(r)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    ComplexMatrix perturbed = id;
    perturbed(0, 0) += 1e-4;
    CHECK(matrix_residual(id, perturbed) == doctest::Approx(1e-4));

    CHECK_THROWS_AS(matrix_residual(id, ComplexMatrix::identity(2)), ShapeError);
}

TEST_CASE("check_property on the reference gates") {
    CHECK(check_property(bell_matrix(), MatrixProperty::unitary, 1e-12).pass);
    CHECK(check_property(hadamard_matrix(), MatrixProperty::involution, 1e-12).pass);

    const ComplexMatrix e1 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
    CHECK(check_property(e1, MatrixProperty::projector, 1e-12).pass);
    CHECK(check_property(e1, MatrixProperty::hermitian, 1e-12).pass);

    CHECK_FALSE(check_property(bell_matrix(), MatrixProperty::hermitian, 1e-12).pass);
    CHECK_THROWS_AS(check_property(ComplexMatrix(2, 3), MatrixProperty::unitary, 1e-12),
                    ShapeError);
}

TEST_CASE("tensor product of unitaries is unitary") {
    const ComplexMatrix t = tensor_product({bell_matrix(), hadamard_matrix()});
    CHECK(check_property(t, MatrixProperty::unitary, 1e-12).pass);
}

TEST_CASE("constructors reject non-finite entries") {
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{cplx{std::nan(""), 0.0}}}), Error);
    CHECK_THROWS_AS(ComplexMatrix::from_entries(1, 2, {cplx{1.0, 0.0}}), ShapeError);
}
