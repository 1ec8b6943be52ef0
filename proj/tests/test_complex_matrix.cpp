#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sdof/complex_matrix.hpp"

using namespace sdof;

TEST_CASE("log_det of identity is zero") {
    REQUIRE(log_det_hermitian_psd(ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("log_det of diag(2,2) is 2 bits") {
    auto m = ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 2.0}});
    REQUIRE(log_det_hermitian_psd(m) == Catch::Approx(2.0).margin(1e-14));
}

TEST_CASE("log_det matches cofactor expansion on a 5x5 Gram matrix") {
    Rng rng(11);
    const ComplexMatrix a = oracle::random_matrix(rng, 5, 5);
    ComplexMatrix m = a.gram() + ComplexMatrix::identity(5);
    const double expected = std::log2(oracle::det_cofactor(m).real());
    REQUIRE(log_det_hermitian_psd(m) == Catch::Approx(expected).epsilon(1e-9));
}

TEST_CASE("log_det agrees with the cofactor oracle across sizes") {
    Rng rng(202);
    for (int draw = 0; draw < 100; ++draw) {
        const std::size_t n = 1 + draw % 5;
        const ComplexMatrix a = oracle::random_matrix(rng, n, n);
        ComplexMatrix m = a.gram() + ComplexMatrix::identity(n);
        const double expected = std::log2(oracle::det_cofactor(m).real());
        const double got = log_det_hermitian_psd(m);
        REQUIRE(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("log_det rejects malformed inputs") {
    REQUIRE_THROWS_AS(log_det_hermitian_psd(ComplexMatrix(2, 3)), std::invalid_argument);

    auto non_hermitian = ComplexMatrix::from_rows({{1.0, 2.0}, {0.5, 1.0}});
    REQUIRE_THROWS_AS(log_det_hermitian_psd(non_hermitian), std::invalid_argument);

    ComplexMatrix with_nan = ComplexMatrix::identity(2);
    with_nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(log_det_hermitian_psd(with_nan), std::invalid_argument);

    auto indefinite = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    REQUIRE_THROWS_AS(log_det_hermitian_psd(indefinite), std::domain_error);
}

TEST_CASE("log_det of a singular PSD matrix is -inf, not an error") {
    auto ones = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    REQUIRE(log_det_hermitian_psd(ones) == -std::numeric_limits<double>::infinity());
    REQUIRE(log_det_hermitian_psd(ComplexMatrix(3, 3)) ==
            -std::numeric_limits<double>::infinity());
}

TEST_CASE("gram and adjoint are consistent") {
    Rng rng(5);
    const ComplexMatrix a = oracle::random_matrix(rng, 3, 2);
    const ComplexMatrix g = a.gram();
    const ComplexMatrix g2 = a * a.adjoint();
    REQUIRE(g.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(std::abs(g(i, j) - g2(i, j)) < 1e-12);
    REQUIRE(g.is_hermitian(1e-12));
}

TEST_CASE("from_rows validates shape and entries") {
    REQUIRE_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
    const cplx bad(std::numeric_limits<double>::infinity(), 0.0);
    REQUIRE_THROWS_AS(ComplexMatrix::from_rows({{bad}}), std::invalid_argument);
}
