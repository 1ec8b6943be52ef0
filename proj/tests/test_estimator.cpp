#include <catch2/catch_amalgamated.hpp>

#include "sdof/estimator.hpp"

using namespace sdof;

namespace {

std::vector<double> default_grid() { return {30, 35, 40, 45, 50, 55, 60}; }

}  // namespace

TEST_CASE("estimate_dof recovers an exact line") {
    std::vector<double> db = default_grid();
    std::vector<double> rates;
    for (double d : db) rates.push_back((2.0 / 3.0) * db_to_log2_power(d) + 1.0);
    const DofEstimate est = estimate_dof(db, rates);
    REQUIRE(est.slope == Catch::Approx(2.0 / 3.0).margin(1e-12));
    REQUIRE(est.intercept == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(est.r_squared == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("estimate_dof on constant points gives zero slope") {
    std::vector<double> db = {30, 40, 50};
    std::vector<double> rates = {2.5, 2.5, 2.5};
    const DofEstimate est = estimate_dof(db, rates);
    REQUIRE(est.slope == Catch::Approx(0.0).margin(1e-14));
    REQUIRE(est.r_squared == 1.0);
}

TEST_CASE("estimate_dof is affine-equivariant") {
    std::vector<double> db = default_grid();
    std::vector<double> rates = {1.2, 2.9, 3.1, 4.8, 5.0, 6.7, 7.2};
    const DofEstimate base = estimate_dof(db, rates);
    std::vector<double> shifted = rates;
    for (double& r : shifted) r += 4.25;
    const DofEstimate moved = estimate_dof(db, shifted);
    REQUIRE(moved.slope == Catch::Approx(base.slope).margin(1e-12));
    REQUIRE(moved.intercept == Catch::Approx(base.intercept + 4.25).margin(1e-10));
}

TEST_CASE("estimate_dof input validation") {
    REQUIRE_THROWS_AS(estimate_dof(std::vector<double>{30, 40}, std::vector<double>{1, 2}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(estimate_dof(std::vector<double>{30, 40, 40}, std::vector<double>{1, 2, 3}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(estimate_dof(std::vector<double>{30, 40, 50}, std::vector<double>{1, 2}),
                      std::invalid_argument);
}

TEST_CASE("evaluate_rates is deterministic in its inputs") {
    const RatePoint a = evaluate_rates(SchemeId::WiretapSymmetric3Slot, 40.0, 1, 9, Quantity::secrecy);
    const RatePoint b = evaluate_rates(SchemeId::WiretapSymmetric3Slot, 40.0, 1, 9, Quantity::secrecy);
    REQUIRE(a.legit_rate == b.legit_rate);
    REQUIRE(a.leak_rate == b.leak_rate);
    REQUIRE(a.secrecy_rate == b.secrecy_rate);
    REQUIRE(a.std_err == b.std_err);
    REQUIRE(a.std_err == 0.0);  // single trial has no spread estimate

    const RatePoint c = evaluate_rates(SchemeId::WiretapSymmetric3Slot, 40.0, 25, 9, Quantity::secrecy);
    const RatePoint d = evaluate_rates(SchemeId::WiretapSymmetric3Slot, 40.0, 25, 9, Quantity::secrecy);
    REQUIRE(c.legit_rate == d.legit_rate);
    REQUIRE(c.std_err == d.std_err);
    REQUIRE(c.secrecy_rate == Catch::Approx(std::max(0.0, c.legit_rate - c.leak_rate)).margin(1e-15));
}

TEST_CASE("evaluate_rates validates scheme/quantity compatibility") {
    REQUIRE_THROWS_AS(
        evaluate_rates(SchemeId::WiretapSymmetric3Slot, 40.0, 2, 1, Quantity::leak_conditioned),
        std::invalid_argument);
    REQUIRE_THROWS_AS(evaluate_rates(SchemeId::Bcc4Slot, 40.0, 0, 1, Quantity::legit),
                      std::invalid_argument);
    REQUIRE_NOTHROW(evaluate_rates(SchemeId::Bcc4Slot, 40.0, 2, 1, Quantity::leak_conditioned));
}

TEST_CASE("standard error shrinks like one over sqrt(trials)") {
    const RatePoint small = evaluate_rates(SchemeId::WiretapAsymmetric2Slot, 40.0, 100, 7, Quantity::secrecy);
    const RatePoint large = evaluate_rates(SchemeId::WiretapAsymmetric2Slot, 40.0, 400, 7, Quantity::secrecy);
    const double ratio = small.std_err / large.std_err;
    REQUIRE(ratio > 1.8);
    REQUIRE(ratio < 2.2);
}

TEST_CASE("bcc pair shares draws and stays user-symmetric") {
    for (double db : {35.0, 45.0, 55.0}) {
        const auto [u1, u2] = evaluate_bcc_pair(db, 200, 3);
        REQUIRE(u1.trials == 200);
        const double spread = 2.0 * std::hypot(u1.std_err, u2.std_err);
        REQUIRE(std::abs(u1.secrecy_rate - u2.secrecy_rate) <= spread);
    }
}

TEST_CASE("evaluate_pair rejects single-message schemes") {
    REQUIRE_THROWS_AS(evaluate_pair(SchemeId::WiretapSymmetric3Slot, 40.0, 2, 1),
                      std::invalid_argument);
    REQUIRE_NOTHROW(evaluate_pair(SchemeId::BaselineNoCsit, 40.0, 2, 1));
}

TEST_CASE("no-CSIT pair mirrors the two users exactly") {
    const auto [u1, u2] = evaluate_pair(SchemeId::BaselineNoCsit, 40.0, 50, 11);
    REQUIRE(u1.legit_rate == u2.leak_rate);
    REQUIRE(u1.leak_rate == u2.legit_rate);
}

TEST_CASE("baseline slopes: zero-forcing reaches full rate, no knowledge reaches none") {
    const std::vector<double> grid = {30, 40, 50, 60};
    const auto zf = sweep(SchemeId::BaselinePerfectCsitWiretap, grid, 150, 5, Quantity::secrecy);
    REQUIRE(estimate_dof(zf, Quantity::secrecy).slope == Catch::Approx(1.0).margin(0.03));
    for (const auto& p : zf) REQUIRE(p.leak_rate == 0.0);

    const auto blind = sweep(SchemeId::BaselineNoCsit, grid, 150, 5, Quantity::secrecy);
    REQUIRE(estimate_dof(blind, Quantity::legit).slope == Catch::Approx(1.0).margin(0.03));
    REQUIRE(std::abs(estimate_dof(blind, Quantity::secrecy).slope) < 0.03);
}

TEST_CASE("sweep returns one point per grid entry in order") {
    const std::vector<double> grid = {30, 40, 50};
    const auto points = sweep(SchemeId::WiretapAsymmetric2Slot, grid, 10, 2, Quantity::secrecy);
    REQUIRE(points.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(points[i].power_db == grid[i]);
    REQUIRE(points[2].legit_rate > points[0].legit_rate);
}
