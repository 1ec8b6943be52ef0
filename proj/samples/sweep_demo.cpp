// Minimal library walkthrough: sweep one scheme, fit its secrecy slope, and
// place the broadcast corner estimate inside the outer-bound region.
#include <cstdio>

#include "sdof/sdof.hpp"

int main() {
    const std::vector<double> grid = {30, 35, 40, 45, 50, 55, 60};

    const auto points = sdof::sweep(sdof::SchemeId::WiretapSymmetric3Slot, grid,
                                    200, 1, sdof::Quantity::secrecy);
    for (const auto& p : points)
        std::printf("%5.1f dB  legit %6.3f  leak %6.3f  secrecy %6.3f bits/use\n",
                    p.power_db, p.legit_rate, p.leak_rate, p.secrecy_rate);
    const auto fit = sdof::estimate_dof(points, sdof::Quantity::secrecy);
    std::printf("secrecy slope %.4f (R^2 %.5f)\n\n", fit.slope, fit.r_squared);

    std::vector<sdof::RatePoint> user1, user2;
    for (double db : grid) {
        auto [p1, p2] = sdof::evaluate_bcc_pair(db, 200, 1);
        user1.push_back(p1);
        user2.push_back(p2);
    }
    const sdof::RegionPoint corner{sdof::estimate_dof(user1, sdof::Quantity::secrecy).slope,
                                   sdof::estimate_dof(user2, sdof::Quantity::secrecy).slope};
    std::printf("broadcast corner estimate (%.3f, %.3f), inside outer bound: %s\n",
                corner.d1, corner.d2, sdof::region_contains(corner, 0.1) ? "yes" : "no");

    const auto weights = sdof::time_share(corner.d1 + corner.d2 > 1.0
                                              ? sdof::RegionPoint{0.5, 0.5}
                                              : corner);
    std::printf("time-sharing weights over the region vertices:");
    for (double w : weights) std::printf(" %.3f", w);
    std::printf("\n");
    return 0;
}
