#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sdof/channel.hpp"

using namespace sdof;

TEST_CASE("same seed gives identical blocks") {
    Rng a(42), b(42);
    const ChannelBlock x = sample_block(a, 2, 3);
    const ChannelBlock y = sample_block(b, 2, 3);
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < 2; ++i) {
            REQUIRE(x.h[t][i] == y.h[t][i]);
            REQUIRE(x.g[t][i] == y.g[t][i]);
        }
}

TEST_CASE("different seeds give different blocks") {
    Rng a(42), b(43);
    const ChannelBlock x = sample_block(a, 2, 3);
    const ChannelBlock y = sample_block(b, 2, 3);
    bool any_diff = false;
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t i = 0; i < 2; ++i) any_diff |= x.h[t][i] != y.h[t][i];
    REQUIRE(any_diff);
}

TEST_CASE("entries have unit mean square power") {
    Rng rng(7);
    double sum = 0.0;
    const int draws = 10000;
    for (int d = 0; d < draws; ++d) {
        const ChannelBlock block = sample_block(rng, 2, 1);
        for (std::size_t i = 0; i < 2; ++i) sum += std::norm(block.h[0][i]);
    }
    const double mean = sum / (2.0 * draws);
    REQUIRE(mean > 0.95);
    REQUIRE(mean < 1.05);
}

TEST_CASE("stacked entries are uncorrelated") {
    Rng rng(19);
    const int draws = 10000;
    const std::size_t dim = 8;  // h and g entries of a 2-antenna, 2-slot block
    std::vector<cplx> herm(dim * dim, 0.0), pseudo(dim * dim, 0.0);
    for (int d = 0; d < draws; ++d) {
        const ChannelBlock block = sample_block(rng, 2, 2);
        std::vector<cplx> z;
        for (std::size_t t = 0; t < 2; ++t) {
            z.insert(z.end(), block.h[t].begin(), block.h[t].end());
            z.insert(z.end(), block.g[t].begin(), block.g[t].end());
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                herm[i * dim + j] += z[i] * std::conj(z[j]) / static_cast<double>(draws);
                pseudo[i * dim + j] += z[i] * z[j] / static_cast<double>(draws);
            }
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) {
                REQUIRE(herm[i * dim + j].real() > 0.95);
                REQUIRE(herm[i * dim + j].real() < 1.05);
            } else {
                REQUIRE(std::abs(herm[i * dim + j]) < 0.05);
            }
            REQUIRE(std::abs(pseudo[i * dim + j]) < 0.05);  // circular symmetry
        }
}

TEST_CASE("no vector reuse across slots") {
    Rng rng(23);
    for (int d = 0; d < 1000; ++d) {
        const ChannelBlock block = sample_block(rng, 2, 3);
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = s + 1; t < 3; ++t) {
                REQUIRE(block.h[s] != block.h[t]);
                REQUIRE(block.g[s] != block.g[t]);
                REQUIRE(block.h[s] != block.g[t]);
            }
        REQUIRE(block.h[0] != block.g[0]);
    }
}

TEST_CASE("sampling rejects degenerate shapes") {
    Rng rng(1);
    REQUIRE_THROWS_AS(sample_block(rng, 1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_block(rng, 2, 0), std::invalid_argument);
}

TEST_CASE("trial seeds are distinct across indices and bases") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(1, i));
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(2, i));
    REQUIRE(seen.size() == 2000);
}
