// Fading generation. Channel vectors are i.i.d. circularly-symmetric complex
// Gaussian with unit variance, redrawn independently every slot, and the
// seed-to-stream map below is part of the output reproducibility contract:
//
//   trial stream i for base seed s  =  mt19937_64( splitmix64 output i of state s )
//   a block consumes, slot by slot, the M entries of h_t then the M entries
//   of g_t; each entry uses one uniform pair via the polar transform.
//
// mt19937_64 and the polar transform are fully pinned, so equal seeds give
// bit-identical draws across platforms, not just across runs of one build.
#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "sdof/complex_matrix.hpp"

namespace sdof {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// i-th output of a splitmix64 generator whose initial state is `base`.
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial_index) {
    constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
    return splitmix64_mix(base + (trial_index + 1) * golden);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on (0,1), never exactly 0 or 1.
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // CN(0,1): exponential squared magnitude, uniform phase.
    cplx complex_gaussian() {
        const double r = std::sqrt(-std::log(uniform01()));
        const double theta = 2.0 * std::numbers::pi * uniform01();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    std::mt19937_64 gen_;
};

// One scheme invocation's worth of fading: T legitimate-channel vectors h_t
// and T eavesdropper/second-receiver vectors g_t, each of length M.
struct ChannelBlock {
    std::size_t antennas = 0;
    std::vector<CVector> h;
    std::vector<CVector> g;

    std::size_t slots() const { return h.size(); }
};

inline ChannelBlock sample_block(Rng& rng, std::size_t antennas, std::size_t slots) {
    if (antennas < 2) throw std::invalid_argument("sample_block: schemes need at least 2 transmit antennas");
    if (slots == 0) throw std::invalid_argument("sample_block: slot count must be >= 1");
    ChannelBlock block;
    block.antennas = antennas;
    block.h.resize(slots);
    block.g.resize(slots);
    for (std::size_t t = 0; t < slots; ++t) {
        block.h[t].resize(antennas);
        for (auto& e : block.h[t]) e = rng.complex_gaussian();
        block.g[t].resize(antennas);
        for (auto& e : block.g[t]) e = rng.complex_gaussian();
    }
    return block;
}

}  // namespace sdof
