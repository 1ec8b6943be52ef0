// Monte Carlo rate evaluation across an SNR grid and least-squares slope
// estimation. Trials are seeded by trial index only, so results do not depend
// on scheduling and the same fading draws recur at every grid point.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdof/channel.hpp"
#include "sdof/schemes.hpp"

namespace sdof {

enum class Quantity { legit, leak, leak_conditioned, secrecy };

inline std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::legit: return "legit";
        case Quantity::leak: return "leak";
        case Quantity::leak_conditioned: return "leak_conditioned";
        case Quantity::secrecy: return "secrecy";
    }
    throw std::invalid_argument("quantity_name: unknown quantity");
}

inline Quantity parse_quantity(std::string_view name) {
    for (Quantity q : {Quantity::legit, Quantity::leak, Quantity::leak_conditioned, Quantity::secrecy})
        if (quantity_name(q) == name) return q;
    throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

// Rates are per channel use: block mutual informations divided by slot count.
struct RatePoint {
    double power_db = 0.0;
    double legit_rate = 0.0;
    double leak_rate = 0.0;
    double secrecy_rate = 0.0;  // max(0, legit_rate - leak_rate)
    std::size_t trials = 0;
    double std_err = 0.0;  // standard error of the requested quantity's trial samples
};

struct DofEstimate {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> grid_db;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_log2_power(double db) { return db * (std::log2(10.0) / 10.0); }

namespace detail {

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double std_err() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1));
        return std::sqrt(var / static_cast<double>(n));
    }
};

// Message label and receiver names for the single-message (wiretap-style) schemes.
inline bool is_pair_scheme(SchemeId s) {
    return s == SchemeId::Bcc4Slot || s == SchemeId::BaselinePerfectCsitBcc;
}

struct TrialMis {
    double legit = 0.0;
    double leak = 0.0;
};

// Per-use legitimate and leakage informations for the scheme's message
// (user 1's message for the two-user schemes).
inline TrialMis trial_mis(const SchemeRealization& r, Quantity quantity) {
    const double slots = static_cast<double>(r.slots);
    TrialMis out;
    if (r.scheme == SchemeId::Bcc4Slot || r.scheme == SchemeId::BaselinePerfectCsitBcc) {
        constexpr std::string_view v1[] = {"v1"};
        constexpr std::string_view v2[] = {"v2"};
        out.legit = gaussian_mi(r.model("receiver1", v1)) / slots;
        const bool conditioned = quantity == Quantity::leak_conditioned || quantity == Quantity::secrecy;
        out.leak = gaussian_mi(conditioned ? r.model("receiver2", v1, v2) : r.model("receiver2", v1)) / slots;
    } else {
        constexpr std::string_view v[] = {"v"};
        out.legit = gaussian_mi(r.model("legitimate", v)) / slots;
        out.leak = gaussian_mi(r.model("eavesdropper", v)) / slots;
    }
    return out;
}

inline double pick(const TrialMis& m, Quantity q) {
    switch (q) {
        case Quantity::legit: return m.legit;
        case Quantity::leak:
        case Quantity::leak_conditioned: return m.leak;
        case Quantity::secrecy: return m.legit - m.leak;
    }
    throw std::invalid_argument("unknown quantity");
}

inline RatePoint finalize(double power_db, const Accumulator& legit, const Accumulator& leak,
                          const Accumulator& requested, std::size_t trials) {
    RatePoint p;
    p.power_db = power_db;
    p.legit_rate = legit.mean();
    p.leak_rate = leak.mean();
    p.secrecy_rate = std::max(0.0, p.legit_rate - p.leak_rate);
    p.trials = trials;
    p.std_err = requested.std_err();
    return p;
}

}  // namespace detail

/// Average per-use rates for one scheme at one SNR over independently seeded
/// trials. All rate fields are filled; `quantity` selects the conditioning of
/// the leakage term (two-user schemes) and which sample's standard error is
/// reported. Identical inputs give identical output.
inline RatePoint evaluate_rates(SchemeId scheme, double power_db, std::size_t trials,
                                std::uint64_t seed, Quantity quantity) {
    if (trials < 1) throw std::invalid_argument("evaluate_rates: trials must be >= 1");
    if (quantity == Quantity::leak_conditioned && !detail::is_pair_scheme(scheme))
        throw std::invalid_argument("evaluate_rates: leak_conditioned applies to two-message schemes only");
    const double power = db_to_linear(power_db);
    detail::Accumulator legit, leak, requested;
    for (std::size_t i = 0; i < trials; ++i) {
        try {
            Rng rng(trial_seed(seed, i));
            const ChannelBlock block = sample_block(rng, 2, scheme_slots(scheme));
            const SchemeRealization r = build_scheme(scheme, block, power);
            const detail::TrialMis mis = detail::trial_mis(r, quantity);
            legit.add(mis.legit);
            leak.add(mis.leak);
            requested.add(detail::pick(mis, quantity));
        } catch (const std::exception& e) {
            throw std::runtime_error("trial " + std::to_string(i) + ": " + e.what());
        }
    }
    return detail::finalize(power_db, legit, leak, requested, trials);
}

/// Both users' rate points from shared channel draws. Each user's leakage at
/// the unintended receiver is conditioned on that receiver's own message.
/// Supports the two-message schemes and the no-CSIT baseline, whose second
/// user is the mirrored assignment (roles of the two receivers exchanged).
inline std::pair<RatePoint, RatePoint> evaluate_pair(SchemeId scheme, double power_db,
                                                     std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("evaluate_pair: trials must be >= 1");
    const bool mirrored = scheme == SchemeId::BaselineNoCsit;
    if (!detail::is_pair_scheme(scheme) && !mirrored)
        throw std::invalid_argument("evaluate_pair: scheme has a single message");
    const double power = db_to_linear(power_db);
    detail::Accumulator legit1, leak1, diff1, legit2, leak2, diff2;
    for (std::size_t i = 0; i < trials; ++i) {
        try {
            Rng rng(trial_seed(seed, i));
            const ChannelBlock block = sample_block(rng, 2, scheme_slots(scheme));
            const SchemeRealization r = build_scheme(scheme, block, power);
            const double slots = static_cast<double>(r.slots);
            double l1, k1, l2, k2;
            if (mirrored) {
                constexpr std::string_view v[] = {"v"};
                l1 = gaussian_mi(r.model("legitimate", v)) / slots;
                k1 = gaussian_mi(r.model("eavesdropper", v)) / slots;
                l2 = k1;  // the mirrored user sees the same two observations swapped
                k2 = l1;
            } else {
                constexpr std::string_view v1[] = {"v1"};
                constexpr std::string_view v2[] = {"v2"};
                l1 = gaussian_mi(r.model("receiver1", v1)) / slots;
                k1 = gaussian_mi(r.model("receiver2", v1, v2)) / slots;
                l2 = gaussian_mi(r.model("receiver2", v2)) / slots;
                k2 = gaussian_mi(r.model("receiver1", v2, v1)) / slots;
            }
            legit1.add(l1);
            leak1.add(k1);
            diff1.add(l1 - k1);
            legit2.add(l2);
            leak2.add(k2);
            diff2.add(l2 - k2);
        } catch (const std::exception& e) {
            throw std::runtime_error("trial " + std::to_string(i) + ": " + e.what());
        }
    }
    return {detail::finalize(power_db, legit1, leak1, diff1, trials),
            detail::finalize(power_db, legit2, leak2, diff2, trials)};
}

inline std::pair<RatePoint, RatePoint> evaluate_bcc_pair(double power_db, std::size_t trials,
                                                         std::uint64_t seed) {
    return evaluate_pair(SchemeId::Bcc4Slot, power_db, trials, seed);
}

inline std::vector<RatePoint> sweep(SchemeId scheme, std::span<const double> grid_db,
                                    std::size_t trials, std::uint64_t seed, Quantity quantity) {
    std::vector<RatePoint> points;
    points.reserve(grid_db.size());
    for (double db : grid_db) points.push_back(evaluate_rates(scheme, db, trials, seed, quantity));
    return points;
}

/// Ordinary least squares of a rate against log2 of the linear power.
inline DofEstimate estimate_dof(std::span<const double> power_db, std::span<const double> rates) {
    if (power_db.size() != rates.size()) throw std::invalid_argument("estimate_dof: size mismatch");
    const std::size_t n = power_db.size();
    if (n < 3) throw std::invalid_argument("estimate_dof: need at least 3 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(power_db[i] - power_db[j]) < 1e-12)
                throw std::invalid_argument("estimate_dof: duplicate powers collapse the design matrix");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += db_to_log2_power(power_db[i]) / static_cast<double>(n);
        my += rates[i] / static_cast<double>(n);
    }
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = db_to_log2_power(power_db[i]) - mx;
        const double dy = rates[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    DofEstimate est;
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = est.intercept + est.slope * db_to_log2_power(power_db[i]);
        ss_res += (rates[i] - fit) * (rates[i] - fit);
    }
    est.r_squared = syy > 1e-30 ? 1.0 - ss_res / syy : 1.0;
    est.grid_db.assign(power_db.begin(), power_db.end());
    return est;
}

inline DofEstimate estimate_dof(std::span<const RatePoint> points, Quantity quantity) {
    std::vector<double> db, rates;
    for (const auto& p : points) {
        db.push_back(p.power_db);
        switch (quantity) {
            case Quantity::legit: rates.push_back(p.legit_rate); break;
            case Quantity::leak:
            case Quantity::leak_conditioned: rates.push_back(p.leak_rate); break;
            case Quantity::secrecy: rates.push_back(p.secrecy_rate); break;
        }
    }
    return estimate_dof(db, rates);
}

}  // namespace sdof
