// Run configuration, sweep tables, slope reports and the summary table, plus
// their CSV/JSON serializations. Field names and column order are a public
// contract; see README.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdof/estimator.hpp"
#include "sdof/region.hpp"

namespace sdof {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { csv, json };

struct RunConfig {
    SchemeId scheme = SchemeId::WiretapSymmetric3Slot;
    std::vector<double> snr_db = {30, 35, 40, 45, 50, 55, 60};
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty: standard output
    std::vector<Quantity> quantities;  // empty: scheme default
    double tol = 0.03;

    void validate() const {
        if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
        if (snr_db.empty()) throw std::invalid_argument("config: empty SNR grid");
        for (std::size_t i = 1; i < snr_db.size(); ++i)
            if (!(snr_db[i] > snr_db[i - 1]))
                throw std::invalid_argument("config: SNR grid must be strictly increasing");
    }
};

// "30:5:60" (start:step:stop, inclusive) or "30,40,50".
inline std::vector<double> parse_snr_grid(const std::string& text) {
    auto parse_num = [](const std::string& s) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + s + "' in SNR grid");
        }
        if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "' in SNR grid");
        return v;
    };
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        const std::size_t c1 = text.find(':');
        const std::size_t c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
            throw std::invalid_argument("SNR range must be start:step:stop");
        const double start = parse_num(text.substr(0, c1));
        const double step = parse_num(text.substr(c1 + 1, c2 - c1 - 1));
        const double stop = parse_num(text.substr(c2 + 1));
        if (!(step > 0.0) || stop < start) throw std::invalid_argument("SNR range must ascend");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = std::min(text.find(',', pos), text.size());
            grid.push_back(parse_num(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    return grid;
}

inline std::vector<Quantity> default_quantities(SchemeId scheme) {
    if (detail::is_pair_scheme(scheme))
        return {Quantity::legit, Quantity::leak, Quantity::leak_conditioned, Quantity::secrecy};
    return {Quantity::legit, Quantity::leak, Quantity::secrecy};
}

struct SimRow {
    double snr_db = 0.0;
    std::string quantity;
    double rate_bits_per_use = 0.0;
    double std_err = 0.0;
    std::size_t trials = 0;
};

/// One row per grid point per quantity, grid-major, quantities in request order.
inline std::vector<SimRow> run_simulate(const RunConfig& config) {
    config.validate();
    const std::vector<Quantity> quantities =
        config.quantities.empty() ? default_quantities(config.scheme) : config.quantities;
    for (Quantity q : quantities)
        if (q == Quantity::leak_conditioned && !detail::is_pair_scheme(config.scheme))
            throw std::invalid_argument("quantity leak_conditioned applies to two-message schemes only");
    std::vector<SimRow> rows;
    for (double db : config.snr_db)
        for (Quantity q : quantities) {
            const RatePoint p = evaluate_rates(config.scheme, db, config.trials, config.seed, q);
            double rate = 0.0;
            switch (q) {
                case Quantity::legit: rate = p.legit_rate; break;
                case Quantity::leak:
                case Quantity::leak_conditioned: rate = p.leak_rate; break;
                case Quantity::secrecy: rate = p.secrecy_rate; break;
            }
            rows.push_back({db, std::string(quantity_name(q)), rate, p.std_err, p.trials});
        }
    return rows;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace detail

inline std::string to_csv(const std::vector<SimRow>& rows) {
    std::string out = "snr_db,quantity,rate_bits_per_use,std_err,trials\n";
    for (const auto& r : rows) {
        out += detail::format_double(r.snr_db) + "," + r.quantity + "," +
               detail::format_double(r.rate_bits_per_use) + "," + detail::format_double(r.std_err) +
               "," + std::to_string(r.trials) + "\n";
    }
    return out;
}

inline ordered_json to_json(const RunConfig& config, const std::vector<SimRow>& rows) {
    ordered_json doc;
    doc["scheme"] = scheme_name(config.scheme);
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    doc["snr_db"] = config.snr_db;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows)
        doc["rows"].push_back({{"snr_db", r.snr_db},
                               {"quantity", r.quantity},
                               {"rate_bits_per_use", r.rate_bits_per_use},
                               {"std_err", r.std_err},
                               {"trials", r.trials}});
    return doc;
}

struct DofRow {
    std::string label;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double target = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct DofReport {
    SchemeId scheme{};
    std::vector<double> grid_db;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<DofRow> rows;
    bool pass = true;
};

namespace detail {

inline DofRow make_dof_row(std::string label, const DofEstimate& est, double target, double tol) {
    return {std::move(label), est.slope, est.intercept, est.r_squared,
            target, tol, std::abs(est.slope - target) <= tol};
}

}  // namespace detail

/// Fit slopes for the scheme's relevant quantities and compare them against
/// the asymptotic targets: 2/3 for the symmetric wiretap scheme, 1/2 for the
/// asymmetric one, (1/2, 1/2) with sum 1 for the two-message scheme, 1 / 2 /
/// 0 for the perfect-CSIT and no-CSIT references. Leakage slope targets are 0.
inline DofReport run_estimate_dof(const RunConfig& config) {
    config.validate();
    DofReport report;
    report.scheme = config.scheme;
    report.grid_db = config.snr_db;
    report.trials = config.trials;
    report.seed = config.seed;
    const double tol = config.tol;
    const double sum_tol = std::max(0.05, tol);

    if (detail::is_pair_scheme(config.scheme)) {
        std::vector<RatePoint> user1, user2;
        std::vector<double> sum_rates;
        for (double db : config.snr_db) {
            auto [p1, p2] = evaluate_pair(config.scheme, db, config.trials, config.seed);
            user1.push_back(p1);
            user2.push_back(p2);
            sum_rates.push_back(p1.secrecy_rate + p2.secrecy_rate);
        }
        const bool perfect = config.scheme == SchemeId::BaselinePerfectCsitBcc;
        const double user_target = perfect ? 1.0 : 0.5;
        report.rows.push_back(detail::make_dof_row(
            "d1", estimate_dof(user1, Quantity::secrecy), user_target, tol));
        report.rows.push_back(detail::make_dof_row(
            "d2", estimate_dof(user2, Quantity::secrecy), user_target, tol));
        report.rows.push_back(detail::make_dof_row(
            "sum", estimate_dof(config.snr_db, sum_rates), 2.0 * user_target, sum_tol));
        report.rows.push_back(detail::make_dof_row(
            "leak1", estimate_dof(user1, Quantity::leak_conditioned), 0.0, tol));
        report.rows.push_back(detail::make_dof_row(
            "leak2", estimate_dof(user2, Quantity::leak_conditioned), 0.0, tol));
    } else {
        const std::vector<RatePoint> points =
            sweep(config.scheme, config.snr_db, config.trials, config.seed, Quantity::secrecy);
        double secrecy_target = 0.0;
        switch (config.scheme) {
            case SchemeId::WiretapSymmetric3Slot: secrecy_target = 2.0 / 3.0; break;
            case SchemeId::WiretapAsymmetric2Slot: secrecy_target = 0.5; break;
            case SchemeId::BaselinePerfectCsitWiretap: secrecy_target = 1.0; break;
            case SchemeId::BaselineNoCsit: secrecy_target = 0.0; break;
            default: break;
        }
        report.rows.push_back(detail::make_dof_row(
            "secrecy", estimate_dof(points, Quantity::secrecy), secrecy_target, tol));
        if (config.scheme == SchemeId::BaselineNoCsit)
            report.rows.push_back(detail::make_dof_row(
                "legit", estimate_dof(points, Quantity::legit), 1.0, tol));
        else
            report.rows.push_back(detail::make_dof_row(
                "leak", estimate_dof(points, Quantity::leak), 0.0, tol));
    }
    for (const auto& r : report.rows) report.pass &= r.pass;
    return report;
}

inline ordered_json to_json(const DofReport& report) {
    ordered_json doc;
    doc["scheme"] = scheme_name(report.scheme);
    doc["snr_db"] = report.grid_db;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows)
        doc["rows"].push_back({{"label", r.label},
                               {"slope", r.slope},
                               {"intercept", r.intercept},
                               {"r_squared", r.r_squared},
                               {"target", r.target},
                               {"tol", r.tol},
                               {"pass", r.pass}});
    doc["pass"] = report.pass;
    return doc;
}

inline std::string to_text(const DofReport& report) {
    std::string out = "scheme: " + std::string(scheme_name(report.scheme)) + "\n";
    for (const auto& r : report.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-8s slope %+8.4f  target %+6.4f +-%.3f  R2 %.5f  [%s]\n",
                      r.label.c_str(), r.slope, r.target, r.tol, r.r_squared,
                      r.pass ? "pass" : "FAIL");
        out += buf;
    }
    out += report.pass ? "result: pass\n" : "result: FAIL\n";
    return out;
}

struct ReproduceRow {
    std::string label;
    double estimate = 0.0;
    double target = 0.0;
    bool pass = false;
};

struct ReproduceReport {
    std::vector<double> grid_db;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.05;
    std::vector<ReproduceRow> rows;
    bool pass = true;
};

/// Sum secrecy-rate slopes of the two-user schemes under no, delayed and
/// perfect transmitter channel knowledge.
inline ReproduceReport run_reproduce(std::size_t trials = 500, std::uint64_t seed = 1,
                                     std::vector<double> grid_db = {30, 35, 40, 45, 50, 55, 60}) {
    ReproduceReport report;
    report.grid_db = grid_db;
    report.trials = trials;
    report.seed = seed;
    const struct {
        const char* label;
        SchemeId scheme;
        double target;
    } entries[] = {
        {"no CSIT", SchemeId::BaselineNoCsit, 0.0},
        {"delayed CSIT", SchemeId::Bcc4Slot, 1.0},
        {"perfect CSIT", SchemeId::BaselinePerfectCsitBcc, 2.0},
    };
    for (const auto& entry : entries) {
        std::vector<double> sum_rates;
        for (double db : grid_db) {
            auto [p1, p2] = evaluate_pair(entry.scheme, db, trials, seed);
            sum_rates.push_back(p1.secrecy_rate + p2.secrecy_rate);
        }
        const DofEstimate est = estimate_dof(grid_db, sum_rates);
        report.rows.push_back({entry.label, est.slope, entry.target,
                               std::abs(est.slope - entry.target) <= report.tol});
    }
    for (const auto& r : report.rows) report.pass &= r.pass;
    return report;
}

inline ordered_json to_json(const ReproduceReport& report) {
    ordered_json doc;
    doc["snr_db"] = report.grid_db;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["tol"] = report.tol;
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows)
        doc["rows"].push_back({{"label", r.label},
                               {"sum_sdof_estimate", r.estimate},
                               {"target", r.target},
                               {"pass", r.pass}});
    doc["pass"] = report.pass;
    return doc;
}

inline std::string to_text(const ReproduceReport& report) {
    std::string out = "sum secrecy-DoF of the two-user broadcast schemes\n";
    for (const auto& r : report.rows) {
        char buf[120];
        std::snprintf(buf, sizeof(buf), "%-14s estimate %+7.4f  target %.0f +-%.2f  [%s]\n",
                      r.label.c_str(), r.estimate, r.target, report.tol,
                      r.pass ? "pass" : "FAIL");
        out += buf;
    }
    out += report.pass ? "result: pass\n" : "result: FAIL\n";
    return out;
}

}  // namespace sdof
