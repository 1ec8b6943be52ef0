// Command-line front end: SNR sweeps, slope estimation, region queries and
// the summary table. Data goes to stdout (or --out); diagnostics to stderr.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdof/sdof.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path '" + out_path + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + out_path + "'");
}

std::string format_point(const sdof::RegionPoint& p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g", p.d1, p.d2);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artificial-noise secrecy-DoF simulator for delayed-CSIT multi-antenna channels"};
    app.require_subcommand(1);

    std::string scheme_arg = "wiretap-sym";
    std::string snr_arg = "30:5:60";
    std::size_t trials = 500;
    std::uint64_t seed = 1;
    std::string sim_format = "csv";
    std::string report_format = "text";
    std::string out_path;
    std::vector<std::string> quantity_args;
    double tol = 0.03;

    auto add_run_flags = [&](CLI::App* cmd, bool with_quantity) {
        cmd->add_option("--scheme", scheme_arg,
                        "wiretap-sym | wiretap-asym | bcc | baseline-perfect-wiretap | "
                        "baseline-perfect-bcc | baseline-no-csit")
            ->capture_default_str();
        cmd->add_option("--snr-db", snr_arg, "grid as start:step:stop or comma list")
            ->capture_default_str();
        cmd->add_option("--trials", trials, "Monte Carlo trials per grid point")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "base seed of the trial streams")->capture_default_str();
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        if (with_quantity)
            cmd->add_option("--quantity", quantity_args,
                            "legit | leak | leak_conditioned | secrecy (repeatable; default per scheme)");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "rate table over an SNR grid");
    add_run_flags(simulate, true);
    simulate->add_option("--format", sim_format, "csv | json")->capture_default_str();

    CLI::App* estimate = app.add_subcommand("estimate-dof", "fit rate slopes against log2 P");
    add_run_flags(estimate, false);
    estimate->add_option("--format", report_format, "text | json")->capture_default_str();
    estimate->add_option("--tol", tol, "pass/fail tolerance on each slope")->capture_default_str();

    CLI::App* region = app.add_subcommand("region", "query the secrecy-DoF outer-bound polytope");
    std::vector<double> check_args;
    std::size_t boundary_n = 0;
    bool want_vertices = false;
    double region_tol = 0.0;
    region->add_option("--check", check_args, "d1 d2: membership verdict")->expected(2);
    region->add_flag("--vertices", want_vertices, "print the polytope vertices");
    region->add_option("--boundary", boundary_n, "print N points tracing the boundary");
    region->add_option("--tol", region_tol, "membership tolerance")->capture_default_str();
    region->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "sum secrecy-DoF table for no / delayed / perfect transmitter CSI");
    reproduce->add_option("--trials", trials, "Monte Carlo trials per grid point")
        ->capture_default_str();
    reproduce->add_option("--seed", seed, "base seed of the trial streams")->capture_default_str();
    reproduce->add_option("--format", report_format, "text | json")->capture_default_str();
    reproduce->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed() || estimate->parsed()) {
            sdof::RunConfig config;
            config.scheme = sdof::parse_scheme(scheme_arg);
            config.snr_db = sdof::parse_snr_grid(snr_arg);
            config.trials = trials;
            config.seed = seed;
            config.out_path = out_path;
            config.tol = tol;
            for (const auto& q : quantity_args) config.quantities.push_back(sdof::parse_quantity(q));

            if (simulate->parsed()) {
                if (sim_format != "csv" && sim_format != "json")
                    throw std::invalid_argument("simulate --format must be csv or json");
                config.format = sim_format == "csv" ? sdof::OutputFormat::csv : sdof::OutputFormat::json;
                const auto rows = sdof::run_simulate(config);
                emit(config.format == sdof::OutputFormat::csv
                         ? sdof::to_csv(rows)
                         : sdof::to_json(config, rows).dump(2) + "\n",
                     config.out_path);
            } else {
                const sdof::DofReport report = sdof::run_estimate_dof(config);
                if (report_format == "json")
                    emit(sdof::to_json(report).dump(2) + "\n", config.out_path);
                else
                    emit(sdof::to_text(report), config.out_path);
                return report.pass ? 0 : 1;
            }
        } else if (region->parsed()) {
            std::string out;
            bool any = false;
            if (!check_args.empty()) {
                const sdof::RegionPoint p{check_args[0], check_args[1]};
                out += format_point(p) +
                       (sdof::region_contains(p, region_tol) ? " inside\n" : " outside\n");
                any = true;
            }
            if (want_vertices) {
                for (const auto& v : sdof::region_vertices()) out += format_point(v) + "\n";
                any = true;
            }
            if (boundary_n > 0) {
                for (const auto& v : sdof::region_boundary(boundary_n)) out += format_point(v) + "\n";
                any = true;
            }
            if (!any) throw std::invalid_argument("region: pass --check, --vertices or --boundary");
            emit(out, out_path);
        } else if (reproduce->parsed()) {
            const sdof::ReproduceReport report = sdof::run_reproduce(trials, seed);
            if (report_format == "json")
                emit(sdof::to_json(report).dump(2) + "\n", out_path);
            else
                emit(sdof::to_text(report), out_path);
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
