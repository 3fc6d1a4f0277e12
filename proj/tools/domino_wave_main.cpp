// domino-wave: command-line front end for the falling-domino wave library.
//
// Subcommands:
//   speed        settled-wave solution for one geometry
//   curve        dimensionless speed factor G across a spacing-ratio sweep
//   simulate     rod-by-rod propagation trace
//   asymptotics  exact G against its close- or wide-spacing asymptote
//
// Exit codes: 0 success, 2 invalid arguments or parameter domain errors,
// 3 numerical failure (an adaptive routine could not certify its result).
// All numeric output is printed with %.15g, so repeated runs are
// byte-identical.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domino/chain_model.hpp"
#include "domino/chain_simulator.hpp"
#include "domino/errors.hpp"
#include "domino/version.hpp"
#include "domino/wave_speed.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

struct CommonOpts {
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write output to this file instead of stdout");
}

int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream file(opts.out);
    if (!file) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", opts.out.c_str());
        return 2;
    }
    file << text;
    return file.good() ? 0 : 2;
}

ordered_json make_meta(const std::string& command, ordered_json parameters) {
    ordered_json meta;
    meta["command"] = command;
    meta["parameters"] = std::move(parameters);
    meta["version"] = domino::kVersion;
    return meta;
}

std::string render_json(ordered_json rows, ordered_json meta) {
    ordered_json doc;
    doc["rows"] = std::move(rows);
    doc["meta"] = std::move(meta);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- speed --

int run_speed(const domino::ChainGeometry& geometry, const CommonOpts& opts) {
    const domino::WaveSolution sol = domino::limiting_solution(geometry);

    if (opts.format == "csv") {
        std::string text = "omega_limit,k_modulus,fall_time,speed,G\n";
        text += fmt(sol.omega_limit) + "," + fmt(sol.k) + "," + fmt(sol.fall_time) + "," +
                fmt(sol.speed) + "," + fmt(sol.G) + "\n";
        return emit(opts, text);
    }

    ordered_json row;
    row["omega_limit"] = sol.omega_limit;
    row["k_modulus"] = sol.k;
    row["fall_time"] = sol.fall_time;
    row["speed"] = sol.speed;
    row["G"] = sol.G;

    ordered_json params;
    params["length"] = geometry.rod_length;
    params["spacing"] = geometry.spacing;
    params["gravity"] = geometry.gravity;
    return emit(opts, render_json(ordered_json::array({row}), make_meta("speed", params)));
}

// ---------------------------------------------------------------- curve --

struct CurveOpts {
    double min = 0.0;
    double max = 0.0;
    std::int64_t samples = 0;
    std::optional<double> length;
    std::optional<double> gravity;
};

int run_curve(const CurveOpts& curve, const CommonOpts& opts) {
    if (!(curve.min > 0.0) || !(curve.min < 1.0) || !(curve.max > 0.0) || !(curve.max < 1.0)) {
        throw std::invalid_argument("curve: --min and --max must lie in (0, 1)");
    }
    if (!(curve.min < curve.max)) {
        throw std::invalid_argument("curve: --min must be strictly less than --max");
    }
    if (curve.samples < 2) {
        throw std::invalid_argument("curve: --samples must be >= 2");
    }
    if (curve.length.has_value() != curve.gravity.has_value()) {
        throw std::invalid_argument("curve: --length and --gravity must be given together");
    }
    const bool dimensional = curve.length.has_value();
    if (dimensional && (!(*curve.length > 0.0) || !(*curve.gravity > 0.0))) {
        throw std::invalid_argument("curve: --length and --gravity must be > 0");
    }
    const double velocity_scale = dimensional ? std::sqrt(*curve.gravity * *curve.length) : 0.0;

    std::string csv;
    ordered_json rows = ordered_json::array();
    if (opts.format == "csv") {
        csv = dimensional ? "d_over_l,beta1_rad,f_plus,k_modulus,G,v\n"
                          : "d_over_l,beta1_rad,f_plus,k_modulus,G\n";
    }

    const double step = (curve.max - curve.min) / static_cast<double>(curve.samples - 1);
    for (std::int64_t i = 0; i < curve.samples; ++i) {
        const double x = (i == curve.samples - 1)
                             ? curve.max
                             : curve.min + step * static_cast<double>(i);
        const double beta1 = std::asin(x);
        const domino::CollisionFactors factors = domino::collision_factors({beta1});
        const double k = domino::wave_modulus(x);
        const double g_factor = domino::scaling_G(x);

        if (opts.format == "csv") {
            csv += fmt(x) + "," + fmt(beta1) + "," + fmt(factors.f_plus) + "," + fmt(k) + "," +
                   fmt(g_factor);
            if (dimensional) csv += "," + fmt(velocity_scale * g_factor);
            csv += "\n";
        } else {
            ordered_json row;
            row["d_over_l"] = x;
            row["beta1_rad"] = beta1;
            row["f_plus"] = factors.f_plus;
            row["k_modulus"] = k;
            row["G"] = g_factor;
            if (dimensional) row["v"] = velocity_scale * g_factor;
            rows.push_back(row);
        }
    }

    if (opts.format == "csv") return emit(opts, csv);

    ordered_json params;
    params["min"] = curve.min;
    params["max"] = curve.max;
    params["samples"] = curve.samples;
    if (dimensional) {
        params["length"] = *curve.length;
        params["gravity"] = *curve.gravity;
    }
    return emit(opts, render_json(std::move(rows), make_meta("curve", params)));
}

// ------------------------------------------------------------- simulate --

struct SimulateOpts {
    double omega1 = 0.0;
    std::int64_t max_rods = 1000;
    double tol = 1e-9;
};

int run_simulate(const domino::ChainGeometry& geometry, const SimulateOpts& sim,
                 const CommonOpts& opts) {
    const domino::SimulationResult result =
        domino::simulate_chain(geometry, sim.omega1, sim.max_rods, sim.tol);
    const domino::WaveSolution closed = domino::limiting_solution(geometry);

    if (opts.format == "csv") {
        std::string text = "k,omega_i,omega_f,omega_b,T_k,t_cum,v_k\n";
        for (const domino::RodTrace& rod : result.rods) {
            text += std::to_string(rod.index) + "," + fmt(rod.omega_i) + "," + fmt(rod.omega_f) +
                    "," + fmt(rod.omega_b) + "," + fmt(rod.fall_time) + "," +
                    fmt(rod.cumulative_time) + "," + fmt(rod.instantaneous_speed) + "\n";
        }
        text += "# converged_at=";
        text += result.converged_at ? std::to_string(*result.converged_at) : std::string("none");
        text += "\n# v_closed=" + fmt(closed.speed) + "\n";
        text += "# v_last=" + fmt(result.limiting_speed_estimate) + "\n";
        return emit(opts, text);
    }

    ordered_json rows = ordered_json::array();
    for (const domino::RodTrace& rod : result.rods) {
        ordered_json row;
        row["k"] = rod.index;
        row["omega_i"] = rod.omega_i;
        row["omega_f"] = rod.omega_f;
        row["omega_b"] = rod.omega_b;
        row["T_k"] = rod.fall_time;
        row["t_cum"] = rod.cumulative_time;
        row["v_k"] = rod.instantaneous_speed;
        rows.push_back(row);
    }

    ordered_json params;
    params["length"] = geometry.rod_length;
    params["spacing"] = geometry.spacing;
    params["gravity"] = geometry.gravity;
    params["omega1"] = sim.omega1;
    params["max_rods"] = sim.max_rods;
    params["tol"] = sim.tol;
    ordered_json meta = make_meta("simulate", params);
    ordered_json summary;
    if (result.converged_at) {
        summary["converged_at"] = *result.converged_at;
    } else {
        summary["converged_at"] = nullptr;
    }
    summary["v_closed"] = closed.speed;
    summary["v_last"] = result.limiting_speed_estimate;
    meta["summary"] = std::move(summary);
    return emit(opts, render_json(std::move(rows), std::move(meta)));
}

// ---------------------------------------------------------- asymptotics --

int run_asymptotics(const std::string& regime, std::vector<double> points,
                    const CommonOpts& opts) {
    const bool close = regime == "close";
    if (points.empty()) {
        points = close ? std::vector<double>{0.1, 0.01, 0.001}
                       : std::vector<double>{0.9999, 0.999999, 0.99999999};
    }

    std::string csv = "x,G_exact,G_asymptotic,rel_error\n";
    ordered_json rows = ordered_json::array();
    for (double x : points) {
        const double exact = domino::scaling_G(x);
        const double approx = close ? domino::scaling_G_close(x) : domino::scaling_G_wide(x);
        const double rel_error = std::abs(approx - exact) / exact;
        if (opts.format == "csv") {
            csv += fmt(x) + "," + fmt(exact) + "," + fmt(approx) + "," + fmt(rel_error) + "\n";
        } else {
            ordered_json row;
            row["x"] = x;
            row["G_exact"] = exact;
            row["G_asymptotic"] = approx;
            row["rel_error"] = rel_error;
            rows.push_back(row);
        }
    }

    if (opts.format == "csv") return emit(opts, csv);

    ordered_json params;
    params["regime"] = regime;
    params["points"] = points;
    return emit(opts, render_json(std::move(rows), make_meta("asymptotics", params)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Propagation speed of a falling-domino wave (hinged-rod chain model)"};
    app.require_subcommand(1);

    domino::ChainGeometry geometry{0.0, 0.0, 0.0, 1.0};
    CommonOpts speed_common, curve_common, sim_common, asym_common;
    CurveOpts curve;
    SimulateOpts sim;
    std::string regime;
    std::vector<double> points;

    CLI::App* cmd_speed = app.add_subcommand("speed", "Settled-wave solution for one geometry");
    cmd_speed->add_option("--length", geometry.rod_length, "Rod length l (m)")->required();
    cmd_speed->add_option("--spacing", geometry.spacing, "Hinge spacing d (m)")->required();
    cmd_speed->add_option("--gravity", geometry.gravity, "Gravity g (m/s^2)")->required();
    cmd_speed->add_option("--mass", geometry.mass, "Tip mass m (kg); cancels from all results");
    add_common(cmd_speed, speed_common);

    CLI::App* cmd_curve = app.add_subcommand("curve", "Speed factor G over a spacing-ratio sweep");
    cmd_curve->add_option("--min", curve.min, "Smallest spacing ratio d/l")->required();
    cmd_curve->add_option("--max", curve.max, "Largest spacing ratio d/l")->required();
    cmd_curve->add_option("--samples", curve.samples, "Number of samples (>= 2)")->required();
    double curve_length = 0.0, curve_gravity = 0.0;
    CLI::Option* opt_len =
        cmd_curve->add_option("--length", curve_length, "Rod length (adds a v column)");
    CLI::Option* opt_grav =
        cmd_curve->add_option("--gravity", curve_gravity, "Gravity (adds a v column)");
    add_common(cmd_curve, curve_common);

    CLI::App* cmd_sim = app.add_subcommand("simulate", "Rod-by-rod propagation trace");
    domino::ChainGeometry sim_geometry{0.0, 0.0, 0.0, 1.0};
    cmd_sim->add_option("--length", sim_geometry.rod_length, "Rod length l (m)")->required();
    cmd_sim->add_option("--spacing", sim_geometry.spacing, "Hinge spacing d (m)")->required();
    cmd_sim->add_option("--gravity", sim_geometry.gravity, "Gravity g (m/s^2)")->required();
    cmd_sim->add_option("--mass", sim_geometry.mass, "Tip mass m (kg)");
    cmd_sim->add_option("--omega1", sim.omega1, "Launch velocity of rod 1 (rad/s)")->required();
    cmd_sim->add_option("--max-rods", sim.max_rods, "Maximum rods to simulate")
        ->capture_default_str();
    cmd_sim->add_option("--tol", sim.tol, "Relative convergence tolerance")
        ->capture_default_str();
    add_common(cmd_sim, sim_common);

    CLI::App* cmd_asym =
        app.add_subcommand("asymptotics", "Exact G vs. its asymptote in one regime");
    cmd_asym->add_option("--regime", regime, "Asymptotic regime")
        ->check(CLI::IsMember({"close", "wide"}))
        ->required();
    cmd_asym->add_option("--points", points, "Comma-separated spacing ratios")->delimiter(',');
    add_common(cmd_asym, asym_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_speed->parsed()) return run_speed(geometry, speed_common);
        if (cmd_curve->parsed()) {
            if (*opt_len) curve.length = curve_length;
            if (*opt_grav) curve.gravity = curve_gravity;
            return run_curve(curve, curve_common);
        }
        if (cmd_sim->parsed()) return run_simulate(sim_geometry, sim, sim_common);
        if (cmd_asym->parsed()) return run_asymptotics(regime, points, asym_common);
    } catch (const domino::NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
