#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "domino/chain_model.hpp"
#include "domino/wave_speed.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(DOMINO_CLI_PATH) + " " + args + " > cli_stdout.tmp 2> cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), slurp("cli_stdout.tmp"), slurp("cli_stderr.tmp")};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

const std::string kRefFlags = "--length 1 --spacing 0.5 --gravity 9.81";

}  // namespace

TEST_CASE("cli speed: values, header, and format consistency") {
    const CliResult res = run_cli("speed " + kRefFlags);
    REQUIRE(res.exit_code == 0);
    CHECK(res.err.empty());

    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "omega_limit,k_modulus,fall_time,speed,G");

    const auto fields = split_csv(lines[1]);
    REQUIRE(fields.size() == 5);
    const double omega_limit = std::stod(fields[0]);
    const double speed = std::stod(fields[3]);
    const double g_factor = std::stod(fields[4]);
    CHECK(omega_limit == doctest::Approx(5.5587089030685136).epsilon(1e-12));
    CHECK(speed == doctest::Approx(5.38237488799757).epsilon(1e-12));
    CHECK(speed == doctest::Approx(std::sqrt(9.81) * g_factor).epsilon(1e-11));
}

TEST_CASE("cli speed: deterministic and mass-invariant output") {
    const CliResult first = run_cli("speed " + kRefFlags);
    const CliResult second = run_cli("speed " + kRefFlags);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    const CliResult light = run_cli("speed " + kRefFlags + " --mass 1");
    const CliResult heavy = run_cli("speed " + kRefFlags + " --mass 7");
    REQUIRE(light.exit_code == 0);
    REQUIRE(heavy.exit_code == 0);
    CHECK(light.out == heavy.out);

    const CliResult light_json = run_cli("speed " + kRefFlags + " --mass 1 --format json");
    const CliResult heavy_json = run_cli("speed " + kRefFlags + " --mass 7 --format json");
    REQUIRE(light_json.exit_code == 0);
    CHECK(light_json.out == heavy_json.out);
}

TEST_CASE("cli speed: validation failures exit with 2") {
    const CliResult degenerate = run_cli("speed --length 1 --spacing 1 --gravity 9.81");
    CHECK(degenerate.exit_code == 2);
    CHECK(degenerate.err.find("spacing") != std::string::npos);

    CHECK(run_cli("speed --length 1 --spacing 0.5 --gravity 0").exit_code == 2);
    CHECK(run_cli("speed --length 1 --spacing 0.5").exit_code == 2);  // missing required
    CHECK(run_cli("speed " + kRefFlags + " --format xml").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                // missing subcommand
    CHECK(run_cli("warp " + kRefFlags).exit_code == 2);  // unknown subcommand
}

TEST_CASE("cli: --help succeeds") {
    const CliResult res = run_cli("--help");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("speed") != std::string::npos);
    CHECK(res.out.find("asymptotics") != std::string::npos);
}

TEST_CASE("cli curve: dimensionless sweep") {
    const CliResult res = run_cli("curve --min 0.05 --max 0.95 --samples 19");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 20);
    CHECK(lines[0] == "d_over_l,beta1_rad,f_plus,k_modulus,G");

    double prev_g = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 5);
        const double g_factor = std::stod(fields[4]);
        if (i > 1) CHECK(g_factor < prev_g);
        prev_g = g_factor;
    }

    const auto first_row = split_csv(lines[1]);
    CHECK(first_row[0] == "0.05");
    const auto last_row = split_csv(lines[19]);
    CHECK(last_row[0] == "0.95");

    const CliResult rerun = run_cli("curve --min 0.05 --max 0.95 --samples 19");
    CHECK(rerun.out == res.out);
}

TEST_CASE("cli curve: dimensional column when length and gravity are given") {
    const CliResult res =
        run_cli("curve --min 0.2 --max 0.8 --samples 4 --length 2 --gravity 9.81");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "d_over_l,beta1_rad,f_plus,k_modulus,G,v");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 6);
        const double g_factor = std::stod(fields[4]);
        const double v = std::stod(fields[5]);
        CHECK(v == doctest::Approx(std::sqrt(9.81 * 2.0) * g_factor).epsilon(1e-11));
    }
}

TEST_CASE("cli curve: close-spacing law shows in the sweep") {
    const CliResult res = run_cli("curve --min 0.005 --max 0.02 --samples 4");
    REQUIRE(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv(lines[i]);
        const double x = std::stod(fields[0]);
        const double g_factor = std::stod(fields[4]);
        CHECK(std::abs(x * g_factor - 1.0) < 0.01);
    }
}

TEST_CASE("cli curve: validation failures exit with 2") {
    CHECK(run_cli("curve --min 0 --max 0.9 --samples 5").exit_code == 2);
    CHECK(run_cli("curve --min 0.1 --max 1.0 --samples 5").exit_code == 2);
    CHECK(run_cli("curve --min 0.5 --max 0.2 --samples 5").exit_code == 2);
    CHECK(run_cli("curve --min 0.1 --max 0.9 --samples 1").exit_code == 2);
    CHECK(run_cli("curve --min 0.1 --max 0.9 --samples 5 --length 1").exit_code == 2);
    CHECK(run_cli("curve --min 0.1 --max 0.9 --samples 5 --gravity 9.81").exit_code == 2);
}

TEST_CASE("cli curve: json document structure") {
    const CliResult res = run_cli("curve --min 0.1 --max 0.9 --samples 9 --format json");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc.contains("meta"));
    REQUIRE(doc["rows"].size() == 9);
    CHECK(doc["meta"]["command"] == "curve");
    CHECK(doc["meta"]["parameters"]["samples"] == 9);
    CHECK(doc["meta"].contains("version"));
    const auto& row = doc["rows"][0];
    for (const char* key : {"d_over_l", "beta1_rad", "f_plus", "k_modulus", "G"}) {
        CHECK(row.contains(key));
    }
    CHECK(!row.contains("v"));
}

TEST_CASE("cli simulate: trace, summary, and convergence report") {
    char omega_buf[40];
    std::snprintf(omega_buf, sizeof omega_buf, "%.17g", domino::limiting_omega({1.0, 0.5, 9.81}));

    const CliResult fixed = run_cli("simulate " + kRefFlags + " --omega1 " +
                                    std::string(omega_buf) + " --max-rods 10 --tol 1e-9");
    REQUIRE(fixed.exit_code == 0);
    const auto fixed_lines = lines_of(fixed.out);
    REQUIRE(fixed_lines.size() == 5);  // header + 1 rod + 3 summary comments
    CHECK(fixed_lines[0] == "k,omega_i,omega_f,omega_b,T_k,t_cum,v_k");
    CHECK(fixed_lines[2] == "# converged_at=1");
    CHECK(fixed_lines[3].rfind("# v_closed=", 0) == 0);
    CHECK(fixed_lines[4].rfind("# v_last=", 0) == 0);
    const double v_closed = std::stod(fixed_lines[3].substr(std::string("# v_closed=").size()));
    CHECK(v_closed == doctest::Approx(5.38237488799757).epsilon(1e-12));

    const CliResult slow =
        run_cli("simulate " + kRefFlags + " --omega1 1 --max-rods 30 --tol 1e-9");
    REQUIRE(slow.exit_code == 0);
    const auto slow_lines = lines_of(slow.out);
    REQUIRE(slow_lines.size() == 34);  // header + 30 rods + 3 summary comments
    CHECK(slow_lines[31] == "# converged_at=none");

    // speeds increase rod by rod for a slow launch
    double prev_v = 0.0;
    for (std::size_t i = 1; i <= 30; ++i) {
        const auto fields = split_csv(slow_lines[i]);
        REQUIRE(fields.size() == 7);
        CHECK(fields[0] == std::to_string(i));
        const double v_k = std::stod(fields[6]);
        if (i > 1) CHECK(v_k > prev_v);
        prev_v = v_k;
    }
}

TEST_CASE("cli simulate: json summary block") {
    const CliResult res = run_cli("simulate " + kRefFlags +
                                  " --omega1 1 --max-rods 5 --tol 1e-9 --format json");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    REQUIRE(doc["rows"].size() == 5);
    CHECK(doc["meta"]["command"] == "simulate");
    CHECK(doc["meta"]["summary"]["converged_at"].is_null());
    CHECK(doc["meta"]["summary"]["v_closed"].get<double>() ==
          doctest::Approx(5.38237488799757).epsilon(1e-12));
    for (const char* key : {"k", "omega_i", "omega_f", "omega_b", "T_k", "t_cum", "v_k"}) {
        CHECK(doc["rows"][0].contains(key));
    }
}

TEST_CASE("cli simulate: validation failures exit with 2") {
    CHECK(run_cli("simulate " + kRefFlags + " --omega1 0").exit_code == 2);
    CHECK(run_cli("simulate " + kRefFlags + " --omega1 -1").exit_code == 2);
    CHECK(run_cli("simulate " + kRefFlags + " --omega1 1 --max-rods 0").exit_code == 2);
    CHECK(run_cli("simulate " + kRefFlags + " --omega1 1 --tol 0").exit_code == 2);
    CHECK(run_cli("simulate --length 1 --spacing 0.5 --gravity 0 --omega1 1").exit_code == 2);
}

TEST_CASE("cli asymptotics: default points and error decay") {
    for (const std::string regime : {"close", "wide"}) {
        const CliResult res = run_cli("asymptotics --regime " + regime);
        REQUIRE(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        REQUIRE(lines.size() == 4);
        CHECK(lines[0] == "x,G_exact,G_asymptotic,rel_error");
        double prev = 1e300;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto fields = split_csv(lines[i]);
            REQUIRE(fields.size() == 4);
            const double rel_error = std::stod(fields[3]);
            CHECK(rel_error > 0.0);
            CHECK(rel_error < prev);
            prev = rel_error;
        }
    }
}

TEST_CASE("cli asymptotics: explicit points and regime validation") {
    const CliResult res = run_cli("asymptotics --regime wide --points 0.9,0.99,0.999");
    REQUIRE(res.exit_code == 0);
    REQUIRE(lines_of(res.out).size() == 4);

    CHECK(run_cli("asymptotics --regime wide --points 0.3").exit_code == 2);
    CHECK(run_cli("asymptotics --regime close --points 0").exit_code == 2);
    CHECK(run_cli("asymptotics --regime sideways").exit_code == 2);
    CHECK(run_cli("asymptotics").exit_code == 2);
}

TEST_CASE("cli: --out redirects the document") {
    std::remove("cli_out_test.csv");
    const CliResult res = run_cli("speed " + kRefFlags + " --out cli_out_test.csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.empty());
    const CliResult direct = run_cli("speed " + kRefFlags);
    CHECK(slurp("cli_out_test.csv") == direct.out);
    std::remove("cli_out_test.csv");

    CHECK(run_cli("speed " + kRefFlags + " --out /nonexistent_dir_zz/x.csv").exit_code == 2);
}
