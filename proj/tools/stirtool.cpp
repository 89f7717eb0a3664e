/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end. Everything substantive happens behind the C API;
// this binary only parses flags, prints, and maps outcomes to exit codes:
//   0  success / check passed / |z| <= 5
//   1  check failed or z threshold exceeded
//   2  usage error

#include "stirnum.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

namespace {

constexpr double kZThreshold = 5.0;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { stirnum_string_free(s); }
};

int fail_usage(stirnum_status status, const std::string& what) {
    std::fprintf(stderr, "stirtool: %s: %s\n", what.c_str(), stirnum_status_str(status));
    return 2;
}

int run_table(const std::string& family, int max_n, const std::string& format, int cap) {
    if (max_n < 0 || max_n > cap) {
        std::fprintf(stderr, "stirtool: --max-n must be in [0, %d]\n", cap);
        return 2;
    }
    StringGuard text;
    stirnum_status st = stirnum_table_render(family.c_str(), max_n, format.c_str(), &text.s);
    if (st != STIRNUM_OK) {
        return fail_usage(st, "table");
    }
    std::fputs(text.s, stdout);
    if (format == "json") {
        std::fputc('\n', stdout);
    }
    return 0;
}

int run_check(const std::string& name, int max_n) {
    int passed = 0;
    StringGuard json;
    stirnum_status st = stirnum_check_run(name.c_str(), max_n, &passed, &json.s);
    if (st != STIRNUM_OK) {
        return fail_usage(st, "check");
    }
    std::printf("%s\n", json.s);
    std::fprintf(stderr, "stirtool: check %s max_n=%d: %s\n", name.c_str(), max_n,
                 passed ? "pass" : "FAIL");
    return passed ? 0 : 1;
}

int run_mc(const stirnum_mc_config& cfg) {
    stirnum_mc_report rep;
    StringGuard json;
    stirnum_status st = stirnum_mc_moment(&cfg, &rep, &json.s);
    if (st != STIRNUM_OK) {
        return fail_usage(st, "mc");
    }
    std::printf("%s\n", json.s);
    std::fprintf(stderr,
                 "stirtool: mc k=%d n=%d lambda=%.17g: estimate=%.17g exact=%.17g "
                 "std_error=%.17g z=%.17g\n",
                 cfg.k, cfg.n, cfg.lambda, rep.estimate, rep.exact_value, rep.std_error,
                 rep.z_score);
    return std::abs(rep.z_score) <= kZThreshold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo computation of degenerate Stirling number families"};
    app.require_subcommand(1);

    const std::vector<std::string> families = {"s1", "s1u", "s2", "ds1",
                                               "ds2", "ns1", "ns1u", "ns2"};
    const std::vector<std::string> formats = {"csv", "tsv", "json", "latex"};
    const std::vector<std::string> checks = {"theorem-2-1",   "theorem-3-1", "theorem-2-2",
                                             "inversion",     "gf-vs-conv",  "limit-lambda0",
                                             "adell-lekuona"};

    std::string family, format = "csv", check_name;
    int table_max_n = 0, check_max_n = 0, cap = 64;

    CLI::App* table = app.add_subcommand("table", "Emit one family's triangle");
    table->add_option("--family", family, "number family")
        ->required()
        ->check(CLI::IsMember(families));
    table->add_option("--max-n", table_max_n, "largest row index")->required();
    table->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    table->add_option("--cap", cap, "safety cap on --max-n");

    CLI::App* check = app.add_subcommand("check", "Run a named identity check");
    check->add_option("--name", check_name, "check name")
        ->required()
        ->check(CLI::IsMember(checks));
    check->add_option("--max-n", check_max_n, "largest row index")
        ->required()
        ->check(CLI::Range(1, 256));

    stirnum_mc_config cfg{1, 0, 0.0, 0, 0, 1};
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimate of a degenerate moment");
    mc->add_option("--k", cfg.k, "number of U*X summands")->required()->check(CLI::Range(1, 64));
    mc->add_option("--n", cfg.n, "degenerate moment order")
        ->required()
        ->check(CLI::Range(0, 64));
    mc->add_option("--lambda", cfg.lambda,
                   "lambda evaluation point (numeric sampling is supported on [-2, 2])")
        ->required()
        ->check(CLI::Range(-2.0, 2.0));
    mc->add_option("--samples", cfg.samples, "sample count")->required();
    mc->add_option("--seed", cfg.seed, "random seed")->required();
    mc->add_option("--chunks", cfg.chunks, "worker threads (does not change the estimate)")
        ->check(CLI::Range(1, 4096));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (table->parsed()) {
        return run_table(family, table_max_n, format, cap);
    }
    if (check->parsed()) {
        return run_check(check_name, check_max_n);
    }
    return run_mc(cfg);
}
