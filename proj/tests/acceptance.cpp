/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Acceptance suite. Each criterion prints one [PASS]/[FAIL] line together
// with its wall time and enforces its own time budget; the process exits
// nonzero when any criterion fails.

#include "stirnum.h"
#include "stirnum/checks.hpp"
#include "stirnum/expectation.hpp"
#include "stirnum/series.hpp"
#include "stirnum/stirling.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace stirnum;

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += detail.empty() ? "" : "; ";
        detail += "time budget exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, label.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++g_failures;
    }
}

std::string run_stirtool(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(STIRTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

using Table = std::map<std::pair<int, int>, std::vector<long long>>;

// Published first-kind values for n <= 6, ascending coefficients.
const Table kFirstKindTable = {
    {{2, 1}, {1, 1}},
    {{3, 1}, {2, 3, 2}},
    {{3, 2}, {3, 3}},
    {{4, 1}, {6, 12, 11, 6}},
    {{4, 2}, {11, 18, 11}},
    {{4, 3}, {6, 6}},
    {{5, 1}, {24, 60, 70, 50, 24}},
    {{5, 2}, {50, 110, 105, 50}},
    {{5, 3}, {35, 60, 35}},
    {{5, 4}, {10, 10}},
    {{6, 1}, {120, 360, 510, 450, 274, 120}},
    {{6, 2}, {274, 750, 935, 675, 274}},
    {{6, 3}, {225, 525, 510, 225}},
    {{6, 4}, {85, 150, 85}},
    {{6, 5}, {15, 15}},
};

// Published second-kind values for n <= 6, ascending coefficients.
const Table kSecondKindTable = {
    {{2, 1}, {1, 1}},
    {{3, 1}, {1, 3, 1}},
    {{3, 2}, {3, 3}},
    {{4, 1}, {1, 7, 6, 1}},
    {{4, 2}, {7, 18, 7}},
    {{4, 3}, {6, 6}},
    {{5, 1}, {1, 15, 25, 10, 1}},
    {{5, 2}, {15, 75, 70, 15}},
    {{5, 3}, {25, 60, 25}},
    {{5, 4}, {10, 10}},
    {{6, 1}, {1, 31, 90, 65, 15, 1}},
    {{6, 2}, {31, 270, 455, 225, 31}},
    {{6, 3}, {90, 390, 375, 90}},
    {{6, 4}, {65, 150, 65}},
    {{6, 5}, {15, 15}},
};

// Runs `stirtool table` and compares every entry (boundaries included)
// against the published list.
bool table_reproduction(const std::string& family, const Table& table, std::string& detail) {
    int exit_code = 0;
    const std::string out =
        run_stirtool("table --family " + family + " --max-n 6 --format json", exit_code);
    if (exit_code != 0) {
        detail = "stirtool exited with " + std::to_string(exit_code);
        return false;
    }
    const auto doc = nlohmann::json::parse(out);
    int seen = 0;
    for (const auto& entry : doc["entries"]) {
        const int n = entry["n"].get<int>();
        const int k = entry["k"].get<int>();
        std::vector<std::string> expected;
        if (n == k) {
            expected = {"1"};
        } else if (k == 0) {
            expected = {};
        } else {
            const auto it = table.find({n, k});
            if (it == table.end()) {
                detail = "unexpected entry (" + std::to_string(n) + "," + std::to_string(k) + ")";
                return false;
            }
            for (long long c : it->second) {
                expected.push_back(std::to_string(c));
            }
        }
        if (entry["coeffs"].get<std::vector<std::string>>() != expected) {
            detail = "mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            return false;
        }
        ++seen;
    }
    if (seen != 28) {
        detail = "expected 28 triangle entries, saw " + std::to_string(seen);
        return false;
    }
    return true;
}

bool mc_point(int k, int n, double lambda, std::uint64_t seed, std::uint32_t chunks,
              McReport& rep, std::string& detail) {
    McConfig cfg;
    cfg.k = k;
    cfg.n = n;
    cfg.lambda_value = lambda;
    cfg.samples = 1000000;
    cfg.seed = seed;
    cfg.chunks = chunks;
    rep = mc_estimate_degenerate_moment(cfg);
    if (std::abs(rep.z_score) > 5.0) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "(k=%d,n=%d,lambda=%g,seed=%llu): |z|=%g > 5", k, n,
                      lambda, static_cast<unsigned long long>(seed), std::abs(rep.z_score));
        detail = buf;
        return false;
    }
    return true;
}

struct McPoint {
    int k;
    int n;
    double lambda;
    std::uint64_t seed;
};

// Test points with their documented seeds (also listed in the README).
const std::vector<McPoint> kMcPoints = {
    {1, 1, 0.5, 42},
    {2, 3, 0.5, 7},
    {2, 5, 0.25, 1001},
    {3, 4, -0.5, 31337},
};

}  // namespace

int main() {
    criterion(1, "first-kind table reproduction (table --family ns1u --max-n 6)", 1.0,
              [](std::string& detail) { return table_reproduction("ns1u", kFirstKindTable, detail); });

    criterion(2, "second-kind table reproduction (table --family ns2 --max-n 6)", 1.0,
              [](std::string& detail) { return table_reproduction("ns2", kSecondKindTable, detail); });

    criterion(3, "dual-route equivalence (GF vs convolution, n <= 20)", 30.0,
              [](std::string& detail) {
                  const CheckResult r = run_check("gf-vs-conv", 20);
                  if (!r.passed) {
                      detail = "first failure at (" + std::to_string(r.first_failure->n) + "," +
                               std::to_string(r.first_failure->k) + ")";
                  }
                  return r.passed;
              });

    criterion(4, "moment-sum identity as exact polynomials (n <= 12)", 30.0,
              [](std::string& detail) {
                  for (int n = 1; n <= 12; ++n) {
                      for (int k = 1; k <= n; ++k) {
                          const LambdaPoly expected =
                              new_stirling1_unsigned_conv(n, k).substitute_negated();
                          if (theorem22_rhs(n, k) != expected) {
                              detail = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(5, "binomial-times-moment limit identity (n <= 10)", 5.0,
              [](std::string& detail) {
                  for (int n = 1; n <= 10; ++n) {
                      for (int k = 1; k <= n; ++k) {
                          if (binomial(n, k) * exact_power_moment(k, n - k) !=
                              stirling1_unsigned(n, k)) {
                              detail = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(6, "lambda->0 limits and leading coefficients (n <= 20)", 10.0,
              [](std::string& detail) {
                  const CheckResult r = run_check("limit-lambda0", 20);
                  if (!r.passed) {
                      detail = "first failure at (" + std::to_string(r.first_failure->n) + "," +
                               std::to_string(r.first_failure->k) + ")";
                  }
                  return r.passed;
              });

    criterion(7, "matrix inversion and generator composition (n <= 15, order 16)", 30.0,
              [](std::string& detail) {
                  const CheckResult r = run_check("inversion", 15);
                  if (!r.passed) {
                      detail = "matrix identity failed";
                      return false;
                  }
                  const PolySeries f = new_stirling1_generator(16);
                  const PolySeries g = new_stirling2_generator(16);
                  if (compose(f, g) != PolySeries::identity(16) ||
                      compose(g, f) != PolySeries::identity(16)) {
                      detail = "generator composition is not t + O(t^17)";
                      return false;
                  }
                  return true;
              });

    criterion(8, "monte carlo statistical suite (4 points, 1e6 samples)", 60.0,
              [](std::string& detail) {
                  for (const McPoint& p : kMcPoints) {
                      McReport rep;
                      if (!mc_point(p.k, p.n, p.lambda, p.seed, 1, rep, detail)) {
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "bit-identical reports across chunks in {1,4,16}", 120.0,
              [](std::string& detail) {
                  for (const McPoint& p : kMcPoints) {
                      McReport first, again;
                      std::string ignored;
                      if (!mc_point(p.k, p.n, p.lambda, p.seed, 1, first, detail)) {
                          return false;
                      }
                      for (std::uint32_t chunks : {1u, 4u, 16u}) {
                          if (!mc_point(p.k, p.n, p.lambda, p.seed, chunks, again, detail)) {
                              return false;
                          }
                          if (!(again == first)) {
                              detail = "report differs at chunks=" + std::to_string(chunks);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
