/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file checks.hpp
 * @brief Named identity checks over the number families.
 *
 * Available checks:
 *   theorem-2-1    first-kind convolution vs. its generating function
 *   theorem-3-1    second-kind convolution vs. its generating function
 *   theorem-2-2    moment-sum identity vs. the λ -> -λ first-kind values
 *   inversion      the two new-type triangles are mutually inverse matrices,
 *                  and their k=1 generators compose to t (derived identity)
 *   gf-vs-conv     both dual-route comparisons at once
 *   limit-lambda0  constant terms reduce to the classical numbers; leading
 *                  coefficient equals the constant term for the new types
 *   adell-lekuona  C(n,k) E[S_k^{n-k}] equals the unsigned first-kind number
 */

#include <optional>
#include <string>
#include <vector>

namespace stirnum {

struct CheckFailure {
    int n = 0;
    int k = 0;
    std::string expected;
    std::string actual;
};

struct CheckResult {
    std::string name;
    int max_n = 0;
    bool passed = false;
    std::optional<CheckFailure> first_failure;
};

const std::vector<std::string>& check_names();

/// Runs one named check up to max_n (>= 1). Throws std::invalid_argument for
/// an unknown name or a bad max_n.
CheckResult run_check(const std::string& name, int max_n);

}  // namespace stirnum
