/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file stirling.hpp
 * @brief The eight Stirling-style number families, each as exact λ-polynomials.
 *
 * Families and their exponential generating functions ((1/k!) B(t)^k with
 * coefficients read off t^n/n!):
 *
 *   S1    signed first kind            B = log(1+t)
 *   S1U   unsigned first kind          B = log(1/(1-t))
 *   S2    second kind                  B = e^t - 1
 *   DS1   degenerate first kind        B = log_λ(1+t) = (1/λ)((1+t)^λ - 1)
 *   DS2   degenerate second kind       B = e_λ(t) - 1
 *   NS1   new-type degenerate 1st      B = log(1 + (1/λ)log(1+λt))
 *   NS1U  unsigned new-type 1st        B = log(1/(1 + (1/λ)log(1-λt)))
 *   NS2   new-type degenerate 2nd      B = (1/λ)(e^{λ(e^t-1)} - 1)
 *
 * Every family also has a closed recurrence/convolution route:
 * NS1U(n,k) = sum_m λ^{n-m} S1U(n,m) S1U(m,k) and
 * NS2(n,k)  = sum_m λ^{m-k} S2(m,k) S2(n,m); the generating-function route
 * exists as an independent oracle for it.
 */

#include "stirnum/lambda_poly.hpp"
#include "stirnum/series.hpp"

#include <string>
#include <vector>

namespace stirnum {

enum class Family { S1, S1U, S2, DS1, DS2, NS1, NS1U, NS2 };

/// Canonical lowercase id ("s1", "ns1u", ...); inverse throws
/// std::invalid_argument on unknown names.
std::string family_id(Family f);
Family family_from_id(const std::string& id);
const std::vector<Family>& all_families();

// Classical triangles (memoized internally; values are integral Rationals).
Rational stirling1_signed(int n, int k);
Rational stirling1_unsigned(int n, int k);
Rational stirling2(int n, int k);

/// log_λ(1+t) truncated at `order`; the coefficient of t^n/n! is the
/// λ-polynomial prod_{i=1}^{n-1}(λ-i).
PolySeries degenerate_log_series(int order);

/// e_λ(t) - 1 truncated at `order`; t^n/n! coefficient is
/// (1)_{n,λ} = prod_{i=0}^{n-1}(1-iλ).
PolySeries degenerate_exp_minus_one_series(int order);

// t-valuation-1 generators (the k = 1 case of each B(t) above).
PolySeries new_stirling1_generator(int order);           // NS1
PolySeries new_stirling1_unsigned_generator(int order);  // NS1U
PolySeries new_stirling2_generator(int order);           // NS2

// Degenerate families, extracted from the generating functions.
LambdaPoly degenerate_stirling1(int n, int k);
LambdaPoly degenerate_stirling2(int n, int k);

// New-type first kind: convolution (fast path) and GF expansion (oracle).
LambdaPoly new_stirling1_unsigned_conv(int n, int k);
LambdaPoly new_stirling1_unsigned_gf(int n, int k, int order);
LambdaPoly new_stirling1_signed(int n, int k);

// New-type second kind, same dual routes.
LambdaPoly new_stirling2_conv(int n, int k);
LambdaPoly new_stirling2_gf(int n, int k, int order);

/// Lower-triangular table of one family for 0 <= k <= n <= max_n.
class StirlingTriangle {
public:
    StirlingTriangle(Family family, int max_n, std::vector<std::vector<LambdaPoly>> entries);

    Family family() const { return family_; }
    int max_n() const { return max_n_; }
    const LambdaPoly& at(int n, int k) const;  // throws std::out_of_range

private:
    Family family_;
    int max_n_;
    std::vector<std::vector<LambdaPoly>> entries_;
};

/// Builds via the recurrence/convolution route and validates the boundary
/// and integrality invariants of the family.
StirlingTriangle build_triangle(Family family, int max_n);

/// Independent route: expands (1/k!) B(t)^k column by column. `order` must
/// be at least max_n (checks use max_n + 2 to catch truncation slips).
StirlingTriangle build_triangle_gf(Family family, int max_n, int order);

}  // namespace stirnum
