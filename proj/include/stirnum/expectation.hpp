/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file expectation.hpp
 * @brief Moments of S_k = U_1 X_1 + ... + U_k X_k, exactly and by Monte Carlo.
 *
 * U_i are uniform on (0,1), X_i exponential with rate 1, all independent.
 * The moment generating function E[e^{t S_k}] = (-log(1-t)/t)^k yields the
 * exact power moments; the degenerate analogue
 *   E[e_λ^{S_k}(t)] = ((1/p) log(1/(1-p)))^k  with  p = (1/λ)log(1+λt)
 * yields E[(S_k)_{n,λ}] as exact λ-polynomials. The Monte Carlo estimator
 * realizes the same expectations by simulation and reports a z-score against
 * the exact value.
 */

#include "stirnum/lambda_poly.hpp"
#include "stirnum/rational.hpp"
#include "stirnum/series.hpp"

#include <cstdint>

namespace stirnum {

/// E[S_k^j], exact. Single-factor moments are E[(UX)^j] = j!/(j+1).
Rational exact_power_moment(int k, int j);

/// The series sum_l E[(S_k)_{l,λ}] t^l / l! truncated at `order`.
PolySeries degenerate_moment_series(int k, int order);

/// E[(S_k)_{n,λ}] as a λ-polynomial; requires order >= n.
LambdaPoly exact_degenerate_moment(int k, int n, int order);

/// Independent route: E[(S_k)_{n,λ}] = sum_j S_1(n,j) λ^{n-j} E[S_k^j].
LambdaPoly degenerate_moment_from_power(int k, int n);

/// sum_{m=k}^{n} λ^{m-k} C(n,m) S_1(m,k) E[(S_k)_{n-m,λ}]; equals the
/// unsigned new-type first-kind value with λ replaced by -λ.
LambdaPoly theorem22_rhs(int n, int k);

/// Counter-based random stream: draw d from seed s is a fixed bijective mix
/// of s + d * 2^64/φ, so any prefix/partition of the draw index space is
/// reproducible independently of how work is scheduled.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t start_index = 0)
        : seed_(seed), index_(start_index) {}

    std::uint64_t next_u64();
    /// Uniform on the open interval (0,1); never returns an endpoint.
    double uniform_open01();
    /// Uniform on [0,1).
    double uniform_halfopen01();

private:
    std::uint64_t seed_;
    std::uint64_t index_;
};

/// One draw of S_k; consumes exactly 2k values from the stream.
double sample_S_k(int k, CounterRng& rng);

struct McConfig {
    int k = 1;
    int n = 0;
    double lambda_value = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint32_t chunks = 1;

    /// Throws std::invalid_argument unless k >= 1, n >= 0, samples >= 2,
    /// chunks >= 1 and lambda_value is finite.
    void validate() const;
};

struct McReport {
    double estimate = 0.0;
    double std_error = 0.0;
    double exact_value = 0.0;
    double z_score = 0.0;
    std::uint64_t samples_used = 0;

    bool operator==(const McReport&) const = default;
};

/// Monte Carlo estimate of E[(S_k)_{n,λ}] at λ = cfg.lambda_value against the
/// exact series oracle. Samples are partitioned into fixed 65536-sample
/// blocks whose substreams derive only from (seed, block); cfg.chunks sets
/// the number of worker threads, so the report is bit-identical for any
/// chunk count.
McReport mc_estimate_degenerate_moment(const McConfig& cfg);

/// Monte Carlo check of the first-kind moment identity: estimates the finite
/// sum with common random numbers (the whole summand is evaluated per
/// sample, so term correlations are handled exactly) and compares against
/// the λ -> -λ convolution value.
McReport mc_check_theorem22(int n, int k, double lambda_value, std::uint64_t samples,
                            std::uint64_t seed, std::uint32_t chunks = 1);

}  // namespace stirnum
