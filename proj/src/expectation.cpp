/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/expectation.hpp"

#include "stirnum/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace stirnum {

namespace {

void require_k_positive(int k) {
    if (k < 1) {
        throw std::invalid_argument("expectation: k must be >= 1");
    }
}

}  // namespace

Rational exact_power_moment(int k, int j) {
    require_k_positive(k);
    if (j < 0) {
        throw std::invalid_argument("expectation: negative moment order");
    }
    // (-log(1-t)/t)^k over Rational coefficients.
    RationalSeries minus_t(j + 1);
    minus_t.set_coeff(1, Rational(-1));
    RationalSeries log_part = shift_down(log1p(minus_t).scaled(Rational(-1)), 1);
    return egf_coeff(pow(log_part, static_cast<unsigned>(k)), j);
}

PolySeries degenerate_moment_series(int k, int order) {
    require_k_positive(k);
    // p = (1/λ)log(1+λt), ordinary coefficients (-1)^{m-1} λ^{m-1}/m.
    PolySeries p(order + 1);
    for (int m = 1; m <= order + 1; ++m) {
        p.set_coeff(m, LambdaPoly::monomial(m - 1, Rational(m % 2 == 1 ? 1 : -1, m)));
    }
    const PolySeries unit = shift_down(p, 1);                               // p/t
    const PolySeries log_part = log1p(p.scaled(LambdaPoly(Rational(-1))))  // log(1-p)
                                    .scaled(LambdaPoly(Rational(-1)));     // log(1/(1-p))
    const PolySeries log_unit = shift_down(log_part, 1);
    return pow(inverse(unit) * log_unit, static_cast<unsigned>(k));
}

LambdaPoly exact_degenerate_moment(int k, int n, int order) {
    if (n < 0) {
        throw std::invalid_argument("expectation: negative moment order");
    }
    if (order < n) {
        throw std::out_of_range("expectation: truncation order below requested n");
    }
    return egf_coeff(degenerate_moment_series(k, order), n);
}

LambdaPoly degenerate_moment_from_power(int k, int n) {
    require_k_positive(k);
    if (n < 0) {
        throw std::invalid_argument("expectation: negative moment order");
    }
    LambdaPoly acc;
    for (int j = 0; j <= n; ++j) {
        Rational c = stirling1_signed(n, j) * exact_power_moment(k, j);
        acc += LambdaPoly::monomial(n - j, std::move(c));
    }
    return acc;
}

LambdaPoly theorem22_rhs(int n, int k) {
    if (k < 1 || n < k) {
        throw std::invalid_argument("expectation: requires n >= k >= 1");
    }
    const PolySeries moments = degenerate_moment_series(k, n - k);
    LambdaPoly acc;
    for (int m = k; m <= n; ++m) {
        Rational c = binomial(n, m) * stirling1_signed(m, k);
        acc += LambdaPoly::monomial(m - k, std::move(c)) * egf_coeff(moments, n - m);
    }
    return acc;
}

// SplitMix64 finalizer over the Weyl sequence seed + i*golden.
std::uint64_t CounterRng::next_u64() {
    ++index_;
    std::uint64_t z = seed_ + index_ * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::uniform_halfopen01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double sample_S_k(int k, CounterRng& rng) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
        const double u = rng.uniform_open01();
        const double x = -std::log1p(-rng.uniform_halfopen01());  // inverse CDF
        s += u * x;
    }
    return s;
}

void McConfig::validate() const {
    if (k < 1 || n < 0 || samples < 2 || chunks < 1 || !std::isfinite(lambda_value)) {
        throw std::invalid_argument("expectation: invalid Monte Carlo configuration");
    }
}

namespace {

constexpr std::uint64_t kBlockSamples = 1u << 16;

double falling_factorial(double s, int n, double lambda) {
    double y = 1.0;
    for (int j = 0; j < n; ++j) {
        y *= s - j * lambda;
    }
    return y;
}

struct BlockStats {
    double sum = 0.0;
    double sumsq = 0.0;
};

// Runs `eval` over every sample, block by block. Block b covers the sample
// range [b*kBlockSamples, ...) and its stream starts at the absolute draw
// index of its first sample, so results do not depend on the worker count.
template <class SampleFn>
McReport run_blocks(std::uint64_t samples, std::uint64_t seed, std::uint32_t chunks,
                    int draws_per_sample, double exact, SampleFn eval) {
    const std::uint64_t nblocks = (samples + kBlockSamples - 1) / kBlockSamples;
    std::vector<BlockStats> stats(nblocks);

    auto worker = [&](std::uint64_t first_block, std::uint64_t stride) {
        for (std::uint64_t b = first_block; b < nblocks; b += stride) {
            const std::uint64_t begin = b * kBlockSamples;
            const std::uint64_t end = std::min(begin + kBlockSamples, samples);
            CounterRng rng(seed, begin * static_cast<std::uint64_t>(draws_per_sample));
            BlockStats st;
            for (std::uint64_t i = begin; i < end; ++i) {
                const double y = eval(rng);
                st.sum += y;
                st.sumsq += y * y;
            }
            stats[b] = st;
        }
    };

    const std::uint64_t nworkers = std::min<std::uint64_t>(chunks, nblocks);
    if (nworkers <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(nworkers);
        for (std::uint64_t w = 0; w < nworkers; ++w) {
            threads.emplace_back(worker, w, nworkers);
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    double sum = 0.0;
    double sumsq = 0.0;
    for (const BlockStats& st : stats) {  // fixed reduction order
        sum += st.sum;
        sumsq += st.sumsq;
    }

    McReport rep;
    rep.samples_used = samples;
    rep.exact_value = exact;
    const double m = static_cast<double>(samples);
    rep.estimate = sum / m;
    double var = (sumsq - sum * sum / m) / (m - 1.0);
    if (var < 0.0) {
        var = 0.0;
    }
    rep.std_error = std::sqrt(var / m);
    if (rep.std_error > 0.0) {
        rep.z_score = (rep.estimate - rep.exact_value) / rep.std_error;
    } else {
        rep.z_score = rep.estimate == rep.exact_value
                          ? 0.0
                          : std::copysign(std::numeric_limits<double>::infinity(),
                                          rep.estimate - rep.exact_value);
    }
    return rep;
}

}  // namespace

McReport mc_estimate_degenerate_moment(const McConfig& cfg) {
    cfg.validate();
    if (cfg.n == 0) {
        // Constant integrand: (s)_{0,λ} = 1 for every draw.
        McReport rep;
        rep.estimate = 1.0;
        rep.std_error = 0.0;
        rep.exact_value = 1.0;
        rep.z_score = 0.0;
        rep.samples_used = cfg.samples;
        return rep;
    }
    const Rational lambda_exact = Rational::from_double_exact(cfg.lambda_value);
    const double exact =
        exact_degenerate_moment(cfg.k, cfg.n, cfg.n).eval(lambda_exact).to_double();
    const int k = cfg.k;
    const int n = cfg.n;
    const double lam = cfg.lambda_value;
    return run_blocks(cfg.samples, cfg.seed, cfg.chunks, 2 * k, exact, [=](CounterRng& rng) {
        return falling_factorial(sample_S_k(k, rng), n, lam);
    });
}

McReport mc_check_theorem22(int n, int k, double lambda_value, std::uint64_t samples,
                            std::uint64_t seed, std::uint32_t chunks) {
    if (k < 1 || n < k) {
        throw std::invalid_argument("expectation: requires n >= k >= 1");
    }
    McConfig probe;
    probe.k = k;
    probe.n = n;
    probe.lambda_value = lambda_value;
    probe.samples = samples;
    probe.seed = seed;
    probe.chunks = chunks;
    probe.validate();

    const Rational lambda_exact = Rational::from_double_exact(lambda_value);
    const double exact =
        new_stirling1_unsigned_conv(n, k).substitute_negated().eval(lambda_exact).to_double();

    // Constant prefactors λ^{m-k} C(n,m) S_1(m,k), evaluated once.
    std::vector<double> coeff(n + 1, 0.0);
    for (int m = k; m <= n; ++m) {
        const Rational c = binomial(n, m) * stirling1_signed(m, k);
        coeff[m] = c.to_double() * std::pow(lambda_value, m - k);
    }

    const double lam = lambda_value;
    return run_blocks(samples, seed, chunks, 2 * k, exact, [=, &coeff](CounterRng& rng) {
        const double s = sample_S_k(k, rng);
        double y = 0.0;
        for (int m = k; m <= n; ++m) {
            y += coeff[m] * falling_factorial(s, n - m, lam);
        }
        return y;
    });
}

}  // namespace stirnum
