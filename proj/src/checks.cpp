/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/checks.hpp"

#include "stirnum/expectation.hpp"
#include "stirnum/series.hpp"
#include "stirnum/stirling.hpp"

#include <functional>
#include <stdexcept>

namespace stirnum {

namespace {

class Verdict {
public:
    bool record(int n, int k, const LambdaPoly& expected, const LambdaPoly& actual) {
        if (expected == actual) {
            return true;
        }
        if (!failure_) {
            failure_ = CheckFailure{n, k, expected.str(), actual.str()};
        }
        return false;
    }

    const std::optional<CheckFailure>& failure() const { return failure_; }

private:
    std::optional<CheckFailure> failure_;
};

void check_dual_route(Family conv_family, int max_n, Verdict& v) {
    const StirlingTriangle conv = build_triangle(conv_family, max_n);
    const StirlingTriangle gf = build_triangle_gf(conv_family, max_n, max_n + 2);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (!v.record(n, k, conv.at(n, k), gf.at(n, k))) {
                return;
            }
        }
    }
}

void check_theorem22(int max_n, Verdict& v) {
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            const LambdaPoly expected = new_stirling1_unsigned_conv(n, k).substitute_negated();
            if (!v.record(n, k, expected, theorem22_rhs(n, k))) {
                return;
            }
        }
    }
}

void check_inversion(int max_n, Verdict& v) {
    const StirlingTriangle first = build_triangle(Family::NS1, max_n);
    const StirlingTriangle second = build_triangle(Family::NS2, max_n);
    const LambdaPoly one(Rational(1));
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            LambdaPoly ba, ab;
            for (int m = k; m <= n; ++m) {
                ba += second.at(n, m) * first.at(m, k);
                ab += first.at(n, m) * second.at(m, k);
            }
            const LambdaPoly delta = n == k ? one : LambdaPoly();
            if (!v.record(n, k, delta, ba) || !v.record(n, k, delta, ab)) {
                return;
            }
        }
    }
    // The generators themselves are compositional inverses.
    const int order = max_n + 1;
    const PolySeries t = PolySeries::identity(order);
    const PolySeries f = new_stirling1_generator(order);
    const PolySeries g = new_stirling2_generator(order);
    const PolySeries fg = compose(f, g);
    const PolySeries gf = compose(g, f);
    for (int i = 0; i <= order; ++i) {
        if (!v.record(i, 0, t.coeff(i), fg.coeff(i)) || !v.record(i, 0, t.coeff(i), gf.coeff(i))) {
            return;
        }
    }
}

void check_limit_lambda0(int max_n, Verdict& v) {
    const Rational zero;
    struct Pair {
        Family degenerate;
        std::function<Rational(int, int)> classical;
    };
    const Pair pairs[] = {
        {Family::NS1U, stirling1_unsigned},
        {Family::NS2, stirling2},
        {Family::DS1, stirling1_signed},
        {Family::DS2, stirling2},
    };
    for (const Pair& pr : pairs) {
        const StirlingTriangle tri = build_triangle(pr.degenerate, max_n);
        for (int n = 0; n <= max_n; ++n) {
            for (int k = 0; k <= n; ++k) {
                const LambdaPoly& p = tri.at(n, k);
                if (!v.record(n, k, LambdaPoly(pr.classical(n, k)), LambdaPoly(p.eval(zero)))) {
                    return;
                }
                const bool new_type = pr.degenerate == Family::NS1U || pr.degenerate == Family::NS2;
                if (new_type && !p.is_zero() &&
                    !v.record(n, k, LambdaPoly(p.constant_term()), LambdaPoly(p.leading_coeff()))) {
                    return;
                }
            }
        }
    }
}

void check_adell_lekuona(int max_n, Verdict& v) {
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            const Rational lhs = binomial(n, k) * exact_power_moment(k, n - k);
            if (!v.record(n, k, LambdaPoly(stirling1_unsigned(n, k)), LambdaPoly(lhs))) {
                return;
            }
        }
    }
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "theorem-2-1", "theorem-3-1", "theorem-2-2",   "inversion",
        "gf-vs-conv",  "limit-lambda0", "adell-lekuona",
    };
    return names;
}

CheckResult run_check(const std::string& name, int max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("checks: max_n must be >= 1");
    }
    Verdict v;
    if (name == "theorem-2-1") {
        check_dual_route(Family::NS1U, max_n, v);
    } else if (name == "theorem-3-1") {
        check_dual_route(Family::NS2, max_n, v);
    } else if (name == "gf-vs-conv") {
        check_dual_route(Family::NS1U, max_n, v);
        if (!v.failure()) {
            check_dual_route(Family::NS2, max_n, v);
        }
    } else if (name == "theorem-2-2") {
        check_theorem22(max_n, v);
    } else if (name == "inversion") {
        check_inversion(max_n, v);
    } else if (name == "limit-lambda0") {
        check_limit_lambda0(max_n, v);
    } else if (name == "adell-lekuona") {
        check_adell_lekuona(max_n, v);
    } else {
        throw std::invalid_argument("checks: unknown check '" + name + "'");
    }

    CheckResult result;
    result.name = name;
    result.max_n = max_n;
    result.first_failure = v.failure();
    result.passed = !result.first_failure.has_value();
    return result;
}

}  // namespace stirnum
