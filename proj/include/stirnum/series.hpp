/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in t over Rational or LambdaPoly.
 *
 * Coefficients are ORDINARY (coefficient of t^n); the exponential-generating-
 * function convention t^n/n! enters only through egf_coeff(). Binary
 * operations on series of different orders truncate to the minimum order.
 *
 * The ring parameter R needs: default construction (zero), construction from
 * Rational, +, -, *, ==, is_zero(), and an ADL-visible ring_invert().
 */

#include "stirnum/lambda_poly.hpp"
#include "stirnum/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirnum {

template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(check_order(order)), coeffs_(order + 1) {}

    TruncatedSeries(int order, std::vector<R> coeffs) : order_(check_order(order)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) > order_ + 1) {
            throw std::invalid_argument("series: more coefficients than order+1");
        }
        coeffs_.resize(order_ + 1);
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = R(Rational(1));
        return s;
    }

    /// The series t (truncation at order 0 leaves only the zero term).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.set_coeff(1, R(Rational(1)));
        }
        return s;
    }

    int order() const { return order_; }

    const R& coeff(int n) const {
        if (n < 0 || n > order_) {
            throw std::out_of_range("series: coefficient index beyond truncation order");
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, R value) {
        if (n < 0 || n > order_) {
            throw std::out_of_range("series: coefficient index beyond truncation order");
        }
        coeffs_[static_cast<std::size_t>(n)] = std::move(value);
    }

    bool is_zero() const {
        for (const R& c : coeffs_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const TruncatedSeries& rhs) const = default;

    TruncatedSeries operator+(const TruncatedSeries& rhs) const {
        const int n = std::min(order_, rhs.order_);
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            r.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
        }
        return r;
    }

    TruncatedSeries operator-(const TruncatedSeries& rhs) const {
        const int n = std::min(order_, rhs.order_);
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            r.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
        }
        return r;
    }

    /// Cauchy product truncated to the minimum order.
    TruncatedSeries operator*(const TruncatedSeries& rhs) const {
        const int n = std::min(order_, rhs.order_);
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (coeffs_[i].is_zero()) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (rhs.coeffs_[j].is_zero()) {
                    continue;
                }
                r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return r;
    }

    /// Coefficient-wise scaling by a ring element.
    TruncatedSeries scaled(const R& s) const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i) {
            r.coeffs_[i] = coeffs_[i] * s;
        }
        return r;
    }

private:
    int order_;
    std::vector<R> coeffs_;

    static int check_order(int order) {
        if (order < 0) {
            throw std::invalid_argument("series: negative truncation order");
        }
        return order;
    }

    template <class T>
    friend TruncatedSeries<T> pow(const TruncatedSeries<T>& f, unsigned k);
    template <class T>
    friend TruncatedSeries<T> inverse(const TruncatedSeries<T>& f);
    template <class T>
    friend TruncatedSeries<T> shift_down(const TruncatedSeries<T>& f, int v);
};

/// f^k by repeated squaring, truncated at f's order. f^0 == 1.
template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& f, unsigned k) {
    TruncatedSeries<R> result = TruncatedSeries<R>::one(f.order());
    TruncatedSeries<R> base = f;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1u;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

/// Multiplicative inverse: f * inverse(f) == 1 + O(t^{N+1}). The constant
/// term must be invertible in the ring.
template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& f) {
    R inv0 = ring_invert(f.coeff(0));  // throws domain_error when singular
    TruncatedSeries<R> r(f.order());
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= f.order(); ++n) {
        R acc;
        for (int i = 1; i <= n; ++i) {
            if (!f.coeffs_[i].is_zero()) {
                acc += f.coeffs_[i] * r.coeffs_[n - i];
            }
        }
        r.coeffs_[n] = -(inv0 * acc);
    }
    return r;
}

/// log(1 + f) = sum_{m>=1} (-1)^{m-1} f^m / m. Requires zero constant term.
template <class R>
TruncatedSeries<R> log1p(const TruncatedSeries<R>& f) {
    if (!f.coeff(0).is_zero()) {
        throw std::domain_error("series: log of a series with nonzero constant term");
    }
    TruncatedSeries<R> result(f.order());
    TruncatedSeries<R> power = f;
    for (int m = 1; m <= f.order(); ++m) {
        if (power.is_zero()) {
            break;
        }
        result = result + power.scaled(R(Rational(m % 2 == 1 ? 1 : -1, m)));
        power = power * f;
    }
    return result;
}

/// exp(f) = sum_{m>=0} f^m / m!. Requires zero constant term.
template <class R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& f) {
    if (!f.coeff(0).is_zero()) {
        throw std::domain_error("series: exp of a series with nonzero constant term");
    }
    TruncatedSeries<R> result = TruncatedSeries<R>::one(f.order());
    TruncatedSeries<R> term = result;
    for (int m = 1; m <= f.order(); ++m) {
        term = (term * f).scaled(R(Rational(1, m)));
        if (term.is_zero()) {
            break;
        }
        result = result + term;
    }
    return result;
}

/// Horner composition outer(inner); inner must have zero constant term.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    if (!inner.coeff(0).is_zero()) {
        throw std::domain_error("series: composition with nonzero inner constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    TruncatedSeries<R> result(n);
    for (int i = n; i >= 0; --i) {
        result = result * inner;
        result.set_coeff(0, result.coeff(0) + outer.coeff(i));
    }
    return result;
}

/// Divide by t^v: g_n = f_{n+v}, order drops to N-v. The coefficients of
/// t^0..t^{v-1} must all be zero.
template <class R>
TruncatedSeries<R> shift_down(const TruncatedSeries<R>& f, int v) {
    if (v < 0 || v > f.order()) {
        throw std::out_of_range("series: shift exceeds truncation order");
    }
    for (int i = 0; i < v; ++i) {
        if (!f.coeff(i).is_zero()) {
            throw std::domain_error("series: shift below the series valuation");
        }
    }
    TruncatedSeries<R> r(f.order() - v);
    for (int i = 0; i <= r.order(); ++i) {
        r.coeffs_[i] = f.coeffs_[i + v];
    }
    return r;
}

/// n! times the ordinary coefficient of t^n.
template <class R>
R egf_coeff(const TruncatedSeries<R>& f, int n) {
    if (n < 0 || n > f.order()) {
        throw std::out_of_range("series: EGF extraction beyond truncation order");
    }
    return f.coeff(n) * R(factorial(static_cast<unsigned>(n)));
}

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<LambdaPoly>;

}  // namespace stirnum
