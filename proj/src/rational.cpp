/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace stirnum {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) {
        throw std::domain_error("rational: division by zero");
    }
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Rational::reciprocal() const {
    if (num_ == 0) {
        throw std::domain_error("rational: reciprocal of zero");
    }
    return Rational(den_, num_);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

Rational Rational::from_double_exact(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational: non-finite double");
    }
    if (x == 0.0) {
        return Rational();
    }
    int exp = 0;
    double m = std::frexp(x, &exp);       // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact, fits 54 bits
    exp -= 53;
    BigInt num(mant);
    if (exp >= 0) {
        return Rational(num << exp);
    }
    return Rational(std::move(num), BigInt(1) << -exp);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return Rational(std::move(f));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) {
        return Rational();
    }
    if (k > n - k) {
        k = n - k;
    }
    // Running product stays integral: after i steps it equals C(n, i).
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return Rational(std::move(c));
}

Rational ring_invert(const Rational& x) {
    return x.reciprocal();
}

}  // namespace stirnum
