/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Every value is kept in canonical form:
 *   - denominator > 0 (sign carried by the numerator),
 *   - gcd(|numerator|, denominator) == 1,
 *   - zero is represented as 0/1.
 *
 * In canonical form, structural equality coincides with mathematical equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace stirnum {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    /// Exact division; throws std::domain_error on a zero divisor.
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const = default;
    bool operator<(const Rational& rhs) const { return num_ * rhs.den_ < rhs.num_ * den_; }
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator<=(const Rational& rhs) const { return !(rhs < *this); }
    bool operator>=(const Rational& rhs) const { return !(*this < rhs); }

    /// Reciprocal; throws std::domain_error on zero.
    Rational reciprocal() const;

    /// Decimal serialization: "p/q", or just "p" when the value is integral.
    std::string str() const;

    /// Nearest double (used only by the Monte Carlo layer).
    double to_double() const;

    /// Exact conversion of a finite double (every finite double is a
    /// dyadic rational). Throws std::invalid_argument on NaN/infinity.
    static Rational from_double_exact(double x);

private:
    BigInt num_;
    BigInt den_;

    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// Multiplicative inverse in the coefficient ring; throws on zero.
/// (Series code calls this unqualified and relies on ADL.)
Rational ring_invert(const Rational& x);

}  // namespace stirnum
