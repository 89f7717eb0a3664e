/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file lambda_poly.hpp
 * @brief Dense polynomials in the formal parameter λ with Rational coefficients.
 *
 * Canonical form: no trailing zero coefficients; the zero polynomial is the
 * empty coefficient list, so its degree is "minus infinity" (an empty
 * optional), never an index.
 */

#include "stirnum/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace stirnum {

class LambdaPoly {
public:
    LambdaPoly() = default;                     // zero polynomial
    LambdaPoly(Rational c);                     // constant; implicit so the ring embeds Q
    explicit LambdaPoly(std::vector<Rational> coeffs);

    static LambdaPoly lambda() { return monomial(1, Rational(1)); }
    static LambdaPoly monomial(std::size_t power, Rational c);

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of λ^i; zero beyond the stored length.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& constant_term() const { return coeff(0); }
    /// Throws std::domain_error on the zero polynomial.
    const Rational& leading_coeff() const;

    LambdaPoly operator-() const;
    LambdaPoly operator+(const LambdaPoly& rhs) const;
    LambdaPoly operator-(const LambdaPoly& rhs) const;
    LambdaPoly operator*(const LambdaPoly& rhs) const;
    LambdaPoly& operator+=(const LambdaPoly& rhs) { return *this = *this + rhs; }
    LambdaPoly& operator-=(const LambdaPoly& rhs) { return *this = *this - rhs; }
    LambdaPoly& operator*=(const LambdaPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const LambdaPoly& rhs) const = default;

    /// Exact Horner evaluation at a rational point.
    Rational eval(const Rational& x) const;

    /// p(λ) -> p(−λ): coefficient of λ^i picks up a factor (−1)^i.
    LambdaPoly substitute_negated() const;

    /// Returns q with λ·q == *this. Throws std::domain_error when the
    /// constant term is nonzero (the input was not a multiple of λ).
    LambdaPoly divexact_lambda() const;

    /// "11+18*l+11*l^2" style, ascending powers; "0" for the zero polynomial.
    std::string str() const;

private:
    std::vector<Rational> coeffs_;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

/// Ring inverse: defined only for nonzero constant polynomials.
LambdaPoly ring_invert(const LambdaPoly& p);

}  // namespace stirnum
