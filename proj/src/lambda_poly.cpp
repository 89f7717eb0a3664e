/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/lambda_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace stirnum {

namespace {
const Rational kZero{};
}

LambdaPoly::LambdaPoly(Rational c) {
    if (!c.is_zero()) {
        coeffs_.push_back(std::move(c));
    }
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

LambdaPoly LambdaPoly::monomial(std::size_t power, Rational c) {
    LambdaPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(power + 1, Rational());
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

void LambdaPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> LambdaPoly::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

const Rational& LambdaPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& LambdaPoly::leading_coeff() const {
    if (coeffs_.empty()) {
        throw std::domain_error("lambda_poly: leading coefficient of zero polynomial");
    }
    return coeffs_.back();
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        r.coeffs_.push_back(-c);
    }
    return r;
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& rhs) const {
    LambdaPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] = coeff(i) + rhs.coeff(i);
    }
    r.normalize();
    return r;
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& rhs) const {
    LambdaPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] = coeff(i) - rhs.coeff(i);
    }
    r.normalize();
    return r;
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        return LambdaPoly();
    }
    LambdaPoly r;
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Rational LambdaPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

LambdaPoly LambdaPoly::substitute_negated() const {
    LambdaPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) {
        r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
}

LambdaPoly LambdaPoly::divexact_lambda() const {
    if (coeffs_.empty()) {
        return LambdaPoly();
    }
    if (!coeffs_.front().is_zero()) {
        throw std::domain_error("lambda_poly: not divisible by lambda");
    }
    LambdaPoly r;
    r.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
    return r;
}

std::string LambdaPoly::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        if (first) {
            os << c.str();
            first = false;
        } else if (c.is_negative()) {
            os << "-" << (-c).str();
        } else {
            os << "+" << c.str();
        }
        if (i == 1) {
            os << "*l";
        } else if (i > 1) {
            os << "*l^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) {
    return os << p.str();
}

LambdaPoly ring_invert(const LambdaPoly& p) {
    if (!p.is_constant() || p.is_zero()) {
        throw std::domain_error("lambda_poly: inverse exists only for nonzero constants");
    }
    return LambdaPoly(p.constant_term().reciprocal());
}

}  // namespace stirnum
