/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirnum/lambda_poly.hpp"

#include <random>

using stirnum::LambdaPoly;
using stirnum::Rational;

namespace {

LambdaPoly poly(std::initializer_list<long long> ascending) {
    std::vector<Rational> cs;
    for (long long c : ascending) {
        cs.emplace_back(c);
    }
    return LambdaPoly(std::move(cs));
}

LambdaPoly random_poly(std::mt19937& gen, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> cs(deg(gen) + 1);
    for (auto& c : cs) {
        c = Rational(num(gen), den(gen));
    }
    return LambdaPoly(std::move(cs));
}

}  // namespace

TEST_CASE("ring operations") {
    const LambdaPoly lp1 = poly({1, 1});  // λ+1
    CHECK(lp1 * lp1 == poly({1, 2, 1}));
    CHECK(poly({2, 3, 2}) - poly({2, 3, 2}) == LambdaPoly());
    CHECK(lp1 + poly({3, 3}) == poly({4, 4}));
}

TEST_CASE("canonical form: no trailing zeros, zero is empty") {
    LambdaPoly p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == std::size_t{1});
    CHECK(LambdaPoly().degree() == std::nullopt);
    CHECK((poly({5}) - poly({5})).is_zero());
    // representation equality is mathematical equality
    CHECK(poly({0, 1}) + poly({1}) == poly({1, 1}));
    CHECK_THROWS_AS(LambdaPoly().leading_coeff(), std::domain_error);
    CHECK(poly({0, 7}).leading_coeff() == Rational(7));
    CHECK(poly({0, 7}).constant_term() == Rational(0));
}

TEST_CASE("Horner evaluation") {
    CHECK(poly({11, 18, 11}).eval(Rational(0)) == Rational(11));
    CHECK(LambdaPoly().eval(Rational(7, 3)) == Rational(0));
    CHECK(poly({1, 1}).eval(Rational(-1)) == Rational(0));
    CHECK(poly({2, 3, 2}).eval(Rational(1, 2)) == Rational(4));
}

TEST_CASE("lambda negation substitution") {
    CHECK(poly({2, 3, 2}).substitute_negated() == poly({2, -3, 2}));
    CHECK(poly({1, 1}).substitute_negated() == poly({1, -1}));
    CHECK(LambdaPoly().substitute_negated() == LambdaPoly());
}

TEST_CASE("lambda negation is an involution") {
    std::mt19937 gen(7);
    for (int rep = 0; rep < 100; ++rep) {
        LambdaPoly p = random_poly(gen, 8);
        CHECK(p.substitute_negated().substitute_negated() == p);
    }
}

TEST_CASE("exact division by lambda") {
    CHECK(poly({0, 3, 1}).divexact_lambda() == poly({3, 1}));
    CHECK(LambdaPoly::lambda().divexact_lambda() == poly({1}));
    CHECK(poly({0, 7, 6, 1}).divexact_lambda() == poly({7, 6, 1}));
    CHECK(LambdaPoly().divexact_lambda() == LambdaPoly());
    CHECK_THROWS_AS(poly({1, 1}).divexact_lambda(), std::domain_error);
    // round trip: λ * (p / λ) == p
    CHECK(LambdaPoly::lambda() * poly({0, 5, 2}).divexact_lambda() == poly({0, 5, 2}));
}

TEST_CASE("degree is additive under multiplication") {
    std::mt19937 gen(11);
    for (int rep = 0; rep < 100; ++rep) {
        LambdaPoly p = random_poly(gen, 6);
        LambdaPoly q = random_poly(gen, 6);
        if (p.is_zero() || q.is_zero()) {
            CHECK((p * q).is_zero());
        } else {
            CHECK((p * q).degree() == *p.degree() + *q.degree());
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 gen(13);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    for (int rep = 0; rep < 100; ++rep) {
        LambdaPoly p = random_poly(gen, 5);
        LambdaPoly q = random_poly(gen, 5);
        Rational x(num(gen), den(gen));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("ascii rendering") {
    CHECK(poly({1, 1}).str() == "1+1*l");
    CHECK(poly({11, 18, 11}).str() == "11+18*l+11*l^2");
    CHECK(poly({2, -3, 2}).str() == "2-3*l+2*l^2");
    CHECK(LambdaPoly().str() == "0");
    CHECK(LambdaPoly::monomial(2, Rational(1, 2)).str() == "1/2*l^2");
}
