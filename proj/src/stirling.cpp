/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace stirnum {

namespace {

void require_nonneg(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("stirling: indices must be nonnegative");
    }
}

// Classical triangles, grown on demand. Guarded by a mutex so concurrent
// readers are safe; values are copied out under the lock.
class ClassicalCache {
public:
    BigInt first_unsigned(int n, int k) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return k <= n ? s1u_[n][k] : BigInt(0);
    }

    BigInt second(int n, int k) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return k <= n ? s2_[n][k] : BigInt(0);
    }

private:
    std::mutex mu_;
    std::vector<std::vector<BigInt>> s1u_{{1}};
    std::vector<std::vector<BigInt>> s2_{{1}};

    void grow(int n) {
        for (int m = static_cast<int>(s1u_.size()); m <= n; ++m) {
            std::vector<BigInt> row1(m + 1), row2(m + 1);
            row1[m] = 1;
            row2[m] = 1;
            for (int k = 1; k < m; ++k) {
                // c(m,k) = c(m-1,k-1) + (m-1) c(m-1,k)
                row1[k] = s1u_[m - 1][k - 1] + (m - 1) * s1u_[m - 1][k];
                // {m k} = {m-1 k-1} + k {m-1 k}
                row2[k] = s2_[m - 1][k - 1] + k * s2_[m - 1][k];
            }
            s1u_.push_back(std::move(row1));
            s2_.push_back(std::move(row2));
        }
    }
};

ClassicalCache& cache() {
    static ClassicalCache c;
    return c;
}

// (1/λ)log(1+λt): ordinary coefficient of t^m is (-1)^{m-1} λ^{m-1} / m.
PolySeries scaled_log_series(int order, bool negated_t) {
    PolySeries s(order);
    for (int m = 1; m <= order; ++m) {
        int sign = (m % 2 == 1) ? 1 : -1;
        if (negated_t) {
            sign = -1;  // (1/λ)log(1-λt): every coefficient is -λ^{m-1}/m
        }
        s.set_coeff(m, LambdaPoly::monomial(m - 1, Rational(sign, m)));
    }
    return s;
}

// (1/λ)(e^{λ(e^t-1)} - 1); each coefficient of e^{λ(e^t-1)} - 1 carries at
// least one power of λ, so the coefficient-wise division is exact.
PolySeries second_kind_generator_impl(int order) {
    PolySeries et(order);
    const LambdaPoly lam = LambdaPoly::lambda();
    Rational mfact(1);
    for (int m = 1; m <= order; ++m) {
        mfact *= Rational(m);
        et.set_coeff(m, lam * LambdaPoly(mfact.reciprocal()));  // λ t^m/m!
    }
    PolySeries h = exp(et);
    h.set_coeff(0, LambdaPoly());
    PolySeries r(order);
    for (int m = 1; m <= order; ++m) {
        r.set_coeff(m, h.coeff(m).divexact_lambda());
    }
    return r;
}

PolySeries family_generator(Family f, int order) {
    switch (f) {
        case Family::S1:
            return log1p(PolySeries::identity(order));
        case Family::S1U: {
            const LambdaPoly minus_one(Rational(-1));
            PolySeries t = PolySeries::identity(order);
            return log1p(t.scaled(minus_one)).scaled(minus_one);
        }
        case Family::S2: {
            PolySeries s(order);
            Rational mfact(1);
            for (int m = 1; m <= order; ++m) {
                mfact *= Rational(m);
                s.set_coeff(m, LambdaPoly(mfact.reciprocal()));
            }
            return s;
        }
        case Family::DS1:
            return degenerate_log_series(order);
        case Family::DS2:
            return degenerate_exp_minus_one_series(order);
        case Family::NS1:
            return new_stirling1_generator(order);
        case Family::NS1U:
            return new_stirling1_unsigned_generator(order);
        case Family::NS2:
            return new_stirling2_generator(order);
    }
    throw std::invalid_argument("stirling: unknown family");
}

}  // namespace

std::string family_id(Family f) {
    switch (f) {
        case Family::S1: return "s1";
        case Family::S1U: return "s1u";
        case Family::S2: return "s2";
        case Family::DS1: return "ds1";
        case Family::DS2: return "ds2";
        case Family::NS1: return "ns1";
        case Family::NS1U: return "ns1u";
        case Family::NS2: return "ns2";
    }
    throw std::invalid_argument("stirling: unknown family");
}

Family family_from_id(const std::string& id) {
    for (Family f : all_families()) {
        if (family_id(f) == id) {
            return f;
        }
    }
    throw std::invalid_argument("stirling: unknown family id '" + id + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {Family::S1, Family::S1U, Family::S2, Family::DS1,
                                             Family::DS2, Family::NS1, Family::NS1U, Family::NS2};
    return fams;
}

Rational stirling1_signed(int n, int k) {
    require_nonneg(n, k);
    BigInt v = cache().first_unsigned(n, k);
    if ((n - k) % 2 != 0) {
        v = -v;
    }
    return Rational(std::move(v));
}

Rational stirling1_unsigned(int n, int k) {
    require_nonneg(n, k);
    return Rational(cache().first_unsigned(n, k));
}

Rational stirling2(int n, int k) {
    require_nonneg(n, k);
    return Rational(cache().second(n, k));
}

PolySeries degenerate_log_series(int order) {
    PolySeries s(order);
    LambdaPoly egf(Rational(1));  // prod_{i=1}^{n-1} (λ - i), grown per n
    Rational nfact(1);
    for (int n = 1; n <= order; ++n) {
        nfact *= Rational(n);
        if (n > 1) {
            egf *= LambdaPoly({Rational(-(n - 1)), Rational(1)});  // (λ - (n-1))
        }
        s.set_coeff(n, egf * LambdaPoly(nfact.reciprocal()));
    }
    return s;
}

PolySeries degenerate_exp_minus_one_series(int order) {
    PolySeries s(order);
    LambdaPoly egf(Rational(1));  // (1)_{n,λ} = prod_{i=0}^{n-1} (1 - iλ)
    Rational nfact(1);
    for (int n = 1; n <= order; ++n) {
        nfact *= Rational(n);
        if (n > 1) {
            egf *= LambdaPoly({Rational(1), Rational(-(n - 1))});  // (1 - (n-1)λ)
        }
        s.set_coeff(n, egf * LambdaPoly(nfact.reciprocal()));
    }
    return s;
}

PolySeries new_stirling1_generator(int order) {
    return log1p(scaled_log_series(order, /*negated_t=*/false));
}

PolySeries new_stirling1_unsigned_generator(int order) {
    return log1p(scaled_log_series(order, /*negated_t=*/true)).scaled(LambdaPoly(Rational(-1)));
}

PolySeries new_stirling2_generator(int order) {
    return second_kind_generator_impl(order);
}

namespace {

LambdaPoly egf_extract(const PolySeries& generator, int n, int k) {
    PolySeries p = pow(generator, static_cast<unsigned>(k));
    return egf_coeff(p, n) * LambdaPoly(factorial(static_cast<unsigned>(k)).reciprocal());
}

}  // namespace

LambdaPoly degenerate_stirling1(int n, int k) {
    require_nonneg(n, k);
    if (k > n) {
        return LambdaPoly();
    }
    return egf_extract(degenerate_log_series(n), n, k);
}

LambdaPoly degenerate_stirling2(int n, int k) {
    require_nonneg(n, k);
    if (k > n) {
        return LambdaPoly();
    }
    return egf_extract(degenerate_exp_minus_one_series(n), n, k);
}

LambdaPoly new_stirling1_unsigned_conv(int n, int k) {
    require_nonneg(n, k);
    LambdaPoly acc;
    for (int m = k; m <= n; ++m) {
        acc += LambdaPoly::monomial(n - m, stirling1_unsigned(n, m) * stirling1_unsigned(m, k));
    }
    return acc;
}

LambdaPoly new_stirling1_unsigned_gf(int n, int k, int order) {
    require_nonneg(n, k);
    if (order < n) {
        throw std::out_of_range("stirling: truncation order below requested n");
    }
    return egf_extract(new_stirling1_unsigned_generator(order), n, k);
}

LambdaPoly new_stirling1_signed(int n, int k) {
    LambdaPoly p = new_stirling1_unsigned_conv(n, k);
    return (n - k) % 2 == 0 ? p : -p;
}

LambdaPoly new_stirling2_conv(int n, int k) {
    require_nonneg(n, k);
    LambdaPoly acc;
    for (int m = k; m <= n; ++m) {
        acc += LambdaPoly::monomial(m - k, stirling2(m, k) * stirling2(n, m));
    }
    return acc;
}

LambdaPoly new_stirling2_gf(int n, int k, int order) {
    require_nonneg(n, k);
    if (order < n) {
        throw std::out_of_range("stirling: truncation order below requested n");
    }
    return egf_extract(new_stirling2_generator(order), n, k);
}

StirlingTriangle::StirlingTriangle(Family family, int max_n, std::vector<std::vector<LambdaPoly>> entries)
    : family_(family), max_n_(max_n), entries_(std::move(entries)) {}

const LambdaPoly& StirlingTriangle::at(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 0 || k > n) {
        throw std::out_of_range("stirling: triangle index out of range");
    }
    return entries_[n][k];
}

namespace {

LambdaPoly triangle_entry_recurrence(Family f, int n, int k) {
    switch (f) {
        case Family::S1: return LambdaPoly(stirling1_signed(n, k));
        case Family::S1U: return LambdaPoly(stirling1_unsigned(n, k));
        case Family::S2: return LambdaPoly(stirling2(n, k));
        case Family::NS1: return new_stirling1_signed(n, k);
        case Family::NS1U: return new_stirling1_unsigned_conv(n, k);
        case Family::NS2: return new_stirling2_conv(n, k);
        default: throw std::logic_error("stirling: family handled elsewhere");
    }
}

// Triangle invariants shared by all eight families, plus integrality and the
// family-specific degree/sign structure. A violation means an internal bug.
void validate_triangle(Family f, int max_n, const std::vector<std::vector<LambdaPoly>>& e) {
    const LambdaPoly one(Rational(1));
    for (int n = 0; n <= max_n; ++n) {
        if (e[n][n] != one) {
            throw std::logic_error("stirling: diagonal entry is not 1");
        }
        if (n >= 1 && !e[n][0].is_zero()) {
            throw std::logic_error("stirling: entry (n,0) is nonzero");
        }
        const bool unsigned_family =
            f == Family::S1U || f == Family::S2 || f == Family::NS1U || f == Family::NS2;
        for (int k = 0; k <= n; ++k) {
            const LambdaPoly& p = e[n][k];
            // NS1 carries sign (-1)^{n-k} on an otherwise nonnegative polynomial.
            const LambdaPoly q = (f == Family::NS1 && (n - k) % 2 != 0) ? -p : p;
            for (const Rational& c : p.coeffs()) {
                if (!c.is_integer()) {
                    throw std::logic_error("stirling: non-integer coefficient at emission");
                }
            }
            if (unsigned_family || f == Family::NS1) {
                for (const Rational& c : q.coeffs()) {
                    if (c.is_negative()) {
                        throw std::logic_error("stirling: sign structure violated");
                    }
                }
            }
            if ((f == Family::S1 || f == Family::S1U || f == Family::S2) && !p.is_constant()) {
                throw std::logic_error("stirling: classical entry is not constant");
            }
            if ((f == Family::NS1U || f == Family::NS2) && !p.is_zero() &&
                p.degree() != static_cast<std::size_t>(n - k)) {
                throw std::logic_error("stirling: new-type entry has wrong degree");
            }
        }
    }
}

}  // namespace

StirlingTriangle build_triangle(Family family, int max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("stirling: negative max_n");
    }
    std::vector<std::vector<LambdaPoly>> e(max_n + 1);

    if (family == Family::DS1 || family == Family::DS2) {
        // Degenerate-family recurrences:
        //   DS1(n+1,k) = DS1(n,k-1) - (n - kλ) DS1(n,k)
        //   DS2(n+1,k) = DS2(n,k-1) + (k - nλ) DS2(n,k)
        e[0] = {LambdaPoly(Rational(1))};
        for (int n = 1; n <= max_n; ++n) {
            e[n].assign(n + 1, LambdaPoly());
            for (int k = 1; k <= n; ++k) {
                const LambdaPoly prev_lower = e[n - 1][k - 1];
                const LambdaPoly prev_same = k <= n - 1 ? e[n - 1][k] : LambdaPoly();
                LambdaPoly weight;
                if (family == Family::DS1) {
                    weight = LambdaPoly({Rational(-(n - 1)), Rational(k)});  // kλ - (n-1)
                } else {
                    weight = LambdaPoly({Rational(k), Rational(-(n - 1))});  // k - (n-1)λ
                }
                e[n][k] = prev_lower + weight * prev_same;
            }
        }
    } else {
        for (int n = 0; n <= max_n; ++n) {
            e[n].resize(n + 1);
            for (int k = 0; k <= n; ++k) {
                e[n][k] = triangle_entry_recurrence(family, n, k);
            }
        }
    }

    validate_triangle(family, max_n, e);
    return StirlingTriangle(family, max_n, std::move(e));
}

StirlingTriangle build_triangle_gf(Family family, int max_n, int order) {
    if (max_n < 0) {
        throw std::invalid_argument("stirling: negative max_n");
    }
    if (order < max_n) {
        throw std::out_of_range("stirling: truncation order below max_n");
    }
    const PolySeries base = family_generator(family, order);

    std::vector<std::vector<LambdaPoly>> e(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        e[n].assign(n + 1, LambdaPoly());
    }

    // Column k of the table is the EGF coefficient row of base^k / k!,
    // built incrementally: P_k = P_{k-1} * base / k.
    PolySeries p = PolySeries::one(order);
    std::vector<Rational> factorials(max_n + 1);
    factorials[0] = Rational(1);
    for (int n = 1; n <= max_n; ++n) {
        factorials[n] = factorials[n - 1] * Rational(n);
    }
    for (int k = 0; k <= max_n; ++k) {
        if (k > 0) {
            p = (p * base).scaled(LambdaPoly(Rational(1, k)));
        }
        for (int n = k; n <= max_n; ++n) {
            e[n][k] = p.coeff(n) * LambdaPoly(factorials[n]);
        }
    }
    return StirlingTriangle(family, max_n, std::move(e));
}

}  // namespace stirnum
