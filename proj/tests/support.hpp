#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <vector>

#include "weylfac/theta.hpp"

namespace weylfac::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rand_rational(Rng& rng, long span = 9) {
    long n = rand_int(rng, -span, span);
    long d = rand_int(rng, 1, 4);
    return Rational(Integer(n), Integer(d));
}

inline Rational rand_nonzero_rational(Rng& rng, long span = 9) {
    Rational r;
    while (r.is_zero()) r = rand_rational(rng, span);
    return r;
}

inline IntPoly rand_int_poly(Rng& rng, int max_deg, long span = 5) {
    std::vector<Integer> c;
    int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    for (int i = 0; i <= deg; ++i) c.emplace_back(rand_int(rng, -span, span));
    return IntPoly(std::move(c));
}

inline RatFunc rand_ratfunc(Rng& rng, int max_deg = 2) {
    IntPoly n = rand_int_poly(rng, max_deg);
    IntPoly d;
    while (d.is_zero()) d = rand_int_poly(rng, max_deg);
    return RatFunc::simplify(n, d);
}

template <Field F>
F rand_scalar(Rng& rng);
template <>
inline Rational rand_scalar<Rational>(Rng& rng) { return rand_rational(rng); }
template <>
inline RatFunc rand_scalar<RatFunc>(Rng& rng) {
    // Mostly small polynomials in q, occasionally a proper fraction.
    if (rand_int(rng, 0, 3) == 0) return rand_ratfunc(rng, 1);
    return RatFunc(rand_int_poly(rng, 2, 3));
}

template <Field F>
F rand_nonzero_scalar(Rng& rng) {
    F c = rand_scalar<F>(rng);
    while (c.is_zero()) c = rand_scalar<F>(rng);
    return c;
}

template <Field F>
UPoly<F> rand_upoly(Rng& rng, int max_deg) {
    std::vector<F> c;
    int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    for (int i = 0; i <= deg; ++i) c.push_back(rand_scalar<F>(rng));
    return UPoly<F>(std::move(c));
}

template <Field F>
WeylPoly<F> rand_weyl(Rng& rng, const AlgebraCtx<F>& ctx, int max_exp, int terms) {
    WeylPoly<F> p(ctx);
    for (int i = 0; i < terms; ++i) {
        auto a = static_cast<std::uint32_t>(rand_int(rng, 0, max_exp));
        auto b = static_cast<std::uint32_t>(rand_int(rng, 0, max_exp));
        p.add_term(Monomial{a, b}, rand_scalar<F>(rng));
    }
    return p;
}

/// Homogeneous element of degree m with theta-degree at most max_theta.
template <Field F>
WeylPoly<F> rand_homogeneous(Rng& rng, const AlgebraCtx<F>& ctx, long m, int max_theta) {
    WeylPoly<F> p(ctx);
    while (p.is_zero()) {
        int terms = static_cast<int>(rand_int(rng, 1, max_theta + 1));
        for (int i = 0; i < terms; ++i) {
            auto j = static_cast<std::uint32_t>(rand_int(rng, 0, max_theta));
            std::uint32_t a = m >= 0 ? j : j + static_cast<std::uint32_t>(-m);
            std::uint32_t b = m >= 0 ? j + static_cast<std::uint32_t>(m) : j;
            p.add_term(Monomial{a, b}, rand_scalar<F>(rng));
        }
    }
    return p;
}

/// The three algebra flavours exercised by the property suites.
inline std::vector<AlgebraCtx<Rational>> numeric_contexts() {
    return {AlgebraCtx<Rational>::weyl(), AlgebraCtx<Rational>::numeric(Rational(2)),
            AlgebraCtx<Rational>::numeric(Rational(Integer(1), Integer(2))), AlgebraCtx<Rational>::numeric(Rational(-1))};
}

}  // namespace weylfac::testing
