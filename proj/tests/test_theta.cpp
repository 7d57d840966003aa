#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "weylfac/theta.hpp"

using namespace weylfac;
using namespace weylfac::testing;

namespace {

using QW = WeylPoly<Rational>;
using SW = WeylPoly<RatFunc>;

const auto kWeyl = AlgebraCtx<Rational>::weyl();
const auto kSym = AlgebraCtx<RatFunc>::symbolic();

template <Field F>
UPoly<F> poly(std::initializer_list<long> asc) {
    std::vector<F> c;
    for (long v : asc) c.push_back(F::from_int(v));
    return UPoly<F>(std::move(c));
}

template <Field F>
WeylPoly<F> mono(const AlgebraCtx<F>& ctx, std::uint32_t a, std::uint32_t b, long c = 1) {
    return WeylPoly<F>::monomial(ctx, a, b, F::from_int(c));
}

template <class Fn>
void for_each_mode(Fn&& fn) {
    fn(AlgebraCtx<Rational>::weyl());
    fn(AlgebraCtx<RatFunc>::symbolic());
    fn(AlgebraCtx<Rational>::numeric(Rational(2)));
    fn(AlgebraCtx<Rational>::numeric(Rational(-1)));
}

// Shift algebra product using s^i p(n) = p(n + i) s^i.
ShiftPoly shift_mul(const ShiftPoly& a, const ShiftPoly& b) {
    ShiftPoly r;
    r.coeffs.resize(a.coeffs.size() + b.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            QPoly moved = b.coeffs[j].compose_affine(Rational(1), Rational(static_cast<long>(i)));
            r.coeffs[i + j] += a.coeffs[i] * moved;
        }
    }
    return r;
}

}  // namespace

TEST_CASE("q_bracket and triangular numbers") {
    CHECK(q_bracket<RatFunc>(0, kSym).is_zero());
    CHECK(q_bracket<RatFunc>(3, kSym) == RatFunc(IntPoly(std::vector<Integer>{1, 1, 1})));
    CHECK(q_bracket<Rational>(5, kWeyl) == Rational(5));
    CHECK(q_bracket<Rational>(3, AlgebraCtx<Rational>::numeric(Rational(2))) == Rational(7));
    static_assert(triangular(0) == 0);
    static_assert(triangular(3) == 6);
    static_assert(triangular(4) == 10);
}

TEST_CASE("theta_rewrite examples") {
    auto p = mono(kWeyl, 3, 3) + mono(kWeyl, 2, 2, 4) + mono(kWeyl, 1, 1, 3);
    CHECK(theta_rewrite(p).body() == poly<Rational>({0, 1, 1, 1}));
    CHECK(theta_rewrite(mono(kWeyl, 0, 0, 7)).body() == UPoly<Rational>(7L));
    // theta^2 = x d x d = q x^2 d^2 + x d, so x^2 d^2 = (theta^2 - theta)/q.
    auto theta = mono(kSym, 1, 1);
    auto theta_sq = wmul(theta, theta);
    REQUIRE(theta_sq == SW::monomial(kSym, 2, 2, RatFunc::q()) + theta);
    auto expect = poly<RatFunc>({0, -1, 1}).scaled(RatFunc::q().inverse());
    CHECK(theta_rewrite(mono(kSym, 2, 2)).body() == expect);
    CHECK_THROWS_AS(theta_rewrite(mono(kWeyl, 1, 2)), std::invalid_argument);
}

TEST_CASE("theta_expand examples") {
    CHECK(theta_expand(ThetaPoly<Rational>::theta(kWeyl)) == mono(kWeyl, 1, 1));
    CHECK(theta_expand(ThetaPoly<Rational>(kWeyl, poly<Rational>({0, 0, 1}))) == mono(kWeyl, 2, 2) + mono(kWeyl, 1, 1));
    CHECK(theta_expand(ThetaPoly<Rational>(kWeyl, poly<Rational>({1, 1, 1}))).str() == "x2d2+2xd+1");
}

TEST_CASE("swap_past_x and swap_past_d examples") {
    auto th = ThetaPoly<Rational>::theta(kWeyl);
    CHECK(swap_past_x(th, 1).body() == poly<Rational>({1, 1}));
    CHECK(swap_past_d(th, 2).body() == poly<Rational>({-2, 1}));

    auto sth = ThetaPoly<RatFunc>::theta(kSym);
    const RatFunc q = RatFunc::q();
    CHECK(swap_past_x(sth, 1).body() == UPoly<RatFunc>::linear(q, RatFunc(1)));
    CHECK(swap_past_d(sth, 1).body() == UPoly<RatFunc>::linear(q.inverse(), -q.inverse()));

    ThetaPoly<RatFunc> c(kSym, UPoly<RatFunc>(RatFunc(5)));
    CHECK(swap_past_x(c, 3) == c);
    CHECK(swap_past_d(c, 3) == c);
}

TEST_CASE("affine_substitute examples") {
    ThetaPoly<Rational> sq(kWeyl, poly<Rational>({0, 0, 1}));
    CHECK(affine_substitute(sq, AffineMap<Rational>::identity()) == sq);
    AffineMap<Rational> plus1(Rational(1), Rational(1));
    CHECK(affine_substitute(sq, plus1).body() == poly<Rational>({1, 2, 1}));
    ThetaPoly<Rational> f(kWeyl, poly<Rational>({1, 1, 1}));
    CHECK(affine_substitute(f, AffineMap<Rational>(Rational(1), Rational(2))).body() == poly<Rational>({7, 5, 1}));
    // x (theta^2 + 3 theta + 3) d: moving the factor past x is a single shift by one.
    CHECK(affine_substitute(f, plus1).body() == poly<Rational>({3, 3, 1}));
    CHECK(affine_substitute(affine_substitute(f, plus1), plus1).body() == poly<Rational>({7, 5, 1}));
    CHECK_THROWS_AS(AffineMap<Rational>(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("embed_shift examples") {
    ShiftPoly s{{QPoly(), QPoly(1L)}};
    ShiftPoly n{{QPoly::var()}};
    ShiftPoly ns{{QPoly(), QPoly::var()}};
    CHECK(embed_shift(s, kWeyl) == QW::d(kWeyl));
    CHECK(embed_shift(n, kWeyl) == mono(kWeyl, 1, 1));
    CHECK(embed_shift(ns, kWeyl) == mono(kWeyl, 1, 2));
    CHECK_THROWS_AS(embed_shift(s, AlgebraCtx<Rational>::numeric(Rational(2))), std::invalid_argument);
}

TEST_CASE("theta_expand inverts theta_rewrite") {
    for_each_mode([](const auto& ctx) {
        using F = std::decay_t<decltype(ctx.q())>;
        Rng rng(314);
        const int iters = std::is_same_v<F, RatFunc> ? 40 : 100;
        for (int iter = 0; iter < iters; ++iter) {
            auto p = rand_homogeneous<F>(rng, ctx, 0, 12);
            auto t = theta_rewrite(p);
            CHECK(t.degree() <= 12);
            CHECK(theta_expand(t) == p);
            auto f = ThetaPoly<F>(ctx, rand_upoly<F>(rng, 12));
            CHECK(theta_rewrite(theta_expand(f)) == f);
        }
    });
}

TEST_CASE("swap identities hold in the algebra") {
    for_each_mode([](const auto& ctx) {
        using F = std::decay_t<decltype(ctx.q())>;
        using W = WeylPoly<F>;
        Rng rng(2718);
        for (int iter = 0; iter < 100; ++iter) {
            ThetaPoly<F> f(ctx, rand_upoly<F>(rng, 4));
            auto n = static_cast<std::uint32_t>(rand_int(rng, 1, 5));
            auto fx = theta_expand(f);
            CHECK(wmul(fx, W::x(ctx, n)) == wmul(W::x(ctx, n), theta_expand(swap_past_x(f, n))));
            CHECK(wmul(fx, W::d(ctx, n)) == wmul(W::d(ctx, n), theta_expand(swap_past_d(f, n))));

            // n-fold single swaps compose to the n-swap.
            ThetaPoly<F> gx = f, gd = f;
            for (std::uint32_t i = 0; i < n; ++i) {
                gx = swap_past_x(gx, 1);
                gd = swap_past_d(gd, 1);
            }
            CHECK(gx == swap_past_x(f, n));
            CHECK(gd == swap_past_d(f, n));

            CHECK(affine_substitute(swap_past_x(f, n), x_swap_map(n, ctx).inverse()) == f);
            CHECK(affine_substitute(swap_past_d(f, n), d_swap_map(n, ctx).inverse()) == f);
        }
    });
}

TEST_CASE("d-swap agrees with the printed closed form in symbolic q") {
    // (1/q) * ((theta - 1)/q^(n-1) - (q^(2-n) - q)/(1 - q))
    const RatFunc q = RatFunc::q();
    const RatFunc one(1);
    for (long n = 1; n <= 5; ++n) {
        RatFunc scale = q.inverse() * q.pow(n - 1).inverse();
        RatFunc offset = q.inverse() * (-(one * q.pow(n - 1).inverse()) - (q.pow(2 - n) - q) / (one - q));
        auto derived = d_swap_map<RatFunc>(static_cast<std::size_t>(n), kSym);
        CHECK_MESSAGE(derived.scale == scale, "n=", n);
        CHECK_MESSAGE(derived.offset == offset, "n=", n);
    }
}

TEST_CASE("x^n d^n equals the product formula with the 1/q^T prefactor") {
    for_each_mode([](const auto& ctx) {
        using F = std::decay_t<decltype(ctx.q())>;
        for (std::uint32_t n = 0; n <= 8; ++n) {
            auto lhs = theta_rewrite(wmul(WeylPoly<F>::x(ctx, n), WeylPoly<F>::d(ctx, n)));
            UPoly<F> prod(1L);
            for (std::uint32_t i = 0; i < n; ++i) {
                // [i]_q as an explicit geometric sum
                F bracket = F::from_int(0);
                for (std::uint32_t j = 0; j < i; ++j) bracket = bracket + ctx.q().pow(j);
                prod *= UPoly<F>::linear(F::from_int(1), -bracket);
            }
            F prefactor = ctx.q().pow(-static_cast<long>(triangular(n == 0 ? 0 : n - 1)));
            CHECK_MESSAGE(lhs.body() == prod.scaled(prefactor), ctx.describe(), " n=", n);
        }
    });
}

TEST_CASE("embed_shift respects products") {
    Rng rng(8080);
    auto rand_shift = [&rng]() {
        ShiftPoly p;
        auto terms = rand_int(rng, 1, 3);
        for (long i = 0; i < terms; ++i) p.coeffs.push_back(rand_upoly<Rational>(rng, 3));
        return p;
    };
    for (int iter = 0; iter < 50; ++iter) {
        ShiftPoly a = rand_shift(), b = rand_shift();
        CHECK(embed_shift(shift_mul(a, b), kWeyl) == wmul(embed_shift(a, kWeyl), embed_shift(b, kWeyl)));
    }
}
