#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "weylfac/unifactor.hpp"

using namespace weylfac;
using namespace weylfac::testing;

namespace {

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

template <Field F>
void check_invariants(const UPoly<F>& f, const UFactorization<F>& fac) {
    CHECK(fac.expand() == f);
    int total = 0;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& [g, m] = fac.factors[i];
        CHECK(g.is_monic());
        CHECK(g.degree() >= 1);
        CHECK(m >= 1);
        total += g.degree() * static_cast<int>(m);
        if (i > 0) CHECK(fac.factors[i - 1].first < g);
        for (std::size_t j = 0; j < i; ++j) CHECK(gcd(fac.factors[j].first, g).degree() == 0);
    }
    CHECK(total == f.degree());
}

QqPoly rand_qq_poly(Rng& rng, int deg) {
    std::vector<RatFunc> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(rand_int_poly(rng, 2, 3));
    c.emplace_back(rand_int_poly(rng, 1, 2) + IntPoly(6L));
    return QqPoly(std::move(c));
}

}  // namespace

TEST_CASE("squarefree_decompose examples") {
    auto t = QPoly::var();
    auto sq = squarefree_decompose(t * t * (t + QPoly(1L)));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0] == std::pair<QPoly, unsigned>{t + QPoly(1L), 1});
    CHECK(sq[1] == std::pair<QPoly, unsigned>{t, 2});

    auto f = poly<Rational>({1, 1, 1});
    CHECK(squarefree_decompose(f.scaled(Rational(3))) == std::vector<std::pair<QPoly, unsigned>>{{f, 1}});
    CHECK(squarefree_decompose(f * f) == std::vector<std::pair<QPoly, unsigned>>{{f, 2}});
    CHECK_THROWS_AS(squarefree_decompose(QPoly()), ZeroPolynomialError);
}

TEST_CASE("factor_over_Q examples") {
    auto f = factor_over_Q(poly<Rational>({0, 1, 1, 1}));
    CHECK(f.unit == Rational(1));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == QPoly::var());
    CHECK(f.factors[1].first == poly<Rational>({1, 1, 1}));

    auto g = factor_over_Q(poly<Rational>({-1, 0, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == poly<Rational>({-1, 1}));
    CHECK(g.factors[1].first == poly<Rational>({1, 1}));

    auto h1 = theta_rewrite(mono(kWeyl, 5, 5) + mono(kWeyl, 0, 0, 6)).body();
    auto h2 = theta_rewrite(mono(kWeyl, 5, 5) + mono(kWeyl, 3, 3) + mono(kWeyl, 0, 0, 4)).body();
    CHECK(is_irreducible(h1));
    CHECK(is_irreducible(h2));
    CHECK_FALSE(has_rational_root(h1));
    CHECK_FALSE(has_rational_root(h2));

    auto c = factor_over_Q(QPoly(Rational(-7, 2)));
    CHECK(c.unit == Rational(-7, 2));
    CHECK(c.factors.empty());
    CHECK_THROWS_AS(factor_over_Q(QPoly()), ZeroPolynomialError);
}

TEST_CASE("factor_over_Q needs recombination") {
    // Irreducible over Q but split modulo every prime.
    auto t4 = poly<Rational>({1, 0, 0, 0, 1});
    CHECK(is_irreducible(t4));
    auto sd = poly<Rational>({1, 0, -10, 0, 1});
    CHECK(is_irreducible(sd));
    auto prod = t4 * sd * poly<Rational>({-2, 0, 1}) * poly<Rational>({3, 5});
    auto f = factor_over_Q(prod);
    check_invariants(prod, f);
    CHECK(f.factors.size() == 4);
    CHECK(f.unit == Rational(5));
}

TEST_CASE("factor_over_Q with repeated factors and large degree") {
    auto t = QPoly::var();
    QPoly p(1L);
    for (long i = 0; i < 20; ++i) p *= t - QPoly(Rational(i));
    auto fac = factor_over_Q(p + QPoly(1L));
    check_invariants(p + QPoly(1L), fac);
    auto q = (t * t + QPoly(1L)).pow(3) * (t - QPoly(2L)).pow(2) * poly<Rational>({1, 1, 0, 1});
    auto fq = factor_over_Q(q);
    check_invariants(q, fq);
    REQUIRE(fq.factors.size() == 3);
    CHECK(fq.factors[0].second == 2);
    CHECK(fq.factors[1].second == 3);
    CHECK(fq.factors[2].second == 1);
}

TEST_CASE("factor_over_Qq examples") {
    const RatFunc q = RatFunc::q();
    auto f = poly<RatFunc>({0, -1, 1}).scaled(q.inverse());
    auto fac = factor_over_Qq(f);
    CHECK(fac.unit == q.inverse());
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == poly<RatFunc>({-1, 1}));
    CHECK(fac.factors[1].first == QqPoly::var());
    // x^2 d^2 in symbolic q rewrites to exactly this element.
    CHECK(theta_rewrite(mono(kSym, 2, 2)).body() == f);

    auto lin = QqPoly::linear(RatFunc(1), -q_bracket<RatFunc>(3, kSym));
    auto lf = factor_over_Qq(lin);
    REQUIRE(lf.factors.size() == 1);
    CHECK(lf.factors[0].first == lin);
    CHECK(is_irreducible(lin));
}

TEST_CASE("factor_over_Qq splits the q-Weyl product into its two quintic factors") {
    auto a = mono(kSym, 5, 5) + mono(kSym, 0, 0, 6);
    auto b = mono(kSym, 5, 5) + mono(kSym, 3, 3) + mono(kSym, 0, 0, 4);
    auto h = theta_rewrite(wmul(a, b)).body();
    REQUIRE(h.degree() == 10);
    auto fac = factor_over_Qq(h);
    check_invariants(h, fac);
    REQUIRE(fac.factors.size() == 2);
    std::vector<QqPoly> want{theta_rewrite(a).body().monic(), theta_rewrite(b).body().monic()};
    std::sort(want.begin(), want.end());
    CHECK(fac.factors[0].first == want[0]);
    CHECK(fac.factors[1].first == want[1]);
}

TEST_CASE("is_irreducible examples") {
    CHECK(is_irreducible(poly<Rational>({1, 1, 1})));
    CHECK_FALSE(is_irreducible(poly<Rational>({-1, 0, 1})));
    CHECK(is_irreducible(QPoly::var()));
    CHECK_THROWS_AS(is_irreducible(QPoly(Rational(3))), std::invalid_argument);
}

TEST_CASE("factor_over_Q reconstructs random products") {
    Rng rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly prod(rand_nonzero_rational(rng));
        long parts = rand_int(rng, 1, 4);
        for (long i = 0; i < parts; ++i) {
            QPoly g;
            while (g.degree() < 1) g = rand_upoly<Rational>(rng, 4);
            prod *= g;
        }
        auto fac = factor_over_Q(prod);
        check_invariants(prod, fac);
        for (const auto& [g, m] : fac.factors) {
            if (g.degree() >= 2 && g.degree() <= 3) CHECK_FALSE(has_rational_root(g));
        }
        CHECK(fac.count() >= 1);
    }
}

TEST_CASE("factor_over_Qq reconstructs random products") {
    Rng rng(4242);
    for (int iter = 0; iter < 50; ++iter) {
        QqPoly prod(RatFunc(rand_int_poly(rng, 1, 3) + IntPoly(7L)));
        long parts = rand_int(rng, 1, 3);
        for (long i = 0; i < parts; ++i) prod *= rand_qq_poly(rng, static_cast<int>(rand_int(rng, 1, 3)));
        if (iter % 5 == 0) prod *= QqPoly::var();
        auto fac = factor_over_Qq(prod);
        check_invariants(prod, fac);
    }
}

TEST_CASE("factor_over_Qq is compatible with specialisation") {
    Rng rng(99);
    for (int iter = 0; iter < 15; ++iter) {
        QqPoly prod = rand_qq_poly(rng, 2) * rand_qq_poly(rng, 2);
        auto fac = factor_over_Qq(prod);
        for (long v : {2L, 3L, -3L}) {
            Rational q0(v);
            bool defined = true;
            for (const auto& c : prod.coeffs()) defined = defined && !c.den().eval(q0).is_zero();
            for (const auto& [g, m] : fac.factors)
                for (const auto& c : g.coeffs()) defined = defined && !c.den().eval(q0).is_zero();
            QPoly img = specialize(prod, q0);
            if (!defined || img.degree() != prod.degree()) continue;
            auto base = factor_over_Q(img);
            for (const auto& [g, m] : fac.factors) {
                for (const auto& [piece, mm] : factor_over_Q(specialize(g, q0)).factors) {
                    bool present = std::any_of(base.factors.begin(), base.factors.end(),
                                               [&](const auto& b) { return b.first == piece; });
                    CHECK(present);
                }
            }
        }
    }
}

TEST_CASE("squarefree degree accounting") {
    Rng rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        QPoly f(rand_nonzero_rational(rng));
        long parts = rand_int(rng, 1, 4);
        for (long i = 0; i < parts; ++i) {
            QPoly g;
            while (g.degree() < 1) g = rand_upoly<Rational>(rng, 3);
            f *= g.pow(static_cast<unsigned>(rand_int(rng, 1, 3)));
        }
        auto sq = squarefree_decompose(f);
        int total = 0;
        QPoly rebuilt(f.lc());
        for (std::size_t i = 0; i < sq.size(); ++i) {
            const auto& [g, m] = sq[i];
            total += g.degree() * static_cast<int>(m);
            CHECK(gcd(g, g.derivative()).degree() == 0);
            for (std::size_t j = 0; j < i; ++j) CHECK(gcd(sq[j].first, g).degree() == 0);
            rebuilt *= g.pow(m);
        }
        CHECK(total == f.degree());
        CHECK(rebuilt == f);
    }
}
