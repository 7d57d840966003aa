#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weylfac/errors.hpp"
#include "weylfac/upoly.hpp"

namespace weylfac {

/// Raised when no usable modulus or evaluation point is found within budget.
class FactorizationFailure : public std::runtime_error {
public:
    explicit FactorizationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// unit * prod factor^multiplicity. Factors are monic, irreducible, pairwise
/// coprime and sorted by (degree, coefficients).
template <Field F>
struct UFactorization {
    F unit = F::from_int(1);
    std::vector<std::pair<UPoly<F>, unsigned>> factors;

    UPoly<F> expand() const {
        UPoly<F> r(unit);
        for (const auto& [g, m] : factors) r *= g.pow(m);
        return r;
    }
    /// Number of irreducible factors counted with multiplicity.
    unsigned count() const {
        unsigned n = 0;
        for (const auto& f : factors) n += f.second;
        return n;
    }
};

/// Extended Euclid: (g, s, t) with s a + t b = g, g monic (or zero).
template <Field F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r0 = a, r1 = b, s0(1L), s1, t0, t1(1L);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly<F> s2 = s0 - q * s1;
        UPoly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Yun's algorithm. Returns monic squarefree, pairwise coprime g_i with
/// f = lc(f) * prod g_i^m_i, ordered by multiplicity.
template <Field F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree_decompose(const UPoly<F>& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    std::vector<std::pair<UPoly<F>, unsigned>> out;
    if (f.degree() == 0) return out;
    UPoly<F> m = f.monic();
    UPoly<F> d = m.derivative();
    UPoly<F> a0 = gcd(m, d);
    UPoly<F> b = m.divexact(a0);
    UPoly<F> c = d.divexact(a0);
    UPoly<F> e = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        UPoly<F> a = gcd(b, e);
        b = b.divexact(a);
        c = e.divexact(a);
        e = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
    }
    return out;
}

/// Complete factorization over Q (Zassenhaus: modular factoring, Hensel
/// lifting, subset recombination).
UFactorization<Rational> factor_over_Q(const QPoly& f);

/// Complete factorization over Q(q): specialise q, factor over Q, lift in
/// powers of (q - q0), recombine.
UFactorization<RatFunc> factor_over_Qq(const QqPoly& f);

inline UFactorization<Rational> factor(const QPoly& f) { return factor_over_Q(f); }
inline UFactorization<RatFunc> factor(const QqPoly& f) { return factor_over_Qq(f); }

template <Field F>
bool is_irreducible(const UPoly<F>& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant is undefined");
    if (f.degree() == 1) return true;
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

namespace detail {

template <Field F>
void sort_factors(std::vector<std::pair<UPoly<F>, unsigned>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace detail

}  // namespace weylfac
