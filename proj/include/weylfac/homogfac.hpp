#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "weylfac/right_division.hpp"
#include "weylfac/theta.hpp"
#include "weylfac/unifactor.hpp"

namespace weylfac {

/// unit * factors[0] * factors[1] * ...; factors are monic under the term
/// order and never scalars.
template <Field F>
struct Factorization {
    AlgebraCtx<F> ctx;
    F unit = F::from_int(1);
    std::vector<WeylPoly<F>> factors;
    bool verified = false;

    WeylPoly<F> product() const {
        WeylPoly<F> r = WeylPoly<F>::constant(ctx, unit);
        for (const auto& f : factors) r = wmul(r, f);
        return r;
    }
    std::vector<std::string> factor_strings() const {
        std::vector<std::string> out;
        for (const auto& f : factors) out.push_back(f.str());
        return out;
    }
};

/// Search token: a letter x or d, or a monic polynomial in theta.
template <Field F>
struct Token {
    enum class Kind { X, D, Theta };
    Kind kind = Kind::Theta;
    UPoly<F> theta;

    static Token letter(Letter l) { return Token{l == Letter::X ? Kind::X : Kind::D, {}}; }
    static Token of_theta(UPoly<F> g) { return Token{Kind::Theta, std::move(g)}; }
    bool is_letter() const { return kind != Kind::Theta; }
    Letter as_letter() const { return kind == Kind::X ? Letter::X : Letter::D; }
    friend bool operator==(const Token& a, const Token& b) { return a.kind == b.kind && a.theta == b.theta; }
};

/// Symbolic factorization: unit times the ordered token product.
template <Field F>
struct FactorWord {
    AlgebraCtx<F> ctx;
    std::vector<Token<F>> tokens;
    F unit = F::from_int(1);
};

/// Result of splitting theta or theta + 1/q into two letters.
struct LetterPair {
    Letter first;
    Letter second;
};

template <Field F>
struct ThetaSplit {
    LetterPair letters;
    F unit;  // f = unit * first * second
};

/// theta = x*d, and theta + 1/q = (1/q) d*x (theta + 1 = d*x in the Weyl
/// algebra). These are the only monic irreducibles of K[theta] that factor in
/// the algebra. Non-monic input is compared after normalization and the
/// leading coefficient goes into the unit.
template <Field F>
std::optional<ThetaSplit<F>> split_theta_like(const ThetaPoly<F>& f) {
    if (f.degree() != 1) return std::nullopt;
    const auto& ctx = f.ctx();
    const F& lc = f.body().lc();
    F c = f.body().coeff(0) / lc;
    if (c.is_zero()) return ThetaSplit<F>{{Letter::X, Letter::D}, lc};
    F qinv = ctx.is_weyl() ? F::from_int(1) : ctx.q().inverse();
    if (c == qinv) return ThetaSplit<F>{{Letter::D, Letter::X}, lc * qinv};
    return std::nullopt;
}

/// unit * ordered product equals h.
template <Field F>
bool verify_factorization(const WeylPoly<F>& h, const Factorization<F>& fac) {
    if (!(h.ctx() == fac.ctx)) return false;
    return fac.product() == h;
}

/// Comparable key: unit, then tokens with monic theta bodies.
template <Field F>
std::string canonical_word(const FactorWord<F>& w) {
    std::string key = w.unit.str();
    key += '|';
    for (const auto& t : w.tokens) {
        if (t.kind == Token<F>::Kind::X) {
            key += 'x';
        } else if (t.kind == Token<F>::Kind::D) {
            key += 'd';
        } else {
            key += '[';
            for (const auto& c : t.theta.coeffs()) key += c.str() + ',';
            key += ']';
        }
    }
    return key;
}

template <Field F>
Factorization<F> to_factorization(const FactorWord<F>& w) {
    Factorization<F> out{w.ctx, w.unit, {}, false};
    for (const auto& t : w.tokens) {
        if (t.is_letter()) {
            out.factors.push_back(WeylPoly<F>::letter(w.ctx, t.as_letter()));
            continue;
        }
        WeylPoly<F> e = theta_expand(ThetaPoly<F>(w.ctx, t.theta));
        F lc = e.leading().second;
        out.unit = out.unit * lc;
        out.factors.push_back(e.scaled(lc.inverse()));
    }
    return out;
}

namespace detail {

// Token g with g(theta) * L = L * g(m(theta)), returned monic; the scale
// change is folded into unit.
template <Field F>
UPoly<F> moved_theta(const UPoly<F>& g, const AffineMap<F>& m, F& unit) {
    UPoly<F> moved = g.compose_affine(m.scale, m.offset);
    unit = unit * moved.lc();
    return moved.monic();
}

template <Field F>
bool is_splittable(const FactorWord<F>& w, const Token<F>& t) {
    return t.kind == Token<F>::Kind::Theta && split_theta_like(ThetaPoly<F>(w.ctx, t.theta)).has_value();
}

}  // namespace detail

/// Replaces every theta and theta + 1/q token by its letter pair.
template <Field F>
FactorWord<F> split_all(FactorWord<F> w) {
    std::vector<Token<F>> out;
    for (auto& t : w.tokens) {
        if (t.kind == Token<F>::Kind::Theta) {
            if (auto s = split_theta_like(ThetaPoly<F>(w.ctx, t.theta))) {
                w.unit = w.unit * s->unit;
                out.push_back(Token<F>::letter(s->letters.first));
                out.push_back(Token<F>::letter(s->letters.second));
                continue;
            }
        }
        out.push_back(std::move(t));
    }
    w.tokens = std::move(out);
    return w;
}

template <Field F>
bool is_fully_split(const FactorWord<F>& w) {
    return std::none_of(w.tokens.begin(), w.tokens.end(), [&](const auto& t) { return detail::is_splittable(w, t); });
}

/// All words one move away: theta/letter swaps, theta/theta swaps, splits of
/// theta-like tokens, merges of adjacent letter pairs.
template <Field F>
std::vector<FactorWord<F>> word_moves(const FactorWord<F>& w) {
    using Kind = typename Token<F>::Kind;
    std::vector<FactorWord<F>> out;
    const auto& ctx = w.ctx;
    const std::size_t n = w.tokens.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Token<F>& a = w.tokens[i];
        const Token<F>& b = w.tokens[i + 1];
        if (a.kind == Kind::Theta && b.is_letter()) {
            FactorWord<F> v = w;
            auto m = letter_swap_map(b.as_letter(), 1, ctx);
            v.tokens[i] = b;
            v.tokens[i + 1] = Token<F>::of_theta(detail::moved_theta(a.theta, m, v.unit));
            out.push_back(std::move(v));
        } else if (a.is_letter() && b.kind == Kind::Theta) {
            FactorWord<F> v = w;
            auto m = letter_swap_map(a.as_letter(), 1, ctx).inverse();
            v.tokens[i] = Token<F>::of_theta(detail::moved_theta(b.theta, m, v.unit));
            v.tokens[i + 1] = a;
            out.push_back(std::move(v));
        } else if (a.kind == Kind::Theta && b.kind == Kind::Theta) {
            if (a.theta == b.theta) continue;
            FactorWord<F> v = w;
            std::swap(v.tokens[i], v.tokens[i + 1]);
            out.push_back(std::move(v));
        } else if (a.kind != b.kind) {
            // x d = theta; d x = q (theta + 1/q)
            FactorWord<F> v = w;
            UPoly<F> t = UPoly<F>::var();
            if (a.kind == Kind::D) {
                F qinv = ctx.is_weyl() ? F::from_int(1) : ctx.q().inverse();
                t = UPoly<F>::linear(F::from_int(1), qinv);
                v.unit = v.unit * (ctx.is_weyl() ? F::from_int(1) : ctx.q());
            }
            v.tokens[i] = Token<F>::of_theta(t);
            v.tokens.erase(v.tokens.begin() + static_cast<long>(i) + 1);
            out.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Token<F>& t = w.tokens[i];
        if (t.kind != Kind::Theta) continue;
        auto s = split_theta_like(ThetaPoly<F>(ctx, t.theta));
        if (!s) continue;
        FactorWord<F> v = w;
        v.unit = v.unit * s->unit;
        v.tokens[i] = Token<F>::letter(s->letters.first);
        v.tokens.insert(v.tokens.begin() + static_cast<long>(i) + 1, Token<F>::letter(s->letters.second));
        out.push_back(std::move(v));
    }
    return out;
}

/// Single factorization as a word: right-divide the letters off, factor the theta
/// image, split theta-like factors.
template <Field F>
FactorWord<F> homogfac_word(const WeylPoly<F>& h) {
    const auto& ctx = h.ctx();
    if (h.is_zero()) throw ZeroPolynomialError();
    const long m = require_homogeneous(h);
    WeylPoly<F> core = h;
    std::vector<Token<F>> trailing;
    if (m != 0) {
        Letter l = m > 0 ? Letter::D : Letter::X;
        auto k = static_cast<std::uint32_t>(m > 0 ? m : -m);
        core = right_divide_pow(h, l, k);
        trailing.assign(k, Token<F>::letter(l));
    }
    auto fac = factor(theta_rewrite(core).body());
    FactorWord<F> w{ctx, {}, fac.unit};
    for (const auto& [g, mult] : fac.factors) {
        for (unsigned i = 0; i < mult; ++i) w.tokens.push_back(Token<F>::of_theta(g));
    }
    w.tokens.insert(w.tokens.end(), trailing.begin(), trailing.end());
    return split_all(std::move(w));
}

/// One factorization of a homogeneous element.
template <Field F>
Factorization<F> homogfac(const WeylPoly<F>& h) {
    Factorization<F> out = to_factorization(homogfac_word(h));
    out.verified = verify_factorization(h, out);
    return out;
}

/// Every fully split word reachable from the homogfac_word seed, sorted by
/// canonical key.
template <Field F>
std::vector<FactorWord<F>> homogfac_all_words(const WeylPoly<F>& h) {
    FactorWord<F> seed = homogfac_word(h);
    std::unordered_set<std::string> seen{canonical_word(seed)};
    std::deque<FactorWord<F>> queue{seed};
    std::vector<std::pair<std::string, FactorWord<F>>> found;
    while (!queue.empty()) {
        FactorWord<F> w = std::move(queue.front());
        queue.pop_front();
        if (is_fully_split(w)) found.emplace_back(canonical_word(w), w);
        for (auto& v : word_moves(w)) {
            if (seen.insert(canonical_word(v)).second) queue.push_back(std::move(v));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FactorWord<F>> out;
    out.reserve(found.size());
    for (auto& [k, w] : found) out.push_back(std::move(w));
    return out;
}

/// All factorizations up to units, each verified by re-multiplication.
/// Distinct words with equal expansions (possible at roots of unity) are
/// reported once.
template <Field F>
std::vector<Factorization<F>> homogfac_all(const WeylPoly<F>& h) {
    std::vector<Factorization<F>> out;
    std::unordered_set<std::string> keys;
    for (const auto& w : homogfac_all_words(h)) {
        Factorization<F> f = to_factorization(w);
        std::string key = f.unit.str();
        for (const auto& s : f.factor_strings()) key += "|" + s;
        if (!keys.insert(key).second) continue;
        f.verified = verify_factorization(h, f);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace weylfac
