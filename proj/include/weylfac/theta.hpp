#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "weylfac/weyl_poly.hpp"

namespace weylfac {

/// [n]_q = 1 + q + ... + q^(n-1); n in the Weyl algebra.
template <Field F>
F q_bracket(std::size_t n, const AlgebraCtx<F>& ctx) {
    return ctx.bracket(n);
}

/// T_i = i(i+1)/2
constexpr std::uint64_t triangular(std::uint64_t i) { return i * (i + 1) / 2; }

/// Polynomial in the Euler operator theta = x*d. Every ThetaPoly expands to a
/// degree-0 element of the algebra.
template <Field F>
class ThetaPoly {
public:
    ThetaPoly(AlgebraCtx<F> ctx, UPoly<F> body) : ctx_(std::move(ctx)), body_(std::move(body)) {}

    static ThetaPoly theta(const AlgebraCtx<F>& ctx) { return ThetaPoly(ctx, UPoly<F>::var()); }

    const AlgebraCtx<F>& ctx() const { return ctx_; }
    const UPoly<F>& body() const { return body_; }
    int degree() const { return body_.degree(); }

    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) { return a.ctx_ == b.ctx_ && a.body_ == b.body_; }

    std::string str() const { return body_.str("theta"); }

private:
    AlgebraCtx<F> ctx_;
    UPoly<F> body_;
};

/// theta -> scale * theta + offset. Invertible since scale != 0.
template <Field F>
struct AffineMap {
    F scale;
    F offset;

    AffineMap(F s, F o) : scale(std::move(s)), offset(std::move(o)) {
        if (scale.is_zero()) throw std::invalid_argument("affine map with zero scale");
    }
    static AffineMap identity() { return AffineMap(F::from_int(1), F::from_int(0)); }

    AffineMap inverse() const {
        F inv = scale.inverse();
        return AffineMap(inv, -(offset * inv));
    }
    /// (this after inner)(theta) = this(inner(theta))
    AffineMap after(const AffineMap& inner) const {
        return AffineMap(scale * inner.scale, scale * inner.offset + offset);
    }
    F apply(const F& t) const { return scale * t + offset; }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Argument of the x-swap: f(theta) x^n = x^n f(q^n theta + [n]_q).
template <Field F>
AffineMap<F> x_swap_map(std::size_t n, const AlgebraCtx<F>& ctx) {
    if (ctx.is_weyl()) return AffineMap<F>(F::from_int(1), F::from_int(static_cast<long>(n)));
    return AffineMap<F>(ctx.q_pow(static_cast<long>(n)), ctx.bracket(n));
}

/// Argument of the d-swap: f(theta) d^n = d^n f((theta - [n]_q) / q^n).
/// This is the n-fold composition of theta*d = d*(theta - 1)/q.
template <Field F>
AffineMap<F> d_swap_map(std::size_t n, const AlgebraCtx<F>& ctx) {
    if (ctx.is_weyl()) return AffineMap<F>(F::from_int(1), F::from_int(-static_cast<long>(n)));
    F inv = ctx.q_pow(-static_cast<long>(n));
    return AffineMap<F>(inv, -(ctx.bracket(n) * inv));
}

/// Map m with f(theta) * L = L * f(m(theta)).
template <Field F>
AffineMap<F> letter_swap_map(Letter l, std::size_t n, const AlgebraCtx<F>& ctx) {
    return l == Letter::X ? x_swap_map(n, ctx) : d_swap_map(n, ctx);
}

template <Field F>
ThetaPoly<F> affine_substitute(const ThetaPoly<F>& f, const AffineMap<F>& m) {
    if (m.scale.is_one() && m.offset.is_zero()) return f;
    return ThetaPoly<F>(f.ctx(), f.body().compose_affine(m.scale, m.offset));
}

/// g with f(theta) x^n = x^n g(theta).
template <Field F>
ThetaPoly<F> swap_past_x(const ThetaPoly<F>& f, std::size_t n) {
    return affine_substitute(f, x_swap_map(n, f.ctx()));
}

/// g with f(theta) d^n = d^n g(theta).
template <Field F>
ThetaPoly<F> swap_past_d(const ThetaPoly<F>& f, std::size_t n) {
    return affine_substitute(f, d_swap_map(n, f.ctx()));
}

namespace detail {

// Multiplies a vector in the basis B_k = x^k d^k by theta, using
//   B_k * theta = q^k B_(k+1) + [k]_q B_k.
template <Field F>
std::vector<F> falling_times_theta(const std::vector<F>& v, const AlgebraCtx<F>& ctx) {
    std::vector<F> r(v.size() + 1, F::from_int(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        r[k + 1] += ctx.is_weyl() ? v[k] : v[k] * ctx.q_pow(static_cast<long>(k));
        if (k > 0) r[k] += ctx.is_weyl() ? v[k] * F::from_int(static_cast<long>(k)) : v[k] * ctx.bracket(k);
    }
    return r;
}

}  // namespace detail

/// Rewrites a degree-0 element sum c_n x^n d^n as a polynomial in theta, using
///   x^(n+1) d^(n+1) = x^n d^n (theta - [n]_q) / q^n.
template <Field F>
ThetaPoly<F> theta_rewrite(const WeylPoly<F>& p) {
    const auto& ctx = p.ctx();
    if (p.is_zero()) return ThetaPoly<F>(ctx, UPoly<F>());
    if (auto d = z_degree(p); !d || *d != 0) throw std::invalid_argument("theta_rewrite needs a homogeneous element of degree 0");
    std::uint32_t top = 0;
    for (const auto& [m, c] : p.terms()) top = std::max(top, m.a);

    std::vector<F> dense(top + 1, F::from_int(0));
    for (const auto& [m, c] : p.terms()) dense[m.a] = c;

    UPoly<F> basis(1L);
    UPoly<F> out;
    for (std::uint32_t n = 0; n <= top; ++n) {
        if (!dense[n].is_zero()) out += basis.scaled(dense[n]);
        if (n == top) break;
        if (ctx.is_weyl()) {
            basis *= UPoly<F>::linear(F::from_int(1), F::from_int(-static_cast<long>(n)));
        } else {
            F inv = ctx.q_pow(-static_cast<long>(n));
            basis *= UPoly<F>::linear(inv, -(ctx.bracket(n) * inv));
        }
    }
    return ThetaPoly<F>(ctx, std::move(out));
}

/// Normal form of f(x*d).
template <Field F>
WeylPoly<F> theta_expand(const ThetaPoly<F>& f) {
    const auto& ctx = f.ctx();
    const auto& c = f.body().coeffs();
    if (c.empty()) return WeylPoly<F>(ctx);
    std::vector<F> v{c.back()};
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
        v = detail::falling_times_theta(v, ctx);
        v[0] += c[i];
    }
    typename WeylPoly<F>::Terms terms;
    for (std::uint32_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) terms.emplace(Monomial{k, k}, v[k]);
    }
    return WeylPoly<F>(ctx, std::move(terms));
}

/// Element sum_i p_i(n) s^i of the shift algebra K<n, s | s n = (n + 1) s>,
/// stored as p_0, p_1, ...
struct ShiftPoly {
    std::vector<QPoly> coeffs;
};

/// Embeds the shift algebra into the Weyl algebra via n -> theta, s -> d.
inline WeylPoly<Rational> embed_shift(const ShiftPoly& p, const AlgebraCtx<Rational>& ctx) {
    if (!ctx.is_weyl()) throw std::invalid_argument("the shift algebra embeds only into the Weyl algebra");
    WeylPoly<Rational> out(ctx);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i].is_zero()) continue;
        out += wmul(theta_expand(ThetaPoly<Rational>(ctx, p.coeffs[i])), WeylPoly<Rational>::d(ctx, static_cast<std::uint32_t>(i)));
    }
    return out;
}

}  // namespace weylfac
