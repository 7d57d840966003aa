#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "weylfac/algebra_ctx.hpp"
#include "weylfac/errors.hpp"

namespace weylfac {

/// x^a d^b. Ordered by total degree a + b, then by a.
struct Monomial {
    std::uint32_t a = 0;  // exponent of x
    std::uint32_t b = 0;  // exponent of d

    long z_degree() const { return static_cast<long>(b) - static_cast<long>(a); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
        if (auto c = (l.a + l.b) <=> (r.a + r.b); c != 0) return c;
        return l.a <=> r.a;
    }
};

enum class Letter { X, D };

inline std::string letter_name(Letter l) { return l == Letter::X ? "x" : "d"; }

/// Element of the (q-)Weyl algebra in normal form sum c_{a,b} x^a d^b.
/// No zero coefficients are stored.
template <Field F>
class WeylPoly {
public:
    using Terms = std::map<Monomial, F>;

    explicit WeylPoly(AlgebraCtx<F> ctx) : ctx_(std::move(ctx)) {}
    WeylPoly(AlgebraCtx<F> ctx, Terms terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) { prune(); }

    static WeylPoly constant(const AlgebraCtx<F>& ctx, const F& c) { return monomial(ctx, 0, 0, c); }
    static WeylPoly monomial(const AlgebraCtx<F>& ctx, std::uint32_t a, std::uint32_t b, const F& c = F::from_int(1)) {
        WeylPoly p(ctx);
        if (!c.is_zero()) p.terms_.emplace(Monomial{a, b}, c);
        return p;
    }
    static WeylPoly x(const AlgebraCtx<F>& ctx, std::uint32_t k = 1) { return monomial(ctx, k, 0); }
    static WeylPoly d(const AlgebraCtx<F>& ctx, std::uint32_t k = 1) { return monomial(ctx, 0, k); }
    static WeylPoly letter(const AlgebraCtx<F>& ctx, Letter l, std::uint32_t k = 1) {
        return l == Letter::X ? x(ctx, k) : d(ctx, k);
    }

    const AlgebraCtx<F>& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    F coeff(std::uint32_t a, std::uint32_t b) const {
        auto it = terms_.find(Monomial{a, b});
        return it == terms_.end() ? F::from_int(0) : it->second;
    }
    /// True when this is c * 1 for a field element c (possibly zero).
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

    /// Leading monomial and coefficient under the (a+b, a) order.
    const std::pair<const Monomial, F>& leading() const {
        if (terms_.empty()) throw ZeroPolynomialError();
        return *terms_.rbegin();
    }
    WeylPoly monic() const { return scaled(leading().second.inverse()); }

    WeylPoly& operator+=(const WeylPoly& o) {
        check_ctx(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    WeylPoly& operator-=(const WeylPoly& o) {
        check_ctx(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
    WeylPoly operator-() const { return scaled(F::from_int(-1)); }

    WeylPoly scaled(const F& s) const {
        if (s.is_zero()) return WeylPoly(ctx_);
        WeylPoly r = *this;
        for (auto& [m, c] : r.terms_) c = c * s;
        return r;
    }

    void add_term(const Monomial& m, const F& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const WeylPoly& l, const WeylPoly& r) { return l.ctx_ == r.ctx_ && l.terms_ == r.terms_; }

    void check_ctx(const WeylPoly& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatchError();
    }

    /// Compact spelling as in "x5d5+x3d3+4", highest monomial first.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            if (m.a > 0) mono += "x" + (m.a > 1 ? std::to_string(m.a) : "");
            if (m.b > 0) mono += "d" + (m.b > 1 ? std::to_string(m.b) : "");
            std::string cs = c.str();
            bool neg = !c.needs_parens() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            if (mono.empty()) {
                out += c.needs_parens() ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += mono;
            } else if (c.needs_parens()) {
                out += "(" + cs + ")*" + mono;
            } else if (cs.find_first_not_of("0123456789") != std::string::npos) {
                out += cs + "*" + mono;
            } else {
                out += cs + mono;
            }
        }
        return out;
    }

private:
    void prune() {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    AlgebraCtx<F> ctx_;
    Terms terms_;
};

/// Normal form of d^a x^b.
template <Field F>
WeylPoly<F> dx_kernel(std::uint32_t a, std::uint32_t b, const AlgebraCtx<F>& ctx) {
    const auto& s = ctx.kernel(a, b);
    WeylPoly<F> r(ctx);
    for (std::uint32_t k = 0; k < s.size(); ++k) r.add_term(Monomial{b - k, a - k}, s[k]);
    return r;
}

/// Normal-form product p * r using
///   x^a1 d^b1 * x^a2 d^b2 = sum_k s_k x^(a1+a2-k) d^(b1+b2-k),  s = dx_kernel(b1, a2).
template <Field F>
WeylPoly<F> wmul(const WeylPoly<F>& p, const WeylPoly<F>& r) {
    p.check_ctx(r);
    const auto& ctx = p.ctx();
    typename WeylPoly<F>::Terms acc;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : r.terms()) {
            F c = c1 * c2;
            const auto& s = ctx.kernel(m1.b, m2.a);
            for (std::uint32_t k = 0; k < s.size(); ++k) {
                Monomial m{m1.a + m2.a - k, m1.b + m2.b - k};
                auto [it, inserted] = acc.try_emplace(m, c * s[k]);
                if (!inserted) it->second += c * s[k];
            }
        }
    }
    return WeylPoly<F>(ctx, std::move(acc));
}

template <Field F>
WeylPoly<F> operator*(const WeylPoly<F>& p, const WeylPoly<F>& r) {
    return wmul(p, r);
}

/// p^e under wmul.
template <Field F>
WeylPoly<F> wpow(const WeylPoly<F>& p, unsigned e) {
    WeylPoly<F> r = WeylPoly<F>::constant(p.ctx(), F::from_int(1));
    for (unsigned i = 0; i < e; ++i) r = wmul(r, p);
    return r;
}

/// Degree under the weight [-1, 1] on [x, d], or nullopt when the monomials
/// disagree. Throws ZeroPolynomialError on zero.
template <Field F>
std::optional<long> z_degree(const WeylPoly<F>& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    long deg = p.terms().begin()->first.z_degree();
    for (const auto& [m, c] : p.terms()) {
        if (m.z_degree() != deg) return std::nullopt;
    }
    return deg;
}

/// Splits p into homogeneous components keyed by degree.
template <Field F>
std::map<long, WeylPoly<F>> graded_decompose(const WeylPoly<F>& p) {
    std::map<long, WeylPoly<F>> parts;
    for (const auto& [m, c] : p.terms()) {
        auto it = parts.try_emplace(m.z_degree(), p.ctx()).first;
        it->second.add_term(m, c);
    }
    return parts;
}

/// Degree of a homogeneous polynomial; throws InhomogeneousError listing the
/// components otherwise.
template <Field F>
long require_homogeneous(const WeylPoly<F>& p) {
    if (auto d = z_degree(p)) return *d;
    std::vector<InhomogeneousError::Component> parts;
    for (const auto& [deg, part] : graded_decompose(p)) parts.push_back({deg, part.str()});
    throw InhomogeneousError(std::move(parts));
}

}  // namespace weylfac
