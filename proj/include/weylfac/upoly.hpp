#pragma once

#include <compare>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylfac/ratfunc.hpp"
#include "weylfac/rational.hpp"

namespace weylfac {

/// Exact coefficient field: Rational (Q) or RatFunc (Q(q)).
template <class F>
concept Field = requires(F a, const F& b, long n) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.is_one() } -> std::convertible_to<bool>;
    { b.inverse() } -> std::convertible_to<F>;
    { b.pow(n) } -> std::convertible_to<F>;
    { b.str() } -> std::convertible_to<std::string>;
    { b.needs_parens() } -> std::convertible_to<bool>;
    { F::from_int(n) } -> std::convertible_to<F>;
    { b <=> b };
};

/// Dense univariate polynomial over a field, ascending coefficients.
/// The zero polynomial is the empty vector.
template <Field F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(F c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    UPoly(long c) : UPoly(F::from_int(c)) {}  // NOLINT(google-explicit-constructor)

    /// The indeterminate itself.
    static UPoly var() { return UPoly(std::vector<F>{F::from_int(0), F::from_int(1)}); }
    /// scale * var + offset
    static UPoly linear(const F& scale, const F& offset) { return UPoly(std::vector<F>{offset, scale}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::from_int(0); }
    const F& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UPoly monic() const {
        if (is_zero() || is_monic()) return *this;
        F inv = lc().inverse();
        UPoly r = *this;
        for (auto& c : r.c_) c = c * inv;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F::from_int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F::from_int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F::from_int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scaled(const F& s) const {
        if (s.is_zero()) return {};
        UPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    UPoly pow(unsigned e) const {
        UPoly r(1L);
        UPoly b = *this;
        while (e) {
            if (e & 1U) r *= b;
            e >>= 1U;
            if (e) b *= b;
        }
        return r;
    }

    /// (quotient, remainder) with f = q*g + r and deg r < deg g.
    friend std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
        if (g.is_zero()) throw std::domain_error("polynomial division by zero");
        if (f.degree() < g.degree()) return {UPoly(), f};
        std::vector<F> rem = f.c_;
        std::vector<F> quo(f.c_.size() - g.c_.size() + 1, F::from_int(0));
        const int dg = g.degree();
        const bool monic_g = g.lc().is_one();
        F inv = monic_g ? F::from_int(1) : g.lc().inverse();
        for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
            F t = monic_g ? rem[i + dg] : rem[i + dg] * inv;
            if (t.is_zero()) continue;
            for (int j = 0; j <= dg; ++j) {
                if (!g.c_[j].is_zero()) rem[i + j] -= t * g.c_[j];
            }
            quo[i] = std::move(t);
        }
        rem.resize(dg);
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }
    friend UPoly operator/(const UPoly& f, const UPoly& g) { return divrem(f, g).first; }
    friend UPoly operator%(const UPoly& f, const UPoly& g) { return divrem(f, g).second; }

    /// Exact quotient; throws if g does not divide f.
    UPoly divexact(const UPoly& g) const {
        auto [q, r] = divrem(*this, g);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F::from_int(static_cast<long>(i)));
        return UPoly(std::move(d));
    }

    F eval(const F& x) const {
        F r = F::from_int(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// f(scale * var + offset), by Horner.
    UPoly compose_affine(const F& scale, const F& offset) const {
        if (c_.size() <= 1) return *this;
        // Horner over the linear polynomial keeps this O(n^2).
        std::vector<F> acc{c_.back()};
        for (int i = degree() - 1; i >= 0; --i) {
            std::vector<F> next(acc.size() + 1, F::from_int(0));
            for (std::size_t j = 0; j < acc.size(); ++j) {
                next[j + 1] += acc[j] * scale;
                next[j] += acc[j] * offset;
            }
            next[0] += c_[i];
            acc = std::move(next);
        }
        return UPoly(std::move(acc));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Orders by degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const UPoly& a, const UPoly& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        for (int i = a.degree(); i >= 0; --i) {
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const F& c = c_[i];
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool neg = !c.needs_parens() && !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty()) {
                out += c.needs_parens() ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += (c.needs_parens() ? "(" + cs + ")" : cs) + "*" + mono;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <Field F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UPoly<F> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

using QPoly = UPoly<Rational>;
using QqPoly = UPoly<RatFunc>;

}  // namespace weylfac
