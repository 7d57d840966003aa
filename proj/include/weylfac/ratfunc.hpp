#pragma once

#include <compare>
#include <string>

#include "weylfac/int_poly.hpp"
#include "weylfac/rational.hpp"

namespace weylfac {

/// Element of Q(q) in canonical form  scale * num / den  where num and den are
/// coprime primitive integer polynomials with positive leading coefficients.
/// The rational scale carries sign and content. Zero is 0 * 1 / 1.
class RatFunc {
public:
    RatFunc() : num_(1), den_(1) {}
    RatFunc(long c) : scale_(c), num_(1), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : scale_(c), num_(1), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RatFunc(const IntPoly& p);

    static RatFunc from_int(long v) { return RatFunc(v); }
    /// The indeterminate q.
    static RatFunc q();
    /// Canonical form of n/d. Throws on d == 0.
    static RatFunc simplify(const IntPoly& n, const IntPoly& d);

    bool is_zero() const { return scale_.is_zero(); }
    bool is_one() const { return scale_.is_one() && num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_one() && den_.is_one(); }
    const Rational& constant_value() const { return scale_; }  // meaningful when is_constant()

    const Rational& scale() const { return scale_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    /// Numerator with the scale folded in, over a common integer denominator:
    /// this = numerator_int() / (den_int() * den()).
    IntPoly numerator_int() const { return num_.scaled(scale_.numerator()); }
    const Integer& den_int() const { return scale_.denominator(); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;
    Rational eval(const Rational& q0) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    /// Total order on the canonical representation (not a field order).
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b);

    /// "3/2", "q^2+1", "(2*q+1)/(q^3)".
    std::string str() const;
    /// Single-term polynomials such as "2*q^3" are safe as a product prefix.
    bool needs_parens() const;

private:
    RatFunc(Rational s, IntPoly n, IntPoly d) : scale_(std::move(s)), num_(std::move(n)), den_(std::move(d)) {}
    static RatFunc from_rational_poly(const Rational& s, const IntPoly& n, const IntPoly& d);

    Rational scale_;
    IntPoly num_;
    IntPoly den_;
};

}  // namespace weylfac
