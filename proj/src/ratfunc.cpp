#include "weylfac/ratfunc.hpp"

#include <stdexcept>

namespace weylfac {

namespace {

// Splits an integer polynomial into (signed content, primitive part with lc > 0).
std::pair<Integer, IntPoly> split_content(const IntPoly& p) {
    Integer c = p.content();
    if (p.lc() < 0) c = -c;
    return {c, c == 1 ? p : p.divexact(c)};
}

}  // namespace

RatFunc::RatFunc(const IntPoly& p) : num_(1), den_(1) {
    if (p.is_zero()) return;
    auto [c, pp] = split_content(p);
    scale_ = Rational(c);
    num_ = std::move(pp);
}

RatFunc RatFunc::q() { return RatFunc(IntPoly::monomial(1)); }

RatFunc RatFunc::from_rational_poly(const Rational& s, const IntPoly& n, const IntPoly& d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (s.is_zero() || n.is_zero()) return {};
    IntPoly g = gcd(n, d);
    IntPoly nn = g.is_one() ? n : n.divexact(g);
    IntPoly dd = g.is_one() ? d : d.divexact(g);
    auto [cn, pn] = split_content(nn);
    auto [cd, pd] = split_content(dd);
    return RatFunc(s * Rational(cn, cd), std::move(pn), std::move(pd));
}

RatFunc RatFunc::simplify(const IntPoly& n, const IntPoly& d) { return from_rational_poly(Rational(1), n, d); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.scale_ = -r.scale_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(scale_.inverse(), den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Rational RatFunc::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw std::domain_error("rational function has a pole at q = " + q0.str());
    return scale_ * num_.eval(q0) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_constant() && o.is_constant()) {
        scale_ += o.scale_;
        return *this;
    }
    if (num_ == o.num_ && den_ == o.den_) {
        scale_ += o.scale_;
        if (scale_.is_zero()) *this = RatFunc();
        return *this;
    }
    Integer lcm_den;
    mpz_lcm(lcm_den.get_mpz_t(), scale_.denominator().get_mpz_t(), o.scale_.denominator().get_mpz_t());
    Integer a = scale_.numerator() * (lcm_den / scale_.denominator());
    Integer b = o.scale_.numerator() * (lcm_den / o.scale_.denominator());
    if (den_ == o.den_) {
        IntPoly n = num_.scaled(a) + o.num_.scaled(b);
        *this = from_rational_poly(Rational(Integer(1), lcm_den), n, den_);
        return *this;
    }
    IntPoly g = gcd(den_, o.den_);
    IntPoly d1 = g.is_one() ? den_ : den_.divexact(g);
    IntPoly d2 = g.is_one() ? o.den_ : o.den_.divexact(g);
    IntPoly n = (num_ * d2).scaled(a) + (o.num_ * d1).scaled(b);
    *this = from_rational_poly(Rational(Integer(1), lcm_den), n, den_ * d2);
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (o.is_constant()) {
        scale_ *= o.scale_;
        return *this;
    }
    if (is_constant()) {
        Rational s = scale_ * o.scale_;
        *this = o;
        scale_ = std::move(s);
        return *this;
    }
    IntPoly g1 = gcd(num_, o.den_);
    IntPoly g2 = gcd(o.num_, den_);
    IntPoly n1 = g1.is_one() ? num_ : num_.divexact(g1);
    IntPoly d2 = g1.is_one() ? o.den_ : o.den_.divexact(g1);
    IntPoly n2 = g2.is_one() ? o.num_ : o.num_.divexact(g2);
    IntPoly d1 = g2.is_one() ? den_ : den_.divexact(g2);
    // Products of primitive polynomials with positive leading coefficient stay so.
    *this = RatFunc(scale_ * o.scale_, n1 * n2, d1 * d2);
    return *this;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) {
    auto cmp_poly = [](const IntPoly& x, const IntPoly& y) {
        if (auto c = x.degree() <=> y.degree(); c != 0) return c;
        for (int i = x.degree(); i >= 0; --i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    };
    if (auto c = cmp_poly(a.den_, b.den_); c != 0) return c;
    if (auto c = cmp_poly(a.num_, b.num_); c != 0) return c;
    return a.scale_ <=> b.scale_;
}

bool RatFunc::needs_parens() const {
    if (is_constant()) return false;
    if (!den_.is_one() || !scale_.is_integer()) return true;
    return num_.q_valuation() != static_cast<std::size_t>(num_.degree());
}

std::string RatFunc::str() const {
    if (is_constant()) return scale_.str();
    // Fold the integer part of the scale into the numerator; keep the rest as a prefix.
    std::string n;
    if (scale_.is_integer()) {
        n = num_.scaled(scale_.numerator()).str();
    } else {
        n = scale_.str() + "*(" + num_.str() + ")";
    }
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + den_.str() + ")";
}

}  // namespace weylfac
