#include "weylfac/int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylfac {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly IntPoly::monomial(std::size_t k, const Integer& c) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPoly::q_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k == c_.size() ? 0 : k;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::scaled(const Integer& s) const {
    if (s == 0) return {};
    IntPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divexact(const Integer& s) const {
    if (s == 0) throw std::domain_error("IntPoly division by zero");
    IntPoly r = *this;
    for (auto& c : r.c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
            throw std::domain_error("IntPoly: inexact integer division");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly division by zero polynomial");
    if (is_zero()) return {};
    if (d.degree() > degree()) throw std::domain_error("IntPoly: inexact polynomial division");
    std::vector<Integer> rem = c_;
    std::vector<Integer> quo(c_.size() - d.c_.size() + 1);
    const Integer& l = d.lc();
    for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
        Integer& top = rem[i + d.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), l.get_mpz_t()))
            throw std::domain_error("IntPoly: inexact polynomial division");
        Integer t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), l.get_mpz_t());
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), d.c_[j].get_mpz_t());
        quo[i] = std::move(t);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("IntPoly: inexact polynomial division");
    return IntPoly(std::move(quo));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (lc() < 0) g = -g;
    return g == 1 ? *this : divexact(g);
}

Rational IntPoly::eval(const Rational& q0) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q0 + Rational(*it);
    return r;
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Integer a = abs(c);
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        if (i == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo remainder by zero");
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    const Integer& l = b.lc();
    int dr = static_cast<int>(r.size()) - 1;
    int steps = a.degree() - db + 1;
    while (dr >= db) {
        Integer t = r[dr];
        for (auto& c : r) c *= l;
        for (int j = 0; j <= db; ++j) mpz_submul(r[dr - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        --steps;
        r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
        while (dr >= 0 && r[dr] == 0) {
            r.pop_back();
            --dr;
        }
    }
    IntPoly out(std::move(r));
    if (steps > 0) {
        Integer s;
        mpz_pow_ui(s.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(steps));
        out = out.scaled(s);
    }
    return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return IntPoly(1);
    // q^k against anything: only a power of q can be shared.
    auto monomial_gcd = [](const IntPoly& mono, const IntPoly& other) {
        std::size_t k = std::min<std::size_t>(mono.degree(), other.q_valuation());
        return IntPoly::monomial(k);
    };
    auto is_monomial = [](const IntPoly& p) { return p.q_valuation() == static_cast<std::size_t>(p.degree()); };
    if (is_monomial(a)) return monomial_gcd(a, b);
    if (is_monomial(b)) return monomial_gcd(b, a);

    // Primitive PRS. Inputs here are small in degree, so the simple scheme suffices.
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part();
}

}  // namespace weylfac
