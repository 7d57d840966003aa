#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylfac/rational.hpp"

namespace weylfac {

/// Dense univariate polynomial in q over the integers, ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(long c);  // NOLINT(google-explicit-constructor)

    /// q^k
    static IntPoly monomial(std::size_t k, const Integer& c = 1);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const Integer& lc() const { return c_.back(); }
    /// Largest k with q^k dividing this polynomial (0 for the zero polynomial).
    std::size_t q_valuation() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly scaled(const Integer& s) const;
    IntPoly shifted(std::size_t k) const;  // multiply by q^k
    /// Exact division by an integer; throws if not exact.
    IntPoly divexact(const Integer& s) const;
    /// Exact division; throws if the divisor does not divide this polynomial.
    IntPoly divexact(const IntPoly& d) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    Integer content() const;  // nonnegative
    IntPoly primitive_part() const;  // positive leading coefficient
    Rational eval(const Rational& q0) const;

    std::string str(char var = 'q') const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

}  // namespace weylfac
