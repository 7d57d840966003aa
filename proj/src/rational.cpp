#include "weylfac/rational.hpp"

#include <stdexcept>

namespace weylfac {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    r.v_.canonicalize();
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::string Rational::str() const { return v_.get_str(10); }

}  // namespace weylfac
