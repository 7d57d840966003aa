#pragma once

// Dense polynomial arithmetic and factorization over Z/p for word-sized p.
// Internal to the factorization engine.

#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace weylfac::detail::zp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, no trailing zeros

class Zp {
public:
    explicit Zp(u64 p) : p_(p) {}
    u64 p() const { return p_; }
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_); }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;  // a != 0

    void trim(Poly& f) const;
    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(const Poly& a, u64 s) const;
    std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const;
    Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
    Poly monic(const Poly& a) const;
    Poly gcd(Poly a, Poly b) const;  // monic
    /// (g, s, t) with s a + t b = g monic.
    std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) const;
    Poly derivative(const Poly& a) const;
    /// base^e mod m
    Poly powmod(Poly base, u64 e, const Poly& m) const;

    bool is_squarefree(const Poly& f) const;
    /// Complete factorization of a monic squarefree polynomial into monic irreducibles.
    std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng) const;

private:
    std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) const;
    void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const;

    u64 p_;
};

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

}  // namespace weylfac::detail::zp
