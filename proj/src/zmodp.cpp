#include "zmodp.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace weylfac::detail::zp {

u64 Zp::pow(u64 a, u64 e) const {
    u64 r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1U) r = mul(r, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return r;
}

u64 Zp::inv(u64 a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p_ - 2);
}

void Zp::trim(Poly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly Zp::add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
}

Poly Zp::sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly Zp::mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    Poly r(acc.size(), 0);
    // Accumulate a bounded number of products before reducing.
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
        }
        if ((i & 7U) == 7U) {
            for (auto& v : acc) v %= p_;
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<u64>(acc[k] % p_);
    trim(r);
    return r;
}

Poly Zp::scale(const Poly& a, u64 s) const {
    if (s % p_ == 0) return {};
    Poly r = a;
    for (auto& c : r) c = mul(c, s);
    return r;
}

std::pair<Poly, Poly> Zp::divrem(const Poly& a, const Poly& b) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1, 0);
    const u64 inv_lc = inv(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t i = q.size(); i-- > 0;) {
        u64 t = mul(r[i + db], inv_lc);
        q[i] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i + j] = sub(r[i + j], mul(t, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

Poly Zp::monic(const Poly& a) const {
    if (a.empty() || a.back() == 1) return a;
    return scale(a, inv(a.back()));
}

Poly Zp::gcd(Poly a, Poly b) const {
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::tuple<Poly, Poly, Poly> Zp::xgcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1{};
    Poly t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    u64 inv_lc = inv(r0.back());
    return {scale(r0, inv_lc), scale(s0, inv_lc), scale(t0, inv_lc)};
}

Poly Zp::derivative(const Poly& a) const {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p_);
    trim(d);
    return d;
}

Poly Zp::powmod(Poly base, u64 e, const Poly& m) const {
    Poly r{1};
    base = rem(base, m);
    while (e) {
        if (e & 1U) r = rem(mul(r, base), m);
        e >>= 1U;
        if (e) base = rem(mul(base, base), m);
    }
    return r;
}

bool Zp::is_squarefree(const Poly& f) const {
    if (degree(f) <= 0) return true;
    Poly d = derivative(f);
    if (d.empty()) return false;
    return degree(gcd(f, d)) == 0;
}

std::vector<std::pair<Poly, int>> Zp::distinct_degree(const Poly& f) const {
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly h{0, 1};  // x^(p^i) mod rest
    const Poly x{0, 1};
    int i = 0;
    while (degree(rest) >= 2 * (i + 1)) {
        ++i;
        h = powmod(h, p_, rest);
        Poly g = gcd(rest, sub(h, x));
        if (degree(g) > 0) {
            out.emplace_back(g, i);
            rest = divrem(rest, g).first;
            h = rem(h, rest);
        }
    }
    if (degree(rest) > 0) out.emplace_back(monic(rest), degree(rest));
    return out;
}

void Zp::equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const {
    if (degree(f) == d) {
        out.push_back(monic(f));
        return;
    }
    const int n = degree(f);
    std::uniform_int_distribution<u64> coin(0, p_ - 1);
    for (;;) {
        Poly a(n);
        for (auto& c : a) c = coin(rng);
        trim(a);
        if (degree(a) < 1) continue;
        Poly g = gcd(f, a);
        if (degree(g) <= 0) {
            // Odd p: a^((p^d - 1)/2) - 1 splits f with probability about 1/2.
            // p^d may overflow, so raise in stages: a^((p^d-1)/2) = prod a^(p^j (p-1)/2).
            Poly b = powmod(a, (p_ - 1) / 2, f);
            Poly acc = b;
            Poly frob = a;
            for (int j = 1; j < d; ++j) {
                frob = powmod(frob, p_, f);
                acc = rem(mul(acc, powmod(frob, (p_ - 1) / 2, f)), f);
            }
            Poly one{1};
            g = gcd(f, sub(acc, one));
        }
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(g, d, rng, out);
            equal_degree(divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<Poly> Zp::factor_squarefree(const Poly& f, std::mt19937_64& rng) const {
    std::vector<Poly> out;
    if (degree(f) <= 0) return out;
    for (const auto& [g, d] : distinct_degree(monic(f))) equal_degree(g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

}  // namespace weylfac::detail::zp
