#include <algorithm>
#include <optional>
#include <random>

#include "weylfac/unifactor.hpp"
#include "factor_internal.hpp"
#include "zmodp.hpp"

namespace weylfac {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros
namespace zp = detail::zp;

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive integer polynomial with positive leading coefficient, same roots.
ZPoly to_primitive(const QPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly z;
    z.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) z.push_back(c.numerator() * (l / c.denominator()));
    Integer g = content(z);
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

QPoly to_monic_q(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(v, z.back());
    return QPoly(std::move(c));
}

zp::Poly image(const ZPoly& f, zp::u64 p) {
    zp::Poly r(f.size());
    Integer t;
    for (std::size_t i = 0; i < f.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
        r[i] = t.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly lift_image(const zp::Poly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// Arithmetic in (Z/m)[t] with representatives in [0, m).
struct ModRing {
    Integer m;

    void reduce(ZPoly& f) const {
        for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        trim(f);
    }
    ZPoly add(const ZPoly& a, const ZPoly& b) const {
        ZPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        reduce(r);
        return r;
    }
    ZPoly sub(const ZPoly& a, const ZPoly& b) const {
        ZPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        reduce(r);
        return r;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        reduce(r);
        return r;
    }
    // b monic
    std::pair<ZPoly, ZPoly> divrem(const ZPoly& a, const ZPoly& b) const {
        if (a.size() < b.size()) return {{}, a};
        ZPoly r = a;
        ZPoly q(a.size() - b.size() + 1, 0);
        const std::size_t db = b.size() - 1;
        for (std::size_t i = q.size(); i-- > 0;) {
            Integer t = r[i + db];
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
            q[i] = t;
            if (t == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
        r.resize(db);
        reduce(r);
        reduce(q);
        return {q, r};
    }
};

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, g and h
// monic. Afterwards the same relations hold mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
    ModRing R{m * m};
    ZPoly e = R.sub(f, R.mul(g, h));
    auto [q, r] = R.divrem(R.mul(s, e), h);
    ZPoly g2 = R.add(g, R.add(R.mul(t, e), R.mul(q, g)));
    ZPoly h2 = R.add(h, r);
    ZPoly b = R.sub(R.add(R.mul(s, g2), R.mul(t, h2)), ZPoly{1});
    auto [c, d] = R.divrem(R.mul(s, b), h2);
    s = R.sub(s, d);
    t = R.sub(t, R.add(R.mul(t, b), R.mul(c, g2)));
    g = std::move(g2);
    h = std::move(h2);
}

// Lifts a factorization of monic T mod p into monic factors mod p^(2^steps).
std::vector<ZPoly> multilift(const ZPoly& target, const std::vector<zp::Poly>& fs, const zp::Zp& F, int steps) {
    const Integer p(static_cast<unsigned long>(F.p()));
    if (fs.size() == 1) return {target};
    const std::size_t half = fs.size() / 2;
    zp::Poly g0{1}, h0{1};
    for (std::size_t i = 0; i < fs.size(); ++i) (i < half ? g0 : h0) = F.mul(i < half ? g0 : h0, fs[i]);
    auto [one, s0, t0] = F.xgcd(g0, h0);
    ZPoly g = lift_image(g0), h = lift_image(h0), s = lift_image(s0), t = lift_image(t0);
    Integer m = p;
    for (int i = 0; i < steps; ++i) {
        ZPoly f = target;
        ModRing{m * m}.reduce(f);
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    std::vector<zp::Poly> left(fs.begin(), fs.begin() + static_cast<long>(half));
    std::vector<zp::Poly> right(fs.begin() + static_cast<long>(half), fs.end());
    auto out = multilift(g, left, F, steps);
    auto rest = multilift(h, right, F, steps);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Exact quotient over Z, or nullopt.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (a.size() < b.size()) return std::nullopt;
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1, 0);
    const std::size_t db = b.size() - 1;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (r[i + db] == 0) continue;
        if (!mpz_divisible_p(r[i + db].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        Integer t = r[i + db] / b.back();
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        q[i] = std::move(t);
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (r[i] != 0) return std::nullopt;
    }
    trim(q);
    return q;
}

void symmetric(ZPoly& f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(f);
}

std::mt19937_64& engine() {
    thread_local std::mt19937_64 rng(0x5eed);
    return rng;
}

bool usable_prime(const ZPoly& f, zp::u64 p, const zp::Zp& F) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return false;
    return F.is_squarefree(image(f, p));
}

zp::u64 next_prime(zp::u64 p) {
    Integer t(static_cast<unsigned long>(p));
    mpz_nextprime(t.get_mpz_t(), t.get_mpz_t());
    return t.get_ui();
}

constexpr zp::u64 kFirstPrime = 10007;
constexpr int kPrimesTried = 5;
constexpr int kPrimeBudget = 400;

// True when some prime certifies f squarefree; false means "unknown".
bool modular_squarefree(const ZPoly& f) {
    zp::u64 p = kFirstPrime;
    for (int i = 0; i < 3; ++i, p = next_prime(p)) {
        zp::Zp F(p);
        if (usable_prime(f, p, F)) return true;
    }
    return false;
}

// Irreducible factors of a primitive squarefree f with positive lc, deg >= 1.
std::vector<ZPoly> factor_primitive_squarefree(ZPoly f) {
    std::vector<ZPoly> out;
    if (f[0] == 0) {
        out.push_back(ZPoly{0, 1});
        f.erase(f.begin());
    }
    if (deg(f) <= 0) return out;
    if (deg(f) == 1) {
        out.push_back(f);
        return out;
    }

    // Pick the prime with the fewest modular factors among the first usable ones.
    std::optional<zp::u64> best_p;
    std::vector<zp::Poly> best;
    zp::u64 p = kFirstPrime;
    int usable = 0;
    for (int tries = 0; tries < kPrimeBudget && usable < kPrimesTried; ++tries, p = next_prime(p)) {
        zp::Zp F(p);
        if (!usable_prime(f, p, F)) continue;
        ++usable;
        auto fs = F.factor_squarefree(image(f, p), engine());
        if (!best_p || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1) break;
    }
    if (!best_p) throw FactorizationFailure("no usable prime for factorization over Q");
    if (best.size() == 1) {
        out.push_back(f);
        return out;
    }
    const zp::Zp F(*best_p);
    const Integer P(static_cast<unsigned long>(*best_p));

    // Coefficients of l * g for any factor g of f stay below |l| 2^n |f|_2.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer norm = sqrt(norm2) + 1;
    Integer bound = 2 * abs(f.back()) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(deg(f)));
    int steps = 0;
    Integer M = P;
    while (M <= bound) {
        M *= M;
        ++steps;
    }

    // Monic lift target l^{-1} f mod M.
    ZPoly target = f;
    Integer inv_l;
    mpz_invert(inv_l.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    for (auto& c : target) c *= inv_l;
    ModRing{M}.reduce(target);
    std::vector<ZPoly> lifted = multilift(target, best, F, steps);

    // Subset recombination.
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        const Integer& l = f.back();
        while (true) {
            // Constant-term filter: l*prod g_i(0) must divide l*f(0).
            Integer c0 = l;
            for (auto i : idx) c0 = c0 * (lifted[i].empty() ? Integer(0) : lifted[i][0]);
            mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), M.get_mpz_t());
            if (c0 > M / 2) c0 -= M;
            Integer lf0 = l * f[0];
            bool pass = c0 != 0 && mpz_divisible_p(lf0.get_mpz_t(), c0.get_mpz_t());
            if (pass) {
                ZPoly cand{l};
                ModRing R{M};
                for (auto i : idx) cand = R.mul(cand, lifted[i]);
                symmetric(cand, M);
                Integer g = content(cand);
                if (cand.back() < 0) g = -g;
                for (auto& c : cand) c /= g;
                if (auto q = divide_exact(f, cand)) {
                    out.push_back(cand);
                    f = std::move(*q);
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0; i < lifted.size(); ++i) {
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(std::move(lifted[i]));
                    }
                    lifted = std::move(rest);
                    found = true;
                    break;
                }
            }
            // Next combination in lexicographic order.
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (deg(f) > 0) out.push_back(f);
    return out;
}

}  // namespace

bool detail::certify_squarefree(const QPoly& f) {
    if (f.degree() <= 1) return true;
    return modular_squarefree(to_primitive(f));
}

UFactorization<Rational> factor_over_Q(const QPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    UFactorization<Rational> out;
    out.unit = f.lc();
    if (f.degree() == 0) return out;
    QPoly m = f.monic();
    std::vector<std::pair<QPoly, unsigned>> parts;
    if (modular_squarefree(to_primitive(m))) {
        parts.emplace_back(m, 1);
    } else {
        parts = squarefree_decompose(m);
    }
    for (const auto& [g, mult] : parts) {
        for (const auto& z : factor_primitive_squarefree(to_primitive(g))) out.factors.emplace_back(to_monic_q(z), mult);
    }
    detail::sort_factors(out.factors);
    return out;
}

}  // namespace weylfac
