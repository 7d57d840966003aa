#include <algorithm>
#include <optional>

#include "factor_internal.hpp"
#include "weylfac/unifactor.hpp"

namespace weylfac {

namespace {

// Polynomial in theta with coefficients in Z[q], ascending in theta.
using BPoly = std::vector<IntPoly>;
// Truncated power series in t with polynomial-in-theta coefficients: sum_k S[k] t^k.
using TSeries = std::vector<QPoly>;

void trim(BPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int deg_theta(const BPoly& f) { return static_cast<int>(f.size()) - 1; }

int deg_q(const BPoly& f) {
    int d = 0;
    for (const auto& c : f) d = std::max(d, c.degree());
    return d;
}

IntPoly lcm(const IntPoly& a, const IntPoly& b) { return (a * b).divexact(gcd(a, b)); }

// Divides out the content in Z[q] and fixes the sign of the leading coefficient.
void make_primitive(BPoly& f) {
    IntPoly g;
    for (const auto& c : f) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    if (!g.is_one()) {
        for (auto& c : f) c = c.divexact(g);
    }
    Integer ic = 0;
    for (const auto& c : f) mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), c.content().get_mpz_t());
    if (f.back().lc() < 0) ic = -ic;
    if (ic != 1) {
        for (auto& c : f) c = c.divexact(ic);
    }
}

BPoly to_bpoly(const QqPoly& f) {
    IntPoly dpoly(1L);
    Integer dint = 1;
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        dpoly = lcm(dpoly, c.den());
        mpz_lcm(dint.get_mpz_t(), dint.get_mpz_t(), c.den_int().get_mpz_t());
    }
    BPoly out;
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) {
            out.emplace_back();
            continue;
        }
        out.push_back((c.numerator_int() * dpoly.divexact(c.den())).scaled(dint / c.den_int()));
    }
    trim(out);
    make_primitive(out);
    return out;
}

QqPoly to_qq(const BPoly& f) {
    std::vector<RatFunc> c;
    c.reserve(f.size());
    for (const auto& v : f) c.emplace_back(v);
    return QqPoly(std::move(c));
}

QPoly specialize(const BPoly& f, const Rational& q0) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& v : f) c.push_back(v.eval(q0));
    return QPoly(std::move(c));
}

QPoly as_qpoly(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return QPoly(std::move(c));
}

// Exact quotient in Z[q][theta] of primitive polynomials, or nullopt.
std::optional<BPoly> divide_exact(const BPoly& a, const BPoly& b) {
    if (a.size() < b.size()) return std::nullopt;
    BPoly r = a;
    BPoly q(a.size() - b.size() + 1);
    const std::size_t db = b.size() - 1;
    try {
        for (std::size_t i = q.size(); i-- > 0;) {
            if (r[i + db].is_zero()) continue;
            IntPoly t = r[i + db].divexact(b.back());
            for (std::size_t j = 0; j <= db; ++j) r[i + j] -= t * b[j];
            q[i] = std::move(t);
        }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (!r[i].is_zero()) return std::nullopt;
    }
    trim(q);
    return q;
}

// Coefficients of p(t + q0) in t.
std::vector<Rational> shift_to_t(const IntPoly& p, const Rational& q0, std::size_t K) {
    QPoly s = as_qpoly(p).compose_affine(Rational(1), q0);
    std::vector<Rational> out(K);
    for (std::size_t k = 0; k < K; ++k) out[k] = s.coeff(k);
    return out;
}

TSeries tseries_of(const BPoly& f, const Rational& q0, std::size_t K) {
    std::vector<std::vector<Rational>> cols(K, std::vector<Rational>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto s = shift_to_t(f[i], q0, K);
        for (std::size_t k = 0; k < K; ++k) cols[k][i] = s[k];
    }
    TSeries out;
    out.reserve(K);
    for (auto& c : cols) out.emplace_back(std::move(c));
    return out;
}

TSeries mul(const TSeries& a, const TSeries& b, std::size_t K) {
    TSeries r(K);
    for (std::size_t i = 0; i < std::min(a.size(), K); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < K && j < b.size(); ++j) {
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// 1 / s as a power series, s[0] != 0.
std::vector<Rational> inverse_series(const std::vector<Rational>& s, std::size_t K) {
    std::vector<Rational> inv(K);
    Rational c0 = s[0].inverse();
    inv[0] = c0;
    for (std::size_t k = 1; k < K; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k && j < s.size(); ++j) acc += s[j] * inv[k - j];
        inv[k] = -(acc * c0);
    }
    return inv;
}

// Lifts T = a0 b0 (mod t) to T = A B (mod t^K) with A, B monic in theta.
std::pair<TSeries, TSeries> lift_two(const TSeries& T, const QPoly& a0, const QPoly& b0, std::size_t K) {
    auto [g, s, t] = xgcd(a0, b0);
    TSeries A(K), B(K);
    A[0] = a0;
    B[0] = b0;
    for (std::size_t k = 1; k < K; ++k) {
        QPoly e = T[k];
        for (std::size_t j = 1; j < k; ++j) e -= A[j] * B[k - j];
        A[k] = (e * t) % a0;
        B[k] = (e - A[k] * b0).divexact(a0);
    }
    return {A, B};
}

std::vector<TSeries> multilift(const TSeries& T, const std::vector<QPoly>& hs, std::size_t K) {
    if (hs.size() == 1) return {T};
    const std::size_t half = hs.size() / 2;
    QPoly a0(1L), b0(1L);
    for (std::size_t i = 0; i < hs.size(); ++i) (i < half ? a0 : b0) *= hs[i];
    auto [A, B] = lift_two(T, a0, b0, K);
    auto out = multilift(A, std::vector<QPoly>(hs.begin(), hs.begin() + static_cast<long>(half)), K);
    auto rest = multilift(B, std::vector<QPoly>(hs.begin() + static_cast<long>(half), hs.end()), K);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// Candidate factor from a truncated series: shift t -> q - q0, clear
// denominators, take the primitive part.
BPoly candidate_from_series(const TSeries& C, const Rational& q0) {
    int dtheta = -1;
    for (const auto& c : C) dtheta = std::max(dtheta, c.degree());
    BPoly out;
    std::vector<QPoly> cols;
    Integer den = 1;
    for (int i = 0; i <= dtheta; ++i) {
        std::vector<Rational> tc;
        for (const auto& c : C) tc.push_back(c.coeff(static_cast<std::size_t>(i)));
        QPoly inq = QPoly(std::move(tc)).compose_affine(Rational(1), -q0);
        for (const auto& v : inq.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.denominator().get_mpz_t());
        cols.push_back(std::move(inq));
    }
    for (const auto& col : cols) {
        std::vector<Integer> z;
        for (const auto& v : col.coeffs()) z.push_back(v.numerator() * (den / v.denominator()));
        out.emplace_back(std::move(z));
    }
    trim(out);
    if (!out.empty()) make_primitive(out);
    return out;
}

// 1, -1, 2, -2, 3, ...
Rational evaluation_point(int i) {
    long v = i / 2 + 1;
    return Rational(i % 2 == 0 ? v : -v);
}

constexpr int kPointBudget = 50;
constexpr int kLuckyPoints = 3;

// Monic irreducible factors of a monic squarefree f over Q(q), deg f >= 1.
std::vector<QqPoly> factor_squarefree_qq(const QqPoly& f) {
    std::vector<QqPoly> out;
    BPoly G = to_bpoly(f);
    if (G[0].is_zero()) {
        out.push_back(QqPoly::var());
        G.erase(G.begin());
    }
    if (deg_theta(G) <= 0) return out;
    if (deg_theta(G) == 1) {
        out.push_back(to_qq(G).monic());
        return out;
    }

    std::optional<Rational> best_q0;
    std::vector<QPoly> best;
    int lucky = 0;
    for (int i = 0; i < kPointBudget && lucky < kLuckyPoints; ++i) {
        Rational q0 = evaluation_point(i);
        if (G.back().eval(q0).is_zero()) continue;
        QPoly img = specialize(G, q0);
        auto fac = factor_over_Q(img);
        bool squarefree = std::all_of(fac.factors.begin(), fac.factors.end(), [](const auto& p) { return p.second == 1; });
        if (!squarefree) continue;
        ++lucky;
        if (!best_q0 || fac.factors.size() < best.size()) {
            best_q0 = q0;
            best.clear();
            for (auto& [g, m] : fac.factors) best.push_back(g);
        }
        if (best.size() == 1) break;
    }
    if (!best_q0) throw FactorizationFailure("no lucky evaluation point for factorization over Q(q)");
    if (best.size() == 1) {
        out.push_back(to_qq(G).monic());
        return out;
    }
    const Rational q0 = *best_q0;

    // Any factor scaled by lc(G)/lc(factor) has q-degree below K.
    const std::size_t K = static_cast<std::size_t>(G.back().degree() + deg_q(G) + 1);
    TSeries Gt = tseries_of(G, q0, K);
    std::vector<Rational> Lt = shift_to_t(G.back(), q0, K);
    std::vector<Rational> Linv = inverse_series(Lt, K);
    TSeries T(K);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            if (!Linv[k - j].is_zero() && !Gt[j].is_zero()) T[k] += Gt[j].scaled(Linv[k - j]);
        }
    }
    std::vector<TSeries> lifted = multilift(T, best, K);

    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        std::vector<Rational> lcs = shift_to_t(G.back(), q0, K);
        TSeries lseries(K);
        for (std::size_t k = 0; k < K; ++k) lseries[k] = QPoly(lcs[k]);
        while (true) {
            TSeries C = lseries;
            for (auto i : idx) C = mul(C, lifted[i], K);
            BPoly cand = candidate_from_series(C, q0);
            if (deg_theta(cand) >= 1 && deg_q(cand) <= deg_q(G)) {
                if (auto quo = divide_exact(G, cand)) {
                    out.push_back(to_qq(cand).monic());
                    G = std::move(*quo);
                    make_primitive(G);
                    std::vector<TSeries> rest;
                    for (std::size_t i = 0; i < lifted.size(); ++i) {
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(std::move(lifted[i]));
                    }
                    lifted = std::move(rest);
                    found = true;
                    break;
                }
            }
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (deg_theta(G) > 0) out.push_back(to_qq(G).monic());
    return out;
}

// Squarefree is certified by one squarefree specialization of full degree.
bool specialized_squarefree(const QqPoly& f) {
    BPoly G = to_bpoly(f);
    int tried = 0;
    for (int i = 0; i < kPointBudget && tried < 5; ++i) {
        Rational q0 = evaluation_point(i);
        if (G.back().eval(q0).is_zero()) continue;
        ++tried;
        if (detail::certify_squarefree(specialize(G, q0))) return true;
    }
    return false;
}

}  // namespace

UFactorization<RatFunc> factor_over_Qq(const QqPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    UFactorization<RatFunc> out;
    out.unit = f.lc();
    if (f.degree() == 0) return out;
    QqPoly m = f.monic();
    std::vector<std::pair<QqPoly, unsigned>> parts;
    if (specialized_squarefree(m)) {
        parts.emplace_back(m, 1);
    } else {
        parts = squarefree_decompose(m);
    }
    for (const auto& [g, mult] : parts) {
        for (auto& h : factor_squarefree_qq(g)) out.factors.emplace_back(std::move(h), mult);
    }
    detail::sort_factors(out.factors);
    return out;
}

}  // namespace weylfac
