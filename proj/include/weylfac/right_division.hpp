#pragma once

#include "weylfac/theta.hpp"

namespace weylfac {

/// Exact right division of a homogeneous h by letter^k: returns the degree-0
/// element h_hat with h_hat * letter^k == h.
///
/// For d, the monomials x^a d^(a+k) simply lose k powers of d. For x, h is
/// first written as x^k g(theta) (each x^(b+k) d^b = x^k * x^b d^b), and then
/// x^k g(theta) = g((theta - [k]_q) / q^k) x^k.
template <Field F>
WeylPoly<F> right_divide_pow(const WeylPoly<F>& h, Letter letter, std::uint32_t k) {
    const auto& ctx = h.ctx();
    if (h.is_zero()) return h;
    auto deg = z_degree(h);
    const long want = letter == Letter::D ? static_cast<long>(k) : -static_cast<long>(k);
    if (!deg || *deg != want) {
        throw InexactDivisionError("right division by " + letter_name(letter) + "^" + std::to_string(k) +
                                   " needs a homogeneous element of degree " + std::to_string(want));
    }
    if (k == 0) return h;

    if (letter == Letter::D) {
        typename WeylPoly<F>::Terms terms;
        for (const auto& [m, c] : h.terms()) terms.emplace(Monomial{m.a, m.a}, c);
        return WeylPoly<F>(ctx, std::move(terms));
    }

    typename WeylPoly<F>::Terms shifted;
    for (const auto& [m, c] : h.terms()) shifted.emplace(Monomial{m.b, m.b}, c);
    ThetaPoly<F> g = theta_rewrite(WeylPoly<F>(ctx, std::move(shifted)));
    return theta_expand(affine_substitute(g, x_swap_map(k, ctx).inverse()));
}

}  // namespace weylfac
