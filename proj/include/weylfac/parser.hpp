#pragma once

// Reader for operator polynomials such as "x5d5+6", "(x^2 d^2 + 1)*(x d)" or
// "q*x*d + 1". Products keep their written order.
//
//   expr  := term (('+' | '-') term)*
//   term  := ['+' | '-'] power (('*' | '/') power | power)*
//   power := atom ('^' integer)*
//   atom  := 'x'[digits] | 'd'[digits] | 'q' | integer | '(' expr ')'
//
// 'x5' is x^5. Division is only by nonzero scalars. U+2202 is read as d and
// U+2212 as '-'.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylfac/weyl_poly.hpp"

namespace weylfac {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos + 1)), pos_(pos) {}
    /// Zero-based byte offset into the input.
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

struct PToken {
    enum class Kind { Num, X, D, Q, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    std::string text;     // digits for Num
    std::uint32_t exp = 1;  // for X and D
};

inline std::vector<PToken> tokenize(std::string_view s) {
    using K = PToken::Kind;
    std::vector<PToken> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        return j;
    };
    auto small_exponent = [&](std::string_view text, std::size_t pos) {
        if (text.size() > 5) throw ParseError("exponent too large", pos);
        return static_cast<std::uint32_t>(std::stoul(std::string(text)));
    };
    while (i < s.size()) {
        const char c = s[i];
        const std::size_t pos = i;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        // UTF-8 partial derivative and minus sign
        if (s.substr(i, 3) == "\xE2\x88\x82" || c == 'd' || c == 'x') {
            bool is_x = c == 'x';
            i += (c == 'd' || c == 'x') ? 1 : 3;
            std::size_t j = digits(i);
            PToken t{is_x ? K::X : K::D, pos, {}, 1};
            if (j > i) t.exp = small_exponent(s.substr(i, j - i), i);
            out.push_back(t);
            i = j;
            continue;
        }
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({K::Minus, pos, {}});
            i += 3;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = digits(i);
            out.push_back({K::Num, pos, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        K k;
        switch (c) {
            case 'q': k = K::Q; break;
            case '+': k = K::Plus; break;
            case '-': k = K::Minus; break;
            case '*': k = K::Star; break;
            case '/': k = K::Slash; break;
            case '^': k = K::Caret; break;
            case '(': k = K::LParen; break;
            case ')': k = K::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({k, pos, {}});
        ++i;
    }
    out.push_back({K::End, s.size(), {}});
    return out;
}

template <Field F>
class Parser {
    using K = PToken::Kind;

public:
    Parser(std::string_view text, const AlgebraCtx<F>& ctx) : toks_(tokenize(text)), ctx_(ctx) {}

    WeylPoly<F> parse() {
        if (peek().kind == K::End) throw ParseError("empty expression", peek().pos);
        WeylPoly<F> r = expr();
        if (peek().kind != K::End) throw ParseError("unexpected token", peek().pos);
        return r;
    }

private:
    const PToken& peek() const { return toks_[i_]; }
    const PToken& take() { return toks_[i_++]; }

    WeylPoly<F> expr() {
        WeylPoly<F> r = term();
        while (peek().kind == K::Plus || peek().kind == K::Minus) {
            bool minus = take().kind == K::Minus;
            WeylPoly<F> t = term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    static bool starts_atom(K k) { return k == K::Num || k == K::X || k == K::D || k == K::Q || k == K::LParen; }

    WeylPoly<F> term() {
        bool neg = false;
        while (peek().kind == K::Plus || peek().kind == K::Minus) neg ^= take().kind == K::Minus;
        WeylPoly<F> r = power();
        while (true) {
            K k = peek().kind;
            if (k == K::Star) {
                take();
                r = wmul(r, power());
            } else if (k == K::Slash) {
                std::size_t pos = take().pos;
                WeylPoly<F> d = power();
                if (!d.is_scalar() || d.is_zero()) throw ParseError("division only by a nonzero scalar", pos);
                r = r.scaled(d.coeff(0, 0).inverse());
            } else if (starts_atom(k)) {
                r = wmul(r, power());
            } else {
                break;
            }
        }
        return neg ? -r : r;
    }

    WeylPoly<F> power() {
        WeylPoly<F> a = atom();
        while (peek().kind == K::Caret) {
            take();
            if (peek().kind == K::Minus) throw ParseError("negative exponent", peek().pos);
            if (peek().kind != K::Num) throw ParseError("expected integer exponent", peek().pos);
            const PToken& t = take();
            if (t.text.size() > 5) throw ParseError("exponent too large", t.pos);
            a = wpow(a, static_cast<unsigned>(std::stoul(t.text)));
        }
        return a;
    }

    WeylPoly<F> atom() {
        const PToken& t = take();
        switch (t.kind) {
            case K::Num: return WeylPoly<F>::constant(ctx_, F(Rational(Integer(t.text))));
            case K::X: return WeylPoly<F>::x(ctx_, t.exp);
            case K::D: return WeylPoly<F>::d(ctx_, t.exp);
            case K::Q:
                if (ctx_.is_weyl()) throw ParseError("'q' is not available in the Weyl algebra", t.pos);
                return WeylPoly<F>::constant(ctx_, ctx_.q());
            case K::LParen: {
                WeylPoly<F> r = expr();
                if (peek().kind != K::RParen) throw ParseError("expected ')'", peek().pos);
                take();
                return r;
            }
            case K::End: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected token", t.pos);
        }
    }

    std::vector<PToken> toks_;
    std::size_t i_ = 0;
    AlgebraCtx<F> ctx_;
};

}  // namespace detail

/// Normal form of the written expression.
template <Field F>
WeylPoly<F> parse_poly(std::string_view text, const AlgebraCtx<F>& ctx) {
    return detail::Parser<F>(text, ctx).parse();
}

}  // namespace weylfac
