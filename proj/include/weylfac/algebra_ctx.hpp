#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylfac/upoly.hpp"

namespace weylfac {

enum class AlgebraMode { Weyl, QWeylSymbolic, QWeylNumeric };

std::string to_string(AlgebraMode mode);

template <Field F>
class AlgebraCtx;

namespace detail {

/// Lazily grown tables of q-powers, q-brackets, q-factorials and q-binomial
/// rows. Shared by all copies of a context; guarded for concurrent readers.
template <Field F>
class QTables {
public:
    explicit QTables(F q) : q_(std::move(q)) {
        pow_.push_back(F::from_int(1));
        bracket_.push_back(F::from_int(0));
        fact_.push_back(F::from_int(1));
        binom_.push_back({F::from_int(1)});
    }

    F pow(std::size_t n) {
        std::lock_guard lock(mu_);
        grow_pow(n);
        return pow_[n];
    }
    F bracket(std::size_t n) {
        std::lock_guard lock(mu_);
        grow(n);
        return bracket_[n];
    }
    F factorial(std::size_t n) {
        std::lock_guard lock(mu_);
        grow(n);
        return fact_[n];
    }
    /// Row n of the q-binomial triangle, entries k = 0..n.
    std::vector<F> binomial_row(std::size_t n) {
        std::lock_guard lock(mu_);
        grow(n);
        return binom_[n];
    }

    /// Coefficients s_k of the normal form of d^a x^b = sum_k s_k x^(b-k) d^(a-k),
    ///   s_k = [a choose k]_q [b choose k]_q [k]_q! q^((a-k)(b-k)).
    /// The returned reference stays valid for the lifetime of the tables.
    const std::vector<F>& kernel(std::size_t a, std::size_t b) {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(a, b);
        if (auto it = kernel_.find(key); it != kernel_.end()) return it->second;
        grow(std::max(a, b));
        grow_pow(a * b);
        std::size_t m = std::min(a, b);
        std::vector<F> s;
        s.reserve(m + 1);
        for (std::size_t k = 0; k <= m; ++k) {
            s.push_back(binom_[a][k] * binom_[b][k] * fact_[k] * pow_[(a - k) * (b - k)]);
        }
        return kernel_.emplace(key, std::move(s)).first->second;
    }

private:
    void grow_pow(std::size_t n) {
        while (pow_.size() <= n) pow_.push_back(pow_.back() * q_);
    }

    void grow(std::size_t n) {
        grow_pow(n);
        while (bracket_.size() <= n) {
            std::size_t k = bracket_.size();
            bracket_.push_back(bracket_[k - 1] + pow_[k - 1]);
            fact_.push_back(fact_[k - 1] * bracket_[k]);
            // q-Pascal: [k choose j] = [k-1 choose j-1] + q^j [k-1 choose j]
            const auto& prev = binom_[k - 1];
            std::vector<F> row(k + 1, F::from_int(0));
            row[0] = F::from_int(1);
            row[k] = F::from_int(1);
            for (std::size_t j = 1; j < k; ++j) row[j] = prev[j - 1] + pow_[j] * prev[j];
            binom_.push_back(std::move(row));
        }
    }

    F q_;
    std::mutex mu_;
    std::vector<F> pow_;
    std::vector<F> bracket_;
    std::vector<F> fact_;
    std::vector<std::vector<F>> binom_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<F>> kernel_;
};

}  // namespace detail

/// Which algebra a polynomial lives in: the Weyl algebra (q = 1), the q-Weyl
/// algebra with q an indeterminate (F = RatFunc), or the q-Weyl algebra with a
/// fixed nonzero rational q.
template <Field F>
class AlgebraCtx {
public:
    static AlgebraCtx weyl() { return AlgebraCtx(AlgebraMode::Weyl, F::from_int(1)); }

    /// q0 == 1 normalizes to the Weyl algebra.
    static AlgebraCtx numeric(const Rational& q0) {
        if (q0.is_zero()) throw std::invalid_argument("q must be a unit (nonzero)");
        if (q0.is_one()) return weyl();
        return AlgebraCtx(AlgebraMode::QWeylNumeric, F(q0));
    }

    static AlgebraCtx symbolic()
        requires std::same_as<F, RatFunc>
    {
        return AlgebraCtx(AlgebraMode::QWeylSymbolic, RatFunc::q());
    }

    AlgebraMode mode() const { return mode_; }
    bool is_weyl() const { return mode_ == AlgebraMode::Weyl; }
    const F& q() const { return q_; }

    F q_pow(long n) const {
        if (n < 0) return q_pow(-n).inverse();
        return tables_->pow(static_cast<std::size_t>(n));
    }
    /// [n]_q = 1 + q + ... + q^(n-1)
    F bracket(std::size_t n) const {
        if (is_weyl()) return F::from_int(static_cast<long>(n));
        return tables_->bracket(n);
    }
    F factorial(std::size_t n) const { return tables_->factorial(n); }
    std::vector<F> binomial_row(std::size_t n) const { return tables_->binomial_row(n); }
    const std::vector<F>& kernel(std::size_t a, std::size_t b) const { return tables_->kernel(a, b); }

    friend bool operator==(const AlgebraCtx& a, const AlgebraCtx& b) { return a.mode_ == b.mode_ && a.q_ == b.q_; }

    std::string describe() const {
        switch (mode_) {
            case AlgebraMode::Weyl: return "weyl";
            case AlgebraMode::QWeylSymbolic: return "qweyl";
            case AlgebraMode::QWeylNumeric: return "qweyl(q=" + q_.str() + ")";
        }
        return "?";
    }

private:
    AlgebraCtx(AlgebraMode mode, F q)
        : mode_(mode), q_(q), tables_(std::make_shared<detail::QTables<F>>(std::move(q))) {}

    AlgebraMode mode_;
    F q_;
    std::shared_ptr<detail::QTables<F>> tables_;
};

inline std::string to_string(AlgebraMode mode) {
    switch (mode) {
        case AlgebraMode::Weyl: return "weyl";
        case AlgebraMode::QWeylSymbolic: return "qweyl";
        case AlgebraMode::QWeylNumeric: return "qweyl-numeric";
    }
    return "?";
}

}  // namespace weylfac
