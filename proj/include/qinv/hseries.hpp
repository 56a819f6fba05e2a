#pragma once

/**
 * @file hseries.hpp
 * @brief Truncated power series in h = q - 1 with exact rational coefficients.
 *
 * A series of order n stores h^0 .. h^{n-1}; binary operations truncate to the
 * smaller order. Rational q-powers q^r expand as (1+h)^r. The wedge map sends a
 * series with K-prime denominators into Z[q] modulo (h^{N+1}).
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

inline constexpr std::size_t kDefaultTrunc = 16;

/// Default truncation, overridable through QINV_TRUNC.
inline std::size_t default_trunc() {
    if (const char* env = std::getenv("QINV_TRUNC")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultTrunc;
}

class HSeries {
public:
    HSeries() = default;
    explicit HSeries(std::size_t trunc) : c_(trunc) {}
    explicit HSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static HSeries constant(const Rational& c, std::size_t trunc) {
        HSeries s(trunc);
        if (trunc) s.c_[0] = c;
        return s;
    }

    static HSeries one(std::size_t trunc) { return constant(1, trunc); }

    std::size_t trunc() const noexcept { return c_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }

    HSeries truncated(std::size_t n) const {
        HSeries out(*this);
        out.c_.resize(std::min(n, c_.size()));
        return out;
    }

    /// Index of the first nonzero coefficient, or trunc() if none is stored.
    std::size_t order_of_vanishing() const {
        std::size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        return i;
    }

    /// Cancels an h^{-k} prefactor. The first k coefficients must vanish,
    /// otherwise the result would not be a power series.
    HSeries divide_by_h_power(std::size_t k) const {
        if (k > c_.size()) throw std::invalid_argument("divide_by_h_power: shift exceeds truncation");
        for (std::size_t i = 0; i < k; ++i)
            if (c_[i] != 0) throw std::domain_error("divide_by_h_power: Laurent term h^" + std::to_string(long(i) - long(k)) + " does not cancel");
        return HSeries(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /// Multiplies by h^k; the order grows by k.
    HSeries shift_up(std::size_t k) const {
        std::vector<Rational> out(k);
        out.insert(out.end(), c_.begin(), c_.end());
        return HSeries(std::move(out));
    }

    HSeries& operator+=(const HSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    HSeries& operator-=(const HSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    HSeries& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    HSeries operator-() const {
        HSeries out(*this);
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
    friend HSeries operator*(HSeries a, const Rational& s) { return a *= s; }
    friend HSeries operator*(const Rational& s, HSeries a) { return a *= s; }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        const std::size_t n = std::min(a.trunc(), b.trunc());
        HSeries out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    HSeries& operator*=(const HSeries& o) { return *this = *this * o; }

    /// Multiplicative inverse; requires a nonzero constant term.
    HSeries inverse() const {
        if (c_.empty() || c_[0] == 0) throw std::domain_error("HSeries::inverse: constant term is zero");
        const std::size_t n = c_.size();
        HSeries out(n);
        const Rational inv0 = 1 / c_[0];
        out.c_[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            Rational s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * out.c_[k - j];
            out.c_[k] = -s * inv0;
        }
        return out;
    }

    friend HSeries operator/(const HSeries& a, const HSeries& b) { return a * b.inverse(); }

    friend bool operator==(const HSeries& a, const HSeries& b) = default;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].get_str() + ")";
            if (i) out += i == 1 ? std::string("h") : "h^" + std::to_string(i);
        }
        return (out.empty() ? std::string("0") : out) + " + O(h^" + std::to_string(c_.size()) + ")";
    }

private:
    std::vector<Rational> c_;
};

/// (1+h)^r = sum_k C(r, k) h^k with generalized binomial coefficients.
inline HSeries qpow_series(const Rational& r, std::size_t trunc) {
    HSeries s(trunc);
    if (trunc == 0) return s;
    s[0] = 1;
    for (std::size_t k = 1; k < trunc; ++k) {
        s[k] = s[k - 1] * (r - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
    }
    return s;
}

/// Sum_{n=0}^{N} [a_n]_N h^n in Z[q]: the order-(N+1) truncation of the
/// K-adic image of s. Requires trunc() > N.
inline CycInt wedge(const HSeries& s, PrimeK K, std::size_t N) {
    if (s.trunc() <= N) throw std::invalid_argument("wedge: series truncated below requested depth");
    CycInt acc = CycInt::zero(K);
    for (std::size_t n = N + 1; n-- > 0;) {
        acc = acc.mul_h();
        acc.add_monomial(0, remainder_mod(s[n], K, N));
    }
    return acc;
}

/// a = b modulo (h^j).
inline bool congruent_to_order(const CycInt& a, const CycInt& b, long j) {
    return in_h_power_ideal(a - b, j);
}

}  // namespace qinv
