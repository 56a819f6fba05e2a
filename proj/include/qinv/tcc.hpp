#pragma once

/**
 * @file tcc.hpp
 * @brief Trivial connection contribution: Ohtsuki series through surgery.
 *
 * For a homologically trivial knot with self-linking p in a QHS M, its TCC
 * expands as
 *   h1(M)^{-1/2} q^{1/2} h^{-1} q^{p(b^2-1)/4} sum_{m,n} d_{m;n} (q^{b/2} - q^{-b/2})^{2m+1} h^n,
 * and surgery along it gives the manifold M' with
 *   h1(M')^{1/2} Z^tr(M') = -sign(p) q^{(2-p+3 sign p)/4} sum_{m,n} d_{m;n} Y(p, m) h^n.
 * The coefficients of h1^{1/2} Z^tr are the Ohtsuki invariants lambda_n.
 */

#include "qinv/gauss.hpp"
#include "qinv/hseries.hpp"
#include "qinv/invariants.hpp"
#include "qinv/numtheory.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qinv {

/// Knot data d_{m;n} for a homologically trivial framed knot in a QHS.
struct DTable {
    Integer h1M = 1;
    long self_linking = 0;
    std::map<std::pair<long, long>, Rational> entries;  // (m, n) -> d_{m;n}

    Rational at(long m, long n) const {
        auto it = entries.find({m, n});
        return it == entries.end() ? Rational(0) : it->second;
    }

    void validate() const {
        if (h1M <= 0) throw std::invalid_argument("DTable: h1M must be positive");
        if (at(0, 0) != Rational(1) / Rational(h1M)) throw std::invalid_argument("DTable: d_{0;0} must equal 1/h1M");
        const Integer base = 2 * h1M;
        for (const auto& [key, d] : entries) {
            if (key.first < 0 || key.second < 0) throw std::invalid_argument("DTable: negative index");
            if (!supported_on(d.get_den(), base))
                throw std::invalid_argument("DTable: denominator of d_{" + std::to_string(key.first) + ";" + std::to_string(key.second)
                                            + "} is not supported on {2, h1M}");
        }
    }
};

/// Alexander polynomial written as h1M + sum_{m>=1} a_m (t^{1/2} - t^{-1/2})^{2m}.
struct AlexanderData {
    Integer h1M = 1;
    std::vector<Integer> a;  // a[0] is a_1
};

/// lambda_0, lambda_1, ... together with h1; lambda is h1^{1/2} Z^tr.
struct OhtsukiSeries {
    Integer h1 = 1;
    HSeries lambda;

    std::size_t trunc() const { return lambda.trunc(); }

    /// lambda_0 = 1/h1 and every denominator divides a power of 2 h1.
    void validate() const {
        if (lambda.trunc() > 0 && lambda[0] != Rational(1) / Rational(h1))
            throw std::logic_error("OhtsukiSeries: lambda_0 != 1/h1");
        const Integer base = 2 * h1;
        for (const auto& c : lambda.coeffs())
            if (!supported_on(c.get_den(), base)) throw std::logic_error("OhtsukiSeries: denominator " + c.get_den().get_str() + " outside Z[1/2, 1/h1]");
    }

    friend bool operator==(const OhtsukiSeries&, const OhtsukiSeries&) = default;
};

inline OhtsukiSeries s3_series(std::size_t trunc) { return OhtsukiSeries{1, HSeries::one(trunc)}; }

/// The unknot in S^3: a single term d_{0;0} = 1.
inline DTable dtable_unknot(long self_linking) {
    DTable d;
    d.h1M = 1;
    d.self_linking = self_linking;
    d.entries[{0, 0}] = 1;
    return d;
}

/// An unknot split from everything in a QHS M: its TCC is Z^tr(M) times the
/// unknot's, so d_{0;n} = lambda_n(M) and all m > 0 entries vanish.
inline DTable dtable_split_unknot(const OhtsukiSeries& ambient, long self_linking) {
    DTable d;
    d.h1M = ambient.h1;
    d.self_linking = self_linking;
    for (std::size_t n = 0; n < ambient.trunc(); ++n)
        if (ambient.lambda[n] != 0) d.entries[{0, static_cast<long>(n)}] = ambient.lambda[n];
    return d;
}

/// lambda-series of L(p,1):
/// sign(p) q^{(p + 2/p - 3 sign p)/4} (q^{1/2p} - q^{-1/2p}) / (q^{1/2} - q^{-1/2}).
inline OhtsukiSeries tcc_lens(long p, std::size_t trunc) {
    if (p == 0) throw std::invalid_argument("tcc_lens: p must be nonzero");
    const int s = sign(p);
    const Rational half_inv = make_rational(1, Integer(2 * p));
    HSeries num = (qpow_series(half_inv, trunc + 1) - qpow_series(-half_inv, trunc + 1)).divide_by_h_power(1);
    HSeries den = (qpow_series(make_rational(1, 2), trunc + 1) - qpow_series(make_rational(-1, 2), trunc + 1)).divide_by_h_power(1);
    const Rational exponent = (Rational(p) + make_rational(2, Integer(p)) - Rational(3 * s)) / 4;
    HSeries lam = qpow_series(exponent, trunc) * (num / den) * Rational(s);
    OhtsukiSeries out{Integer(std::labs(p)), std::move(lam)};
    out.validate();
    return out;
}

/**
 * lambda-series of the manifold obtained by surgery on the knot described by d.
 * Only pairs with m + n < trunc contribute, since h^m divides Y(p, m).
 */
inline OhtsukiSeries tcc_surgery(const DTable& d, std::size_t trunc) {
    d.validate();
    const long p = d.self_linking;
    if (p == 0) throw std::invalid_argument("tcc_surgery: self-linking 0 does not give a rational homology sphere");
    const int s = sign(p);

    std::map<long, HSeries> y_cache;
    HSeries acc(trunc);
    for (const auto& [key, coeff] : d.entries) {
        const auto [m, n] = key;
        if (coeff == 0 || m + n >= static_cast<long>(trunc)) continue;
        auto it = y_cache.find(m);
        if (it == y_cache.end()) it = y_cache.emplace(m, gauss_integral_Y(p, m, trunc)).first;
        acc += it->second.shift_up(static_cast<std::size_t>(n)).truncated(trunc) * coeff;
    }
    const Rational exponent = make_rational(Integer(2 - p + 3 * s), 4);
    OhtsukiSeries out{Integer(std::labs(p)) * d.h1M, qpow_series(exponent, trunc) * acc * Rational(-s)};
    out.validate();
    return out;
}

inline OhtsukiSeries connected_sum(const OhtsukiSeries& a, const OhtsukiSeries& b) {
    return OhtsukiSeries{a.h1 * b.h1, a.lambda * b.lambda};
}

/// Delta''(1) = 2 a_1.
inline Rational alexander_second_derivative(const AlexanderData& a) {
    return a.a.empty() ? Rational(0) : Rational(2 * a.a.front());
}

/// Casson-Walker invariant after surgery with self-linking p on a homologically
/// trivial knot in M:
///   sign(p)/4 - p/12 - 1/(6p) - Delta''(1) / (p h1M) + lambda_CW(M).
inline Rational casson_walker_surgery(const Rational& lambda_cw_M, const Integer& h1M, const Rational& delta_pp, long p) {
    if (p == 0) throw std::invalid_argument("casson_walker_surgery: p must be nonzero");
    const Rational P(p);
    return make_rational(sign(p), 4) - P / 12 - 1 / (6 * P) - delta_pp / (P * Rational(h1M)) + lambda_cw_M;
}

/// lambda_CW of a split-unknot presentation by iterating the surgery recursion;
/// a split unknot has constant Alexander polynomial, so Delta'' = 0 each step.
inline Rational casson_walker(const SurgeryPresentation& pres) {
    pres.validate();
    Rational lam = 0;
    Integer h1 = 1;
    for (long f : pres.framings) {
        lam = casson_walker_surgery(lam, h1, 0, f);
        h1 *= std::labs(f);
    }
    return lam;
}

/// h-series of the quantum integer [c] for odd c.
inline HSeries quantum_integer_series(long c, std::size_t trunc) {
    HSeries out(trunc);
    for (long j = 0; j < c; ++j) out += qpow_series(Rational((c - 1) / 2 - j), trunc);
    return out;
}

/**
 * h1^{1/2} Z^tr(M, L) for a split-unknot presentation: surgeries are applied
 * one component at a time through tcc_surgery, then the embedded unknots
 * contribute their quantum integers. With no embedded colors this is the
 * Ohtsuki series of M.
 */
inline OhtsukiSeries ohtsuki_series(const SurgeryPresentation& pres, std::size_t trunc) {
    pres.validate();
    OhtsukiSeries current = s3_series(trunc);
    for (long f : pres.framings) current = tcc_surgery(dtable_split_unknot(current, f), trunc);
    for (long c : pres.embedded_colors) current.lambda *= quantum_integer_series(c, trunc);
    return current;
}

}  // namespace qinv
