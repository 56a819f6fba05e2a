#pragma once

/**
 * @file gauss.hpp
 * @brief Gaussian sums over odd colors and their power-series counterparts.
 *
 * The cyclotomic sums carry a K^{-1/2} times eighth-root-of-unity prefactor.
 * It is never formed: by the quadratic Gauss sum formula it equals
 * legendre(|p|) / G_p, with G_p the Gauss element, so every quantity here is
 * computed inside Z[q] by exact division.
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/hseries.hpp"
#include "qinv/numtheory.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qinv {

/// Coefficients of (x^{1/2} - x^{-1/2})^{2m+2} = sum_{n=0}^{m+1} a_n (x^n + x^{-n}).
struct ZBinomialRow {
    long m = 0;
    std::vector<Integer> a;  // a[0..m+1]
};

inline ZBinomialRow binom_row(long m) {
    if (m < 0) throw std::invalid_argument("binom_row: m must be nonnegative");
    ZBinomialRow row{m, std::vector<Integer>(static_cast<std::size_t>(m + 2))};
    const unsigned long top = static_cast<unsigned long>(2 * m + 2);
    Integer c;
    for (long n = 0; n <= m + 1; ++n) {
        mpz_bin_uiui(c.get_mpz_t(), top, static_cast<unsigned long>(m + 1 - n));
        if ((m + 1 - n) % 2) c = -c;
        if (n == 0) {
            // The central coefficient is split between x^0 + x^-0.
            if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw std::logic_error("binom_row: odd central binomial");
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
        }
        row.a[static_cast<std::size_t>(n)] = c;
    }
    return row;
}

namespace detail {

inline void require_coprime(long p, PrimeK K) {
    if (mod(p, K.value()) == 0)
        throw hypothesis_error("K = " + std::to_string(K.value()) + " divides p = " + std::to_string(p));
}

}  // namespace detail

/// X_cycl(p, m): the half-weighted odd-color sum of q^{4* p b^2}(q^{mb} + q^{-mb}),
/// normalized by legendre(|p|) / G_p. Equals legendre(|p|) q^{-m^2 p*}.
inline CycInt gauss_sum_X(long p, long m, PrimeK K) {
    detail::require_coprime(p, K);
    const long k = K.value();
    const long four_star = inverse_mod_k(4, K);
    const long pr = mod(p, k), mr = mod(m, k);
    CycInt sum = CycInt::zero(K);
    for (long b = 1; b < k; b += 2) {
        const long base = mod(four_star * mod(pr * mod(b * b, k), k), k);
        const long shift = mod(mr * b, k);
        sum.add_monomial(base + shift, 1);
        sum.add_monomial(base - shift, 1);
    }
    // Half weight at b = K: q^{4* p K^2}(q^{mK} + q^{-mK}) / 2 = 1.
    CycInt endpoint = CycInt::qpow(four_star * mod(pr * mod(k * k, k), k), K) * (CycInt::qpow(mr * k, K) + CycInt::qpow(-mr * k, K));
    sum += divide_exact(endpoint, Integer(2));

    CycInt out = gauss_element(Integer(p), K).divide(sum);
    return out * Integer(legendre(Integer(std::labs(p)), K));
}

/// legendre(|p|) q^{-m^2 p*}.
inline CycInt gauss_sum_X_closed_form(long p, long m, PrimeK K) {
    detail::require_coprime(p, K);
    const long ps = inverse_mod_k(mod(p, K.value()), K);
    const long e = mod(-mod(m * m, K.value()) * ps, K.value());
    return CycInt::qpow(e, K) * Integer(legendre(Integer(std::labs(p)), K));
}

/// X_asympt(p, m) = q^{-m^2/p}.
inline HSeries gauss_integral_X(long p, long m, std::size_t trunc) {
    if (p == 0) throw std::invalid_argument("gauss_integral_X: p must be nonzero");
    return qpow_series(make_rational(Integer(-m * m), Integer(p)), trunc);
}

/// Y_cycl(p, m) via the binomial decomposition: h Y = sum_n a_{m,n} X_cycl(p, n).
inline CycInt gauss_sum_Y(long p, long m, PrimeK K) {
    detail::require_coprime(p, K);
    const ZBinomialRow row = binom_row(m);
    CycInt acc = CycInt::zero(K);
    for (long n = 0; n <= m + 1; ++n) acc += gauss_sum_X(p, n, K) * row.a[static_cast<std::size_t>(n)];
    return divide_by_h(acc);
}

/// Y_cycl(p, m) by direct summation over odd colors of
/// q^{4* p b^2} (q^{b/2} - q^{-b/2})^{2m+2}, including the vanishing b = K term.
inline CycInt gauss_sum_Y_direct(long p, long m, PrimeK K) {
    detail::require_coprime(p, K);
    const long k = K.value();
    const long four_star = inverse_mod_k(4, K);
    const long pr = mod(p, k);
    const unsigned long power = static_cast<unsigned long>(2 * m + 2);
    CycInt sum = CycInt::zero(K);
    for (long b = 1; b <= k; b += 2) {
        CycInt term = half_difference(b, K).pow(power).mul_qpow(mod(four_star * mod(pr * mod(b * b, k), k), k));
        if (b == k) {
            if (!term.is_zero()) throw std::logic_error("gauss_sum_Y_direct: b = K term must vanish");
            continue;
        }
        sum += term;
    }
    CycInt normalized = gauss_element(Integer(p), K).divide(sum) * Integer(legendre(Integer(std::labs(p)), K));
    return divide_by_h(normalized);
}

/// Y_asympt(p, m) = h^{-1} sum_n a_{m,n} q^{-n^2/p}; the bracket vanishes at
/// h = 0 so the result is a genuine power series with h^m dividing it.
inline HSeries gauss_integral_Y(long p, long m, std::size_t trunc) {
    if (p == 0) throw std::invalid_argument("gauss_integral_Y: p must be nonzero");
    const ZBinomialRow row = binom_row(m);
    HSeries bracket(trunc + 1);
    for (long n = 0; n <= m + 1; ++n)
        bracket += gauss_integral_X(p, n, trunc + 1) * Rational(row.a[static_cast<std::size_t>(n)]);
    return bracket.divide_by_h_power(1);
}

/// Y_cycl = legendre(|p|) (Y_asympt)^wedge modulo (h^{depth+1}).
inline bool check_Y_correspondence(long p, long m, PrimeK K, std::size_t depth) {
    detail::require_coprime(p, K);
    const CycInt cyc = gauss_sum_Y(p, m, K);
    const CycInt asym = wedge(gauss_integral_Y(p, m, depth + 1), K, depth) * Integer(legendre(Integer(std::labs(p)), K));
    return congruent_to_order(cyc, asym, static_cast<long>(depth) + 1);
}

}  // namespace qinv
