#pragma once

/**
 * @file invariants.hpp
 * @brief SO(3) and SU(2) WRT invariants of surgeries on split framed unknots.
 *
 * A presentation is a list of framings (mutually unlinked unknots, each
 * framing nonzero) plus a list of odd colors for split 0-framed unknots
 * embedded in the resulting manifold. Surgery on the unknot with framing -p
 * gives the lens space L(p,1).
 *
 * Z' is exact in Z[q]: the odd-color surgery sum is normalized per component
 * by sign(f) legendre(|f|) q^{3*4* sign f} / G_f. That constant is the inverse of the
 * same sum for a sign(f)-framed unknot, so Z'(S^3) = 1 for every blow-up.
 * Z is evaluated in floating point only; it needs sqrt(K) and i.
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/numtheory.hpp"

#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qinv {

struct SurgeryPresentation {
    std::vector<long> framings;
    std::vector<long> embedded_colors;

    /// Order of H_1 of the surgered manifold: prod |f_i|.
    Integer h1() const {
        Integer out = 1;
        for (long f : framings) out *= std::labs(f);
        return out;
    }

    /// Signature of the (diagonal) linking matrix.
    long signature() const {
        long s = 0;
        for (long f : framings) s += sign(f);
        return s;
    }

    void validate() const {
        for (long f : framings)
            if (f == 0) throw std::invalid_argument("framing 0 does not give a rational homology sphere");
        for (long c : embedded_colors)
            if (c <= 0 || c % 2 == 0) throw std::invalid_argument("embedded colors must be odd and positive, got " + std::to_string(c));
    }

    friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

// --- exact colored Jones polynomials of unknots ------------------------------

/// [b] = sum_{j=0}^{b-1} q^{(b-1)/2 - j} for odd b > 0.
inline CycInt quantum_integer(long b, PrimeK K) {
    if (b <= 0 || b % 2 == 0) throw std::invalid_argument("quantum_integer: color must be odd and positive");
    CycInt out = CycInt::zero(K);
    for (long j = 0; j < b; ++j) out.add_monomial((b - 1) / 2 - j, 1);
    return out;
}

/// q^{p(b^2-1)/4} (q^{b/2} - q^{-b/2}) / (q^{1/2} - q^{-1/2}) for odd b.
inline CycInt jones_framed_unknot(long beta, long p, PrimeK K) {
    if (beta <= 0 || beta % 2 == 0) throw std::invalid_argument("jones_framed_unknot: exact path needs an odd positive color");
    const long k = K.value();
    const long twist = mod(mod(p, k) * mod((beta * beta - 1) / 4, k), k);
    return quantum_integer(beta, K).mul_qpow(twist);
}

inline CycInt jones_split_union(const std::vector<std::pair<long, long>>& components, PrimeK K) {
    CycInt out = CycInt::one(K);
    for (const auto& [beta, p] : components) out *= jones_framed_unknot(beta, p, K);
    return out;
}

// --- numeric evaluations ------------------------------------------------------

namespace detail {

inline std::complex<double> qpow_numeric(double r, long K) {
    return std::polar(1.0, 2.0 * std::numbers::pi * r / static_cast<double>(K));
}

inline std::complex<double> jones_unknot_numeric(long beta, long p, long K) {
    const double b = static_cast<double>(beta);
    const double qint = std::sin(std::numbers::pi * b / static_cast<double>(K)) / std::sin(std::numbers::pi / static_cast<double>(K));
    return qpow_numeric(static_cast<double>(p) * (b * b - 1.0) / 4.0, K) * qint;
}

// Calls f(colors) for every tuple in {first, first+step, ...}^L below K.
inline void for_each_color_tuple(std::size_t L, long first, long step, long K, const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> colors(L, first);
    if (first >= K && L > 0) return;
    while (true) {
        f(colors);
        std::size_t j = 0;
        while (j < L) {
            colors[j] += step;
            if (colors[j] < K) break;
            colors[j] = first;
            ++j;
        }
        if (j == L) return;
    }
}

}  // namespace detail

/// J_{K-b} = i^{kappa p} (-1)^{p b} J_b for the p-framed unknot, checked numerically.
inline bool symmetry_principle_check(long beta, long p, PrimeK K, double tol = 1e-9) {
    const long k = K.value();
    if (beta <= 0 || beta >= k) throw std::invalid_argument("symmetry_principle_check: need 0 < beta < K");
    const std::complex<double> lhs = detail::jones_unknot_numeric(k - beta, p, k);
    const std::complex<double> i_pow = std::pow(std::complex<double>(0.0, 1.0), static_cast<double>(mod(kappa(K) * p, 4)));
    const double parity = (mod(p * beta, 2) == 0) ? 1.0 : -1.0;
    const std::complex<double> rhs = i_pow * parity * detail::jones_unknot_numeric(beta, p, k);
    return std::abs(lhs - rhs) < tol;
}

/**
 * The full SU(2) invariant Z(M, L; K) for odd K >= 3 (not necessarily prime):
 *   i^{-L} (2K)^{-L/2} e^{-3 pi i sigma / 4} q^{3 sigma / 4}
 *     * sum_{0 < b_j < K} prod_j (q^{b_j/2} - q^{-b_j/2}) J_{b}(L u L')
 * with sigma the signature of the linking matrix.
 */
inline std::complex<double> wrt_Z_numeric(const SurgeryPresentation& pres, long K) {
    pres.validate();
    if (K < 3 || K % 2 == 0) throw std::invalid_argument("wrt_Z_numeric: K must be odd and >= 3");
    const std::size_t L = pres.framings.size();
    const double sigma = static_cast<double>(pres.signature());
    const std::complex<double> I(0.0, 1.0);

    std::complex<double> sum = 0.0;
    detail::for_each_color_tuple(L, 1, 1, K, [&](const std::vector<long>& colors) {
        std::complex<double> term = 1.0;
        for (std::size_t j = 0; j < L; ++j) {
            const double b = static_cast<double>(colors[j]);
            term *= (detail::qpow_numeric(b / 2, K) - detail::qpow_numeric(-b / 2, K)) * detail::jones_unknot_numeric(colors[j], pres.framings[j], K);
        }
        sum += term;
    });

    for (long c : pres.embedded_colors) sum *= detail::jones_unknot_numeric(c, 0, K);

    const double l = static_cast<double>(L);
    const std::complex<double> prefactor = std::pow(I, -l) * std::pow(2.0 * static_cast<double>(K), -l / 2)
                                           * std::exp(-3.0 * std::numbers::pi * I * sigma / 4.0) * detail::qpow_numeric(0.75 * sigma, K);
    return prefactor * sum;
}

/**
 * Exact SO(3) invariant Z'(M, L; K).
 *
 * Sums prod_j (q^{b_j/2} - q^{-b_j/2}) J_{b_j}(f_j) over odd colors 0 < b_j < K,
 * multiplies by the embedded unknots' quantum integers, then resolves the
 * K^{-1/2} phase of each component through its Gauss element.
 * Throws hypothesis_error when K divides h1.
 */
inline CycInt so3_Zprime(const SurgeryPresentation& pres, PrimeK K) {
    pres.validate();
    const long k = K.value();
    for (long f : pres.framings)
        if (mod(f, k) == 0)
            throw hypothesis_error("so3_Zprime: K = " + std::to_string(k) + " divides h1 (framing " + std::to_string(f) + ")");

    const std::size_t L = pres.framings.size();
    // Per-component summands, indexed by (b - 1) / 2.
    std::vector<std::vector<CycInt>> terms(L);
    for (std::size_t j = 0; j < L; ++j)
        for (long b = 1; b < k; b += 2) terms[j].push_back(half_difference(b, K) * jones_framed_unknot(b, pres.framings[j], K));

    CycInt sum = CycInt::zero(K);
    detail::for_each_color_tuple(L, 1, 2, k, [&](const std::vector<long>& colors) {
        CycInt term = CycInt::one(K);
        for (std::size_t j = 0; j < L; ++j) term *= terms[j][static_cast<std::size_t>((colors[j] - 1) / 2)];
        sum += term;
    });

    const long three_four_star = mod(3 * inverse_mod_k(4, K), k);
    for (long f : pres.framings) {
        sum = sum.mul_qpow(sign(f) * three_four_star) * Integer(sign(f) * legendre(Integer(std::labs(f)), K));
        sum = gauss_element(Integer(f), K).divide(sum);
    }
    for (long c : pres.embedded_colors) sum *= quantum_integer(c, K);
    return sum;
}

/// Ohtsuki's a_n(M; K): coordinates of Z' in the basis (q-1)^n.
inline std::vector<Integer> extract_a_n(const CycInt& z) { return to_h_basis(z); }

/**
 * Closed form for Z'(L(p,1)):
 *   legendre(|p|) sign(p) q^{4*(p + 2p* - 3 sign p)} (y^{p*} - y^{-p*}) / (y - y^{-1}),
 * y = q^{2*}. The ratio is expanded as sum_{j<p*} y^{p*-1-2j} with p* in [1, K).
 */
inline CycInt lens_zprime_closed_form(long p, PrimeK K) {
    const long k = K.value();
    if (mod(p, k) == 0) throw hypothesis_error("lens_zprime_closed_form: K divides p");
    const long ps = inverse_mod_k(mod(p, k), K);
    const long two_star = inverse_mod_k(2, K);
    const long four_star = inverse_mod_k(4, K);
    CycInt ratio = CycInt::zero(K);
    for (long j = 0; j < ps; ++j) ratio.add_monomial(mod(two_star * (ps - 1 - 2 * j), k), 1);
    const long e = mod(four_star * mod(p + 2 * ps - 3 * sign(p), k), k);
    return ratio.mul_qpow(e) * Integer(legendre(Integer(std::labs(p)), K) * sign(p));
}

/**
 * |Z(M, L; K) - c Z'(M, L; K)| with c = Z(M; 3) when K = 3 (mod 4) and its
 * conjugate when K = 1 (mod 4).
 */
inline double su2_so3_bridge_residual(const SurgeryPresentation& pres, PrimeK K) {
    const std::complex<double> z = wrt_Z_numeric(pres, K.value());
    SurgeryPresentation bare{pres.framings, {}};
    std::complex<double> z3 = wrt_Z_numeric(bare, 3);
    if (kappa(K) == 1) z3 = std::conj(z3);
    return std::abs(z - z3 * so3_Zprime(pres, K).to_complex());
}

}  // namespace qinv
