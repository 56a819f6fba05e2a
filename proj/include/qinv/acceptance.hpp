#pragma once

/**
 * @file acceptance.hpp
 * @brief The nine end-to-end sweeps that decide whether the library is correct.
 *
 * Each sweep returns the number of cases examined and the first failing case.
 * All comparisons are exact except the two numeric ones, which use 1e-9.
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/gauss.hpp"
#include "qinv/hseries.hpp"
#include "qinv/invariants.hpp"
#include "qinv/numtheory.hpp"
#include "qinv/tcc.hpp"
#include "qinv/verifier.hpp"

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace qinv::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::size_t cases = 0;
    std::string first_failure;
};

inline std::vector<long> odd_primes_up_to(long n) {
    std::vector<long> out;
    for (long k = 3; k <= n; k += 2)
        if (is_prime(k)) out.push_back(k);
    return out;
}

namespace detail {

class Tally {
public:
    Tally(int id, std::string title) { r_.id = id; r_.title = std::move(title); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.first_failure = describe();
        }
    }

    CriterionResult result() const { return r_; }

private:
    CriterionResult r_;
};

inline std::string tag(const std::string& name, long v) { return name + "=" + std::to_string(v); }

inline SurgeryPresentation lens(long p) { return SurgeryPresentation{{-p}, {}}; }

// (K, p) with K in the given set and 0 < |p| <= 12 coprime to K.
inline std::vector<std::pair<long, long>> lens_family(const std::vector<long>& primes) {
    std::vector<std::pair<long, long>> out;
    for (long k : primes)
        for (long p = -12; p <= 12; ++p)
            if (p != 0 && p % k != 0) out.emplace_back(k, p);
    return out;
}

inline std::vector<SurgeryPresentation> two_component_family() {
    std::vector<SurgeryPresentation> out;
    for (long a : {2L, 3L, 5L})
        for (long b : {2L, 3L, 5L}) out.push_back(SurgeryPresentation{{-a, -b}, {}});
    return out;
}

}  // namespace detail

/// Odd-color Gauss sums equal legendre(|p|) q^{-m^2 p*}.
inline CriterionResult gauss_closed_form() {
    detail::Tally t(1, "Gauss sum X: direct odd-color sum equals closed form (K <= 61, |p| <= 8, m <= 6)");
    for (long k : odd_primes_up_to(61)) {
        const PrimeK K(k);
        for (long p = -8; p <= 8; ++p) {
            if (p == 0 || p % k == 0) continue;
            for (long m = 0; m <= 6; ++m)
                t.expect(gauss_sum_X(p, m, K) == gauss_sum_X_closed_form(p, m, K),
                         [&] { return detail::tag("K", k) + " " + detail::tag("p", p) + " " + detail::tag("m", m); });
        }
    }
    return t.result();
}

/// h^m divides Y_cycl, and Y_cycl matches legendre(|p|) Y_asympt^wedge to order m+4.
inline CriterionResult y_smallness_and_correspondence() {
    detail::Tally t(2, "Gauss sum Y: h^m | Y and Y_cycl = legendre(|p|) Y_asympt^wedge mod h^{m+4}");
    for (long k : {3L, 5L, 7L, 11L, 13L, 17L}) {
        const PrimeK K(k);
        for (long p = -6; p <= 6; ++p) {
            if (p == 0 || p % k == 0) continue;
            for (long m = 0; m <= 4; ++m) {
                auto where = [&] { return detail::tag("K", k) + " " + detail::tag("p", p) + " " + detail::tag("m", m); };
                t.expect(h_valuation(gauss_sum_Y(p, m, K)) >= m, where);
                t.expect(check_Y_correspondence(p, m, K, static_cast<std::size_t>(m + 3)), where);
            }
        }
    }
    return t.result();
}

/// wedge(q^{m/n}) = q^{m n*} to order N+1 with n* inverted mod K^{N+1}.
inline CriterionResult rational_power_images() {
    detail::Tally t(3, "Rational q-powers: wedge(q^{m/n}) = q^{m n*} mod h^{N+1} (K <= 31, |m|,|n| <= 10, N <= 4)");
    for (long k : odd_primes_up_to(31)) {
        const PrimeK K(k);
        for (long n = -10; n <= 10; ++n) {
            if (n == 0 || n % k == 0) continue;
            for (long m = -10; m <= 10; ++m)
                for (long N = 0; N <= 4; ++N) {
                    const std::size_t depth = static_cast<std::size_t>(N);
                    const CycInt lhs = wedge(qpow_series(make_rational(m, n), depth + 1), K, depth);
                    const Integer e = Integer(m) * mod_inverse(Integer(n), power_of(K, static_cast<unsigned long>(N + 1)));
                    t.expect(congruent_to_order(lhs, CycInt::qpow(e, K), N + 1), [&] {
                        return detail::tag("K", k) + " " + detail::tag("m", m) + " " + detail::tag("n", n) + " " + detail::tag("N", N);
                    });
                }
        }
    }
    return t.result();
}

/// The odd-color surgery sum for L(p,1) equals its closed form.
inline CriterionResult lens_exactness() {
    detail::Tally t(4, "Lens spaces: surgery-sum Z' equals the closed form (K <= 13, |p| <= 12)");
    for (const auto& [k, p] : detail::lens_family({3, 5, 7, 11, 13})) {
        const PrimeK K(k);
        t.expect(so3_Zprime(detail::lens(p), K) == lens_zprime_closed_form(p, K),
                 [&] { return detail::tag("K", k) + " " + detail::tag("p", p); });
    }
    return t.result();
}

/// Z' agrees with legendre(h1) sum [lambda_n] h^n modulo h^{N+1}.
inline CriterionResult lawrence_congruence() {
    detail::Tally t(5, "Main congruence: lens spaces at depth K-2, two-component sums at depth (K-3)/2");
    for (const auto& [k, p] : detail::lens_family({3, 5, 7, 11, 13})) {
        const SurgeryPresentation pres = detail::lens(p);
        t.expect(check_lawrence(pres, PrimeK(k), k - 2), [&] { return detail::tag("K", k) + " " + detail::tag("p", p); });
    }
    for (const auto& pres : detail::two_component_family())
        for (long k : {7L, 11L, 13L})
            t.expect(check_lawrence(pres, PrimeK(k), (k - 3) / 2), [&] {
                return detail::tag("K", k) + " framings=(" + std::to_string(pres.framings[0]) + "," + std::to_string(pres.framings[1]) + ")";
            });
    return t.result();
}

/// a_0 and a_1 against 1/h1 and 3 lambda_CW / h1, plus the full range n <= (K-3)/2.
inline CriterionResult ohtsuki_low_coefficients() {
    detail::Tally t(6, "Coefficient congruences: a_0 = leg h1*, a_1 = leg (3 lambda_CW/h1) mod K, all n <= (K-3)/2");
    auto run = [&](const SurgeryPresentation& pres, long k) {
        const PrimeK K(k);
        const Integer h1 = pres.h1();
        const int leg = legendre(h1, K);
        const std::vector<Integer> a = extract_a_n(so3_Zprime(pres, K));
        const Rational lam1 = 3 * casson_walker(pres) / Rational(h1);
        auto where = [&] { return detail::tag("K", k) + " " + detail::tag("h1", h1.get_si()) + " " + detail::tag("L", static_cast<long>(pres.framings.size())); };
        t.expect(mod(a[0] - leg * remainder_mod(1 / Rational(h1), K, 0), k) == 0, where);
        t.expect(mod(a[1] - leg * remainder_mod(lam1, K, 0), k) == 0, where);
        t.expect(check_ohtsuki(pres, K), where);
    };
    for (const auto& [k, p] : detail::lens_family({3, 5, 7, 11, 13})) run(detail::lens(p), k);
    for (const auto& pres : detail::two_component_family())
        for (long k : {7L, 11L, 13L}) run(pres, k);
    return t.result();
}

/// Surgery through the unknot's knot table reproduces the lens-space series.
inline CriterionResult tcc_consistency() {
    detail::Tally t(7, "Surgery formula on the unknot table equals the lens-space series through h^8 (|p| <= 9)");
    for (long p = -9; p <= 9; ++p) {
        if (p == 0) continue;
        t.expect(tcc_surgery(dtable_unknot(-p), 9) == tcc_lens(p, 9), [&] { return detail::tag("p", p); });
    }
    return t.result();
}

/// lambda_CW(S^3) = 0 through p = +-1, and lambda_1 = 3 lambda_CW / h1.
inline CriterionResult casson_walker_sanity() {
    detail::Tally t(8, "Casson-Walker: lambda_CW(S^3) = 0 via p = +-1; lambda_1 = 3 lambda_CW / h1");
    for (long p : {1L, -1L}) t.expect(casson_walker_surgery(0, 1, 0, p) == 0, [&] { return detail::tag("p", p); });
    for (long p = -12; p <= 12; ++p) {
        if (p == 0) continue;
        const Rational lcw = casson_walker(detail::lens(p));
        const OhtsukiSeries s = tcc_lens(p, 3);
        t.expect(s.lambda[1] == 3 * lcw / Rational(std::labs(p)), [&] { return "lens " + detail::tag("p", p); });
    }
    for (const auto& pres : detail::two_component_family()) {
        const OhtsukiSeries s = ohtsuki_series(pres, 3);
        t.expect(s.lambda[1] == 3 * casson_walker(pres) / Rational(pres.h1()), [&] {
            return "framings=(" + std::to_string(pres.framings[0]) + "," + std::to_string(pres.framings[1]) + ")";
        });
    }
    return t.result();
}

/// |Z - c Z'| < 1e-9 on lens spaces, and the symmetry principle for framed unknots.
inline CriterionResult numeric_bridge() {
    detail::Tally t(9, "Numeric: |Z - Z(M;3)^(+-) Z'| < 1e-9 on lens spaces; symmetry principle for K <= 13, |p| <= 3");
    for (const auto& [k, p] : detail::lens_family({5, 7, 11, 13}))
        t.expect(su2_so3_bridge_residual(detail::lens(p), PrimeK(k)) < 1e-9, [&] { return detail::tag("K", k) + " " + detail::tag("p", p); });
    for (long k : odd_primes_up_to(13))
        for (long p = -3; p <= 3; ++p)
            for (long b = 1; b < k; ++b)
                t.expect(symmetry_principle_check(b, p, PrimeK(k)), [&] { return detail::tag("K", k) + " " + detail::tag("p", p) + " " + detail::tag("beta", b); });
    return t.result();
}

inline std::vector<CriterionResult> run_all() {
    return {gauss_closed_form(),  y_smallness_and_correspondence(), rational_power_images(),
            lens_exactness(),     lawrence_congruence(),            ohtsuki_low_coefficients(),
            tcc_consistency(),    casson_walker_sanity(),           numeric_bridge()};
}

inline std::string format(const CriterionResult& r) {
    std::string line = std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " [" + std::to_string(r.cases) + " cases]";
    if (!r.passed) line += " first failure: " + r.first_failure;
    return line;
}

}  // namespace qinv::acceptance
