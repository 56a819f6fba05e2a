#pragma once

/**
 * @file verifier.hpp
 * @brief Congruence checks between the exact SO(3) invariant and the Ohtsuki series.
 *
 * For an odd prime K not dividing h1:
 *   Z'(M; K) = legendre(h1) sum_n [lambda_n] h^n   modulo (h^{N+1})
 * and, coefficientwise, a_n = legendre(h1) lambda_n mod K for n <= (K-3)/2.
 * A prime dividing h1 violates the hypotheses and yields Status::skipped.
 */

#include "qinv/cyclotomic.hpp"
#include "qinv/hseries.hpp"
#include "qinv/invariants.hpp"
#include "qinv/numtheory.hpp"
#include "qinv/tcc.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qinv {

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

/// Combined exit status: any failure wins, then any pass, then skipped.
inline Status combine(Status a, Status b) {
    if (a == Status::fail || b == Status::fail) return Status::fail;
    if (a == Status::pass || b == Status::pass) return Status::pass;
    return Status::skipped;
}

/// 0 when everything passed, 2 when nothing ran, 1 on any failure.
inline int exit_code(Status s) {
    switch (s) {
        case Status::pass: return 0;
        case Status::skipped: return 2;
        case Status::fail: return 1;
    }
    return 1;
}

struct VerificationReport {
    SurgeryPresentation manifold;
    long prime = 0;
    Integer h1 = 1;
    int legendre_h1 = 0;
    std::vector<Integer> a_n;
    HSeries lambda;
    CycInt zprime{PrimeK(3)};
    long lawrence_depth_checked = -1;
    bool lawrence_pass = false;
    bool ohtsuki_pass = false;
    Status status = Status::skipped;
    std::string note;
    std::map<std::string, double> timings_ms;
};

/// K-2 for a single surgery (full h-basis), (K-3)/2 otherwise.
inline long default_depth(const SurgeryPresentation& pres, PrimeK K) {
    return pres.framings.size() <= 1 ? K.value() - 2 : (K.value() - 3) / 2;
}

/// legendre(h1) sum_{n<=N} [lambda_n]_N h^n.
inline CycInt lawrence_truncation(const OhtsukiSeries& s, PrimeK K, long N) {
    if (N < 0) throw std::invalid_argument("lawrence_truncation: depth must be nonnegative");
    return wedge(s.lambda, K, static_cast<std::size_t>(N)) * Integer(legendre(s.h1, K));
}

inline bool check_lawrence(const CycInt& zprime, const OhtsukiSeries& s, long N) {
    return congruent_to_order(zprime, lawrence_truncation(s, zprime.K(), N), N + 1);
}

/// Throws hypothesis_error when K divides h1.
inline bool check_lawrence(const SurgeryPresentation& pres, PrimeK K, long N) {
    const CycInt z = so3_Zprime(pres, K);
    const std::size_t trunc = std::max(default_trunc(), static_cast<std::size_t>(N + 1));
    return check_lawrence(z, ohtsuki_series(pres, trunc), N);
}

inline bool check_ohtsuki(const std::vector<Integer>& a_n, const OhtsukiSeries& s, PrimeK K) {
    const long k = K.value();
    const long top = (k - 3) / 2;
    if (static_cast<long>(s.trunc()) <= top) throw std::invalid_argument("check_ohtsuki: series too short");
    const int leg = legendre(s.h1, K);
    for (long n = 0; n <= top; ++n) {
        const Integer rhs = leg * remainder_mod(s.lambda[static_cast<std::size_t>(n)], K, 0);
        if (mod(a_n[static_cast<std::size_t>(n)] - rhs, k) != 0) return false;
    }
    return true;
}

/// Throws hypothesis_error when K divides h1.
inline bool check_ohtsuki(const SurgeryPresentation& pres, PrimeK K) {
    const CycInt z = so3_Zprime(pres, K);
    const std::size_t trunc = std::max(default_trunc(), static_cast<std::size_t>(K.value()));
    return check_ohtsuki(extract_a_n(z), ohtsuki_series(pres, trunc), K);
}

namespace detail {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/**
 * Runs both checks for one prime against a precomputed series. A negative
 * depth selects default_depth. The series must reach the chosen depth.
 */
inline VerificationReport verify_prime(const SurgeryPresentation& pres, const OhtsukiSeries& series, PrimeK K, long depth = -1) {
    VerificationReport r;
    r.manifold = pres;
    r.prime = K.value();
    r.h1 = pres.h1();
    r.lambda = series.lambda;
    if (mod(r.h1, K.value()) == 0) {
        r.status = Status::skipped;
        r.note = "K divides h1";
        return r;
    }
    r.legendre_h1 = legendre(r.h1, K);
    const long N = depth < 0 ? default_depth(pres, K) : depth;
    if (static_cast<long>(series.trunc()) <= std::max(N, (K.value() - 3) / 2))
        throw std::invalid_argument("verify_prime: series truncated below the requested depth");

    r.timings_ms["zprime"] = detail::time_ms([&] { r.zprime = so3_Zprime(pres, K); });
    r.a_n = extract_a_n(r.zprime);
    r.lawrence_depth_checked = N;
    r.timings_ms["lawrence"] = detail::time_ms([&] { r.lawrence_pass = check_lawrence(r.zprime, series, N); });
    r.timings_ms["ohtsuki"] = detail::time_ms([&] { r.ohtsuki_pass = check_ohtsuki(r.a_n, series, K); });
    r.status = (r.lawrence_pass && r.ohtsuki_pass) ? Status::pass : Status::fail;
    return r;
}

/// Verifies each prime concurrently; reports come back in input order.
inline std::vector<VerificationReport> verify_primes(const SurgeryPresentation& pres, const std::vector<long>& primes, std::optional<long> depth = {}) {
    pres.validate();
    std::size_t trunc = default_trunc();
    for (long k : primes) {
        const PrimeK K(k);
        const long N = depth ? *depth : default_depth(pres, K);
        trunc = std::max(trunc, static_cast<std::size_t>(std::max(N, (k - 3) / 2) + 1));
    }
    OhtsukiSeries series;
    const double lambda_ms = detail::time_ms([&] { series = ohtsuki_series(pres, trunc); });

    std::vector<std::future<VerificationReport>> jobs;
    jobs.reserve(primes.size());
    for (long k : primes)
        jobs.push_back(std::async(std::launch::async, [&pres, &series, k, depth] { return verify_prime(pres, series, PrimeK(k), depth.value_or(-1)); }));

    std::vector<VerificationReport> out;
    out.reserve(primes.size());
    for (auto& j : jobs) {
        out.push_back(j.get());
        out.back().timings_ms["lambda"] = lambda_ms;
    }
    return out;
}

inline Status overall_status(const std::vector<VerificationReport>& reports) {
    Status s = Status::skipped;
    for (const auto& r : reports) s = combine(s, r.status);
    return s;
}

}  // namespace qinv
