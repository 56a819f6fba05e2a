#pragma once

// Shared fixtures for the unit tests: seeded generators and small oracles
// that do not go through the library's own algorithms.

#include "qinv/qinv.hpp"

#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace qinv::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline std::vector<long> primes_between(long lo, long hi) {
    std::vector<long> out;
    for (long k = lo; k <= hi; ++k) {
        bool prime = k >= 2;
        for (long d = 2; d * d <= k && prime; ++d) prime = k % d != 0;
        if (prime && k % 2 == 1) out.push_back(k);
    }
    return out;
}

inline CycInt random_cycint(PrimeK K, long bound = 20) {
    std::vector<Integer> c(static_cast<std::size_t>(K.value() - 1));
    for (auto& x : c) x = uniform(-bound, bound);
    return CycInt(K, std::move(c));
}

inline HSeries random_series(std::size_t trunc, long bound = 9) {
    std::vector<Rational> c(trunc);
    for (auto& x : c) {
        x = Rational(uniform(-bound, bound), 1L << uniform(0, 3));
        x.canonicalize();
    }
    return HSeries(std::move(c));
}

/// Legendre symbol by listing squares.
inline int brute_legendre(long x, long K) {
    x = ((x % K) + K) % K;
    if (x == 0) return 0;
    for (long y = 1; y < K; ++y)
        if ((y * y) % K == x) return 1;
    return -1;
}

/// Brute-force modular inverse.
inline long brute_inverse(long n, long K) {
    n = ((n % K) + K) % K;
    for (long y = 1; y < K; ++y)
        if ((n * y) % K == 1) return y;
    return -1;
}

inline std::complex<double> qnum(double r, long K) { return std::polar(1.0, 2.0 * std::numbers::pi * r / static_cast<double>(K)); }

/// Sum of the power-basis coefficients at q = exp(2 pi i / K) term by term.
inline std::complex<double> eval_poly(const std::vector<long>& exponents, long K) {
    std::complex<double> s = 0.0;
    for (long e : exponents) s += qnum(static_cast<double>(e), K);
    return s;
}

}  // namespace qinv::test
