#pragma once

/**
 * @file numtheory.hpp
 * @brief Elementary modular arithmetic over an odd prime K.
 *
 * Legendre symbols, canonical modular inverses, the sign kappa(K), and the
 * K-adic truncation [x]_N of rationals whose denominators are prime to K.
 * All integers are GMP integers; K itself is a small machine integer since
 * it only ever indexes a cyclotomic ring of rank K-1.
 */

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace qinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a number-theoretic precondition fails (K | p, K | h1, ...).
/// Callers that sweep over primes treat this as "skipped", never as a failure.
class hypothesis_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// An odd prime, validated at construction.
class PrimeK {
public:
    explicit PrimeK(long value) : value_(value) {
        if (value < 3 || !is_prime(value))
            throw std::invalid_argument("K must be an odd prime, got " + std::to_string(value));
    }

    long value() const noexcept { return value_; }
    operator long() const noexcept { return value_; }

    friend bool operator==(PrimeK, PrimeK) = default;

private:
    long value_;
};

/// Nonnegative residue of x modulo m (m > 0).
inline long mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

inline long mod(const Integer& x, long m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

inline int sign(long x) { return (x > 0) - (x < 0); }
inline int sign(const Integer& x) { return sgn(x); }

/// Legendre symbol (x / K) via Euler's criterion.
inline int legendre(const Integer& x, PrimeK K) {
    Integer k = K.value();
    Integer r = x % k;
    if (r < 0) r += k;
    if (r == 0) return 0;
    Integer e = (k - 1) / 2, out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), k.get_mpz_t());
    return out == 1 ? 1 : -1;
}

/// The canonical inverse n* in [0, m). Throws hypothesis_error when gcd(n, m) != 1.
inline Integer mod_inverse(const Integer& n, const Integer& m) {
    if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Integer out;
    if (mpz_invert(out.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()) == 0)
        throw hypothesis_error("mod_inverse: " + n.get_str() + " is not invertible modulo " + m.get_str());
    if (out < 0) out += m;
    return out;
}

/// Small-modulus convenience: n* in [0, K).
inline long inverse_mod_k(long n, PrimeK K) {
    return mod_inverse(Integer(n), Integer(K.value())).get_si();
}

/// kappa = 1 if K = 1 (mod 4), -1 if K = 3 (mod 4).
inline int kappa(PrimeK K) { return K.value() % 4 == 1 ? 1 : -1; }

inline Integer power_of(PrimeK K, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(K.value()), e);
    return out;
}

/// [x]_N: the representative in [0, K^{N+1}) of the K-adic image of x.
inline Integer remainder_mod(const Rational& x, PrimeK K, unsigned long N) {
    Integer m = power_of(K, N + 1);
    Integer den = x.get_den();
    if (den % K.value() == 0)
        throw hypothesis_error("remainder_mod: denominator " + den.get_str() + " is divisible by K = "
                               + std::to_string(K.value()));
    Integer r = x.get_num() * mod_inverse(den, m);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// K-adic valuation of a nonzero rational.
inline long padic_valuation(const Rational& x, PrimeK K) {
    if (x == 0) throw std::domain_error("padic_valuation: valuation of 0 is infinite");
    Integer k = K.value();
    auto strip = [&](Integer v) {
        long count = 0;
        v = abs(v);
        while (mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t())) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
            ++count;
        }
        return count;
    };
    return strip(x.get_num()) - strip(x.get_den());
}

/// True when every prime factor of d divides base (d > 0). Used for the
/// "denominators in Z[1/2, 1/h1]" assertions.
inline bool supported_on(Integer d, const Integer& base) {
    d = abs(d);
    Integer g;
    while (d != 1) {
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), base.get_mpz_t());
        if (g == 1) return false;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t()))
            mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    return true;
}

/// n / d in lowest terms with a positive denominator.
inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qinv
