#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[q], q a primitive K-th root of unity, K an odd prime.
 *
 * Elements are stored as K-1 integer coefficients on 1, q, ..., q^{K-2}; the
 * relation 1 + q + ... + q^{K-1} = 0 is applied eagerly so the representation
 * is unique. The second basis (q-1)^n, n = 0..K-2, carries Ohtsuki's a_n.
 *
 * Write h = q - 1. The ideal (h) is the prime above K and K = unit * h^{K-1};
 * h_valuation() measures K-adic closeness in those terms.
 */

#include "qinv/numtheory.hpp"

#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

/// Raised when a quotient exists in Q(q) but not in Z[q].
class not_divisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

class CycInt {
public:
    explicit CycInt(PrimeK K) : K_(K), c_(static_cast<std::size_t>(K.value() - 1)) {}

    CycInt(PrimeK K, const Integer& constant) : CycInt(K) { c_[0] = constant; }

    /// From coefficients on 1, q, ..., q^{K-2}.
    CycInt(PrimeK K, std::vector<Integer> coeffs) : K_(K), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(K.value() - 1))
            throw std::invalid_argument("CycInt: expected " + std::to_string(K.value() - 1) + " coefficients");
    }

    /// From coefficients on 1, q, ..., q^{K-1} (length K), reducing mod the
    /// cyclotomic polynomial.
    static CycInt from_power_basis(PrimeK K, std::vector<Integer> full) {
        const std::size_t k = static_cast<std::size_t>(K.value());
        if (full.size() != k) throw std::invalid_argument("from_power_basis: expected K coefficients");
        Integer top = full[k - 1];
        full.pop_back();
        if (top != 0)
            for (auto& x : full) x -= top;
        return CycInt(K, std::move(full));
    }

    static CycInt zero(PrimeK K) { return CycInt(K); }
    static CycInt one(PrimeK K) { return CycInt(K, Integer(1)); }

    /// q^{e mod K}.
    static CycInt qpow(long e, PrimeK K) {
        CycInt out(K);
        out.add_monomial(e, 1);
        return out;
    }

    static CycInt qpow(const Integer& e, PrimeK K) { return qpow(mod(e, K.value()), K); }

    /// h = q - 1.
    static CycInt h(PrimeK K) { return qpow(1, K) - one(K); }

    PrimeK K() const noexcept { return K_; }
    std::span<const Integer> coeffs() const noexcept { return c_; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Adds c * q^e in place.
    void add_monomial(long e, const Integer& c) {
        const long k = K_.value();
        const long r = mod(e, k);
        if (r == k - 1) {
            for (auto& x : c_) x -= c;
        } else {
            c_[static_cast<std::size_t>(r)] += c;
        }
    }

    CycInt& operator+=(const CycInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    CycInt& operator*=(const Integer& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    CycInt operator-() const {
        CycInt out(*this);
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const Integer& s) { return a *= s; }
    friend CycInt operator*(const Integer& s, CycInt a) { return a *= s; }

    // Schoolbook product in Z[q]/(q^K - 1), then one reduction.
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check_same(b);
        const std::size_t k = static_cast<std::size_t>(a.K_.value());
        std::vector<Integer> full(k);
        Integer t;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                std::size_t idx = i + j;
                if (idx >= k) idx -= k;
                mpz_addmul(full[idx].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
            }
        }
        return from_power_basis(a.K_, std::move(full));
    }

    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    /// Multiplication by q^e, a permutation of the power basis.
    CycInt mul_qpow(long e) const {
        const long k = K_.value();
        std::vector<Integer> full(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < c_.size(); ++i)
            full[static_cast<std::size_t>(mod(static_cast<long>(i) + e, k))] = c_[i];
        return from_power_basis(K_, std::move(full));
    }

    /// Multiplication by h = q - 1.
    CycInt mul_h() const { return mul_qpow(1) - *this; }

    /// Complex conjugation q -> q^{-1}.
    CycInt conj() const {
        const long k = K_.value();
        std::vector<Integer> full(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < c_.size(); ++i)
            full[static_cast<std::size_t>(mod(-static_cast<long>(i), k))] = c_[i];
        return from_power_basis(K_, std::move(full));
    }

    CycInt pow(unsigned long e) const {
        CycInt result = one(K_), base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.K_ == b.K_ && a.c_ == b.c_; }

    /// Evaluation at q = exp(2 pi i / K).
    std::complex<double> to_complex() const {
        const double k = static_cast<double>(K_.value());
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            acc += c_[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / k);
        }
        return acc;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::string coef = c_[i].get_str();
            if (!out.empty()) out += (coef[0] == '-') ? " - " : " + ";
            else if (coef[0] == '-') out += "-";
            if (coef[0] == '-') coef.erase(0, 1);
            if (i == 0) out += coef;
            else {
                if (coef != "1") out += coef + "*";
                out += i == 1 ? std::string("q") : "q^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_same(const CycInt& o) const {
        if (!(K_ == o.K_)) throw std::invalid_argument("CycInt: mismatched K");
    }

    PrimeK K_;
    std::vector<Integer> c_;
};

// --- substitution rules for fractional q-powers ----------------------------

/// q^{1/2} as the exact element -q^{2*}.
inline CycInt half_power(PrimeK K) { return -CycInt::qpow(inverse_mod_k(2, K), K); }

/// q^{e/4} as q^{4* e}.
inline CycInt quarter_power(long e, PrimeK K) {
    return CycInt::qpow(mod(Integer(Integer(inverse_mod_k(4, K)) * e), K.value()), K);
}

/// q^{b/2} - q^{-b/2} for odd b, equal to -(q^{2* b} - q^{-2* b}).
inline CycInt half_difference(long b, PrimeK K) {
    if (b % 2 == 0) throw std::invalid_argument("half_difference: exponent must be odd");
    const long e = mod(Integer(Integer(inverse_mod_k(2, K)) * b), K.value());
    return CycInt::qpow(-e, K) - CycInt::qpow(e, K);
}

// --- the (q-1)-adic basis ---------------------------------------------------

/// Coefficients a_0..a_{K-2} with a = sum a_n h^n. Since the power basis stops
/// at q^{K-2}, a_n = sum_i C(i, n) c_i with no reduction needed.
inline std::vector<Integer> to_h_basis(const CycInt& a) {
    const std::size_t n = a.coeffs().size();
    std::vector<Integer> out(n);
    Integer binom;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), i, j);
            mpz_addmul(out[j].get_mpz_t(), binom.get_mpz_t(), a[i].get_mpz_t());
        }
    }
    return out;
}

inline CycInt from_h_basis(PrimeK K, std::span<const Integer> hcoeffs) {
    const std::size_t n = static_cast<std::size_t>(K.value() - 1);
    if (hcoeffs.size() != n) throw std::invalid_argument("from_h_basis: expected K-1 coefficients");
    std::vector<Integer> c(n);
    Integer binom;
    for (std::size_t j = 0; j < n; ++j) {
        if (hcoeffs[j] == 0) continue;
        // h^j = sum_i C(j, i) (-1)^{j-i} q^i
        for (std::size_t i = 0; i <= j; ++i) {
            mpz_bin_uiui(binom.get_mpz_t(), j, i);
            if ((j - i) % 2) mpz_submul(c[i].get_mpz_t(), binom.get_mpz_t(), hcoeffs[j].get_mpz_t());
            else mpz_addmul(c[i].get_mpz_t(), binom.get_mpz_t(), hcoeffs[j].get_mpz_t());
        }
    }
    return CycInt(K, std::move(c));
}

namespace detail {

// One step of exact division by h in the h-basis. Z[q] = Z[h]/(Phi(1+h)) with
// Phi(1+h) = sum_{j=0}^{K-1} C(K, j+1) h^j monic, so a = h b forces
// b_{K-2} = -a_0 / K and b_{n-1} = a_n + b_{K-2} C(K, n+1).
inline bool divide_h_basis_by_h(std::vector<Integer>& a, long K) {
    const std::size_t n = a.size();
    if (!mpz_divisible_ui_p(a[0].get_mpz_t(), static_cast<unsigned long>(K))) return false;
    Integer top;
    mpz_divexact_ui(top.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(K));
    top = -top;
    Integer binom;
    for (std::size_t i = 1; i < n; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(K), i + 1);
        a[i - 1] = a[i];
        mpz_addmul(a[i - 1].get_mpz_t(), top.get_mpz_t(), binom.get_mpz_t());
    }
    a[n - 1] = top;
    return true;
}

}  // namespace detail

/// Largest j with a in (h^j); kInfiniteValuation for a = 0.
inline long h_valuation(const CycInt& a) {
    if (a.is_zero()) return kInfiniteValuation;
    auto v = to_h_basis(a);
    long j = 0;
    while (detail::divide_h_basis_by_h(v, a.K().value())) ++j;
    return j;
}

/// h_valuation(a) >= j, stopping after j divisions.
inline bool in_h_power_ideal(const CycInt& a, long j) {
    if (j <= 0 || a.is_zero()) return true;
    auto v = to_h_basis(a);
    for (long i = 0; i < j; ++i) {
        if (!detail::divide_h_basis_by_h(v, a.K().value())) return false;
    }
    return true;
}

/// a / h, throwing not_divisible when h does not divide a.
inline CycInt divide_by_h(const CycInt& a) {
    auto v = to_h_basis(a);
    if (!detail::divide_h_basis_by_h(v, a.K().value())) throw not_divisible("divide_by_h: element is not in (h)");
    return from_h_basis(a.K(), v);
}

/// a / n for an integer n, exact.
inline CycInt divide_exact(const CycInt& a, const Integer& n) {
    if (n == 0) throw std::invalid_argument("divide_exact: division by zero");
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t())) throw not_divisible("divide_exact: not divisible by " + n.get_str());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    }
    return CycInt(a.K(), std::move(c));
}

/**
 * Exact quotient a / b in Z[q].
 *
 * Solves M_b x = a over Q, where column j of M_b is b * q^j, using fraction-free
 * (Bareiss) elimination, then requires the solution to be integral.
 */
inline CycInt divide_exact(const CycInt& a, const CycInt& b) {
    if (!(a.K() == b.K())) throw std::invalid_argument("divide_exact: mismatched K");
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    const PrimeK K = a.K();
    const std::size_t n = static_cast<std::size_t>(K.value() - 1);

    // Augmented matrix [M_b | a].
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        CycInt col = b.mul_qpow(static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    for (std::size_t i = 0; i < n; ++i) m[i][n] = a[i];

    Integer prev = 1, t;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("divide_exact: singular multiplication matrix");
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                t = m[i][j] * m[k][k];
                mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = m[ii][n];
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(m[ii][j]) * x[j];
        x[ii] = s / Rational(m[ii][ii]);
    }
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].get_den() != 1) throw not_divisible("divide_exact: quotient is not in Z[q]");
        c[i] = x[i].get_num();
    }
    CycInt quotient(K, std::move(c));
    if (!(quotient * b == a)) throw std::logic_error("divide_exact: verification failed");
    return quotient;
}

// --- Gauss elements ---------------------------------------------------------

/// G_p = sum_{g=1..K} q^{p g^2}, the exact stand-in for K^{1/2} times an
/// eighth-root phase. Satisfies G_p * conj(G_p) = K and G_p^2 = kappa K.
class GaussElement {
public:
    GaussElement(const Integer& p, PrimeK K) : p_(p), value_(K) {
        if (mod(p, K.value()) == 0)
            throw hypothesis_error("gauss_element: K = " + std::to_string(K.value()) + " divides p = " + p.get_str());
        const long pr = mod(p, K.value());
        for (long g = 1; g <= K.value(); ++g) value_.add_monomial(mod(pr * mod(g * g, K.value()), K.value()), 1);
    }

    const Integer& p() const noexcept { return p_; }
    const CycInt& value() const noexcept { return value_; }
    operator const CycInt&() const noexcept { return value_; }

    /// x / G_p computed as x * conj(G_p) / K.
    CycInt divide(const CycInt& x) const { return divide_exact(x * value_.conj(), Integer(value_.K().value())); }

private:
    Integer p_;
    CycInt value_;
};

inline GaussElement gauss_element(const Integer& p, PrimeK K) { return GaussElement(p, K); }

}  // namespace qinv
