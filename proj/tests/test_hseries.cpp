#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace qinv;
using namespace qinv::test;

namespace {

HSeries series(std::initializer_list<Rational> c) { return HSeries(std::vector<Rational>(c)); }

}  // namespace

TEST(QPowSeries, IntegerExponents) {
    EXPECT_EQ(qpow_series(1, 4), series({1, 1, 0, 0}));
    EXPECT_EQ(qpow_series(-1, 5), series({1, -1, 1, -1, 1}));
    EXPECT_EQ(qpow_series(0, 3), HSeries::one(3));
    EXPECT_EQ(qpow_series(3, 5), series({1, 3, 3, 1, 0}));
}

TEST(QPowSeries, HalfExponent) {
    EXPECT_EQ(qpow_series(make_rational(-1, 2), 4), series({1, make_rational(-1, 2), make_rational(3, 8), make_rational(-5, 16)}));
}

TEST(QPowSeries, ExponentsAdd) {
    for (int trial = 0; trial < 50; ++trial) {
        const Rational r = make_rational(uniform(-12, 12), uniform(1, 9));
        const Rational s = make_rational(uniform(-12, 12), uniform(1, 9));
        const std::size_t n = static_cast<std::size_t>(uniform(1, 12));
        EXPECT_EQ(qpow_series(r, n) * qpow_series(s, n), qpow_series(r + s, n));
    }
    EXPECT_EQ(qpow_series(make_rational(1, 2), 8) * qpow_series(make_rational(1, 2), 8), qpow_series(1, 8));
}

TEST(HSeries, TruncationRules) {
    const HSeries a = random_series(6), b = random_series(4);
    EXPECT_EQ((a + b).trunc(), 4u);
    EXPECT_EQ((a * b).trunc(), 4u);
    EXPECT_EQ(a.truncated(3).trunc(), 3u);
    EXPECT_EQ(a.truncated(10).trunc(), 6u);
    EXPECT_EQ(a.shift_up(2).trunc(), 8u);
    EXPECT_EQ(a.shift_up(2)[2], a[0]);
}

TEST(HSeries, InverseAndDivision) {
    for (int trial = 0; trial < 30; ++trial) {
        HSeries a = random_series(8);
        if (a[0] == 0) a[0] = 1;
        EXPECT_EQ(a * a.inverse(), HSeries::one(8));
        EXPECT_EQ(a / a, HSeries::one(8));
    }
    EXPECT_THROW(series({0, 1}).inverse(), std::domain_error);
    const HSeries d = (qpow_series(make_rational(1, 2), 9) - qpow_series(make_rational(-1, 2), 9)).divide_by_h_power(1);
    EXPECT_EQ(d / d, HSeries::one(8));
}

TEST(HSeries, LaurentShiftMustCancel) {
    EXPECT_EQ(series({0, 0, 2, 3}).divide_by_h_power(2), series({2, 3}));
    EXPECT_THROW(series({0, 1, 2}).divide_by_h_power(2), std::domain_error);
    EXPECT_THROW(series({0}).divide_by_h_power(2), std::invalid_argument);
    EXPECT_EQ(series({0, 0, 5}).order_of_vanishing(), 2u);
}

TEST(HSeries, Str) {
    EXPECT_EQ(series({1, make_rational(-1, 2)}).str(), "(1) + (-1/2)h + O(h^2)");
    EXPECT_EQ(HSeries(3).str(), "0 + O(h^3)");
}

TEST(DefaultTrunc, EnvironmentOverride) {
    ::unsetenv("QINV_TRUNC");
    EXPECT_EQ(default_trunc(), kDefaultTrunc);
    ::setenv("QINV_TRUNC", "24", 1);
    EXPECT_EQ(default_trunc(), 24u);
    ::setenv("QINV_TRUNC", "garbage", 1);
    EXPECT_EQ(default_trunc(), kDefaultTrunc);
    ::setenv("QINV_TRUNC", "-3", 1);
    EXPECT_EQ(default_trunc(), kDefaultTrunc);
    ::unsetenv("QINV_TRUNC");
}

TEST(Wedge, Examples) {
    for (long k : {3L, 5L, 7L}) {
        const PrimeK K(k);
        EXPECT_EQ(wedge(series({1, 1, 0}), K, 1), CycInt::qpow(1, K));
        EXPECT_EQ(wedge(series({1, 1, 0}), K, 2), CycInt::qpow(1, K));
    }
    EXPECT_THROW(wedge(series({1, 1}), PrimeK(5), 2), std::invalid_argument);
    EXPECT_THROW(wedge(series({make_rational(1, 5)}), PrimeK(5), 0), hypothesis_error);
}

TEST(Wedge, SquareRootOfQ) {
    // The series root is the one congruent to 1 mod h, i.e. q^{2*} = -half_power.
    for (long k : {3L, 5L, 7L, 11L}) {
        const PrimeK K(k);
        const CycInt w = wedge(qpow_series(make_rational(1, 2), 3), K, 2);
        EXPECT_TRUE(congruent_to_order(w, -half_power(K), 3));
        EXPECT_TRUE(congruent_to_order(w, CycInt::qpow(inverse_mod_k(2, K), K), 3));
        EXPECT_FALSE(congruent_to_order(w, half_power(K), 1));
        EXPECT_TRUE(congruent_to_order(w * w, CycInt::qpow(1, K), 3));
    }
}

TEST(Wedge, RationalPowerImages) {
    for (long k : primes_between(3, 31)) {
        const PrimeK K(k);
        for (long n = -10; n <= 10; ++n) {
            if (n == 0 || n % k == 0) continue;
            for (long m = -10; m <= 10; m += 3)
                for (long N = 0; N <= 4; ++N) {
                    const Integer e = Integer(m) * mod_inverse(Integer(n), power_of(K, static_cast<unsigned long>(N + 1)));
                    const CycInt lhs = wedge(qpow_series(make_rational(m, n), static_cast<std::size_t>(N + 1)), K, static_cast<std::size_t>(N));
                    EXPECT_GE(h_valuation(lhs - CycInt::qpow(e, K)), N + 1) << "K=" << k << " m=" << m << " n=" << n << " N=" << N;
                }
        }
    }
}

TEST(Wedge, RingHomomorphismToOrder) {
    for (long k : {3L, 5L, 7L, 11L}) {
        const PrimeK K(k);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t N = static_cast<std::size_t>(uniform(0, 5));
            const HSeries a = random_series(N + 1), b = random_series(N + 1);
            const long order = static_cast<long>(N) + 1;
            EXPECT_TRUE(congruent_to_order(wedge(a * b, K, N), wedge(a, K, N) * wedge(b, K, N), order));
            EXPECT_TRUE(congruent_to_order(wedge(a + b, K, N), wedge(a, K, N) + wedge(b, K, N), order));
        }
    }
}

TEST(Wedge, StableUnderDeeperDepth) {
    for (long k : {3L, 5L, 7L}) {
        const PrimeK K(k);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t N = static_cast<std::size_t>(uniform(0, 5));
            const HSeries a = random_series(N + 2);
            EXPECT_TRUE(congruent_to_order(wedge(a, K, N), wedge(a, K, N + 1), static_cast<long>(N) + 1));
        }
    }
}
