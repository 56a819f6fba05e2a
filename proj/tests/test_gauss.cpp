#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qinv;
using namespace qinv::test;

namespace {

// (y - 1/y)^{2m+2} as a Laurent polynomial in y, indexed from y^{-(2m+2)}.
std::vector<Integer> laurent_power(long m) {
    std::vector<Integer> poly{1};
    for (long i = 0; i < 2 * m + 2; ++i) {
        std::vector<Integer> next(poly.size() + 2);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 2] += poly[j];
            next[j] -= poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

std::complex<double> eval_series(const HSeries& s, std::complex<double> h) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = s.trunc(); n-- > 0;) acc = acc * h + s[n].get_d();
    return acc;
}

// h^{-1} (1/2) ratio of Gaussian integrals along the steepest-descent ray:
//   int q^{p b^2 / 4} (q^{b/2} - q^{-b/2})^{2m+2} db / int q^{p b^2 / 4} db.
std::complex<double> y_by_quadrature(long p, long m, double K) {
    const std::complex<double> I(0.0, 1.0);
    const double pi = std::numbers::pi;
    const std::complex<double> ray = std::polar(1.0, pi / 4.0 * (p > 0 ? 1.0 : -1.0));
    const double T = std::sqrt(2.0 * K * 50.0 / (pi * std::fabs(static_cast<double>(p))));
    const double dt = 0.02;
    std::complex<double> num = 0.0, den = 0.0;
    for (double t = -T; t <= T; t += dt) {
        const std::complex<double> b = ray * t;
        const std::complex<double> gauss = std::exp(2.0 * pi * I * static_cast<double>(p) * b * b / (4.0 * K));
        const std::complex<double> z = 2.0 * I * std::sin(pi * b / K);
        num += gauss * std::pow(z, static_cast<int>(2 * m + 2));
        den += gauss;
    }
    const std::complex<double> h = std::exp(2.0 * pi * I / K) - 1.0;
    return num / den / (2.0 * h);
}

}  // namespace

TEST(BinomRow, Examples) {
    EXPECT_EQ(binom_row(0).a, (std::vector<Integer>{-1, 1}));
    EXPECT_EQ(binom_row(1).a, (std::vector<Integer>{3, -4, 1}));
    EXPECT_THROW(binom_row(-1), std::invalid_argument);
}

TEST(BinomRow, ReconstructsTheLaurentPower) {
    for (long m = 0; m <= 12; ++m) {
        const auto row = binom_row(m);
        const auto poly = laurent_power(m);
        const std::size_t centre = static_cast<std::size_t>(2 * m + 2);
        EXPECT_EQ(poly[centre], 2 * row.a[0]);
        for (long n = 1; n <= m + 1; ++n) {
            EXPECT_EQ(poly[centre + 2 * static_cast<std::size_t>(n)], row.a[static_cast<std::size_t>(n)]);
            EXPECT_EQ(poly[centre - 2 * static_cast<std::size_t>(n)], row.a[static_cast<std::size_t>(n)]);
        }
        Integer total = 0;
        for (const auto& a : row.a) total += 2 * a;
        EXPECT_EQ(total, 0) << "vanishes at b = 0";
    }
}

TEST(GaussSumX, Examples) {
    EXPECT_EQ(gauss_sum_X(1, 0, PrimeK(5)), CycInt::one(PrimeK(5)));
    EXPECT_EQ(gauss_sum_X(2, 1, PrimeK(5)), -CycInt::qpow(2, PrimeK(5)));
    EXPECT_EQ(gauss_sum_X(-1, 2, PrimeK(7)), CycInt::qpow(4, PrimeK(7)));
    EXPECT_THROW(gauss_sum_X(10, 1, PrimeK(5)), hypothesis_error);
}

TEST(GaussSumX, MatchesNumericNormalizedSum) {
    // legendre(|p|) times the half-weighted odd sum over G_p, in floating point.
    for (long k : primes_between(3, 23))
        for (long p = -5; p <= 5; ++p) {
            if (p == 0 || p % k == 0) continue;
            for (long m = 0; m <= 4; ++m) {
                const long four_star = brute_inverse(4, k);
                std::complex<double> s = 0.0;
                for (long b = 1; b < k; b += 2) {
                    const long base = four_star * p * b * b;
                    s += qnum(static_cast<double>(base + m * b), k) + qnum(static_cast<double>(base - m * b), k);
                }
                s += 1.0;
                std::complex<double> g = 0.0;
                for (long c = 1; c <= k; ++c) g += qnum(static_cast<double>(p * c * c), k);
                const std::complex<double> expect = static_cast<double>(brute_legendre(std::labs(p), k)) * s / g;
                EXPECT_LT(std::abs(gauss_sum_X(p, m, PrimeK(k)).to_complex() - expect), 1e-9);
            }
        }
}

TEST(GaussIntegralX, Examples) {
    EXPECT_EQ(gauss_integral_X(5, 0, 6), HSeries::one(6));
    EXPECT_EQ(gauss_integral_X(1, 1, 6), qpow_series(-1, 6));
    EXPECT_EQ(gauss_integral_X(2, 1, 6), qpow_series(make_rational(-1, 2), 6));
    EXPECT_EQ(gauss_integral_X(-3, 2, 6), qpow_series(make_rational(4, 3), 6));
    EXPECT_THROW(gauss_integral_X(0, 1, 4), std::invalid_argument);
}

TEST(GaussSumY, BinomialRouteMatchesDirectSum) {
    for (long k : primes_between(3, 31))
        for (long p = -6; p <= 6; ++p) {
            if (p == 0 || p % k == 0) continue;
            for (long m = 0; m <= 5; ++m) {
                const CycInt y = gauss_sum_Y(p, m, PrimeK(k));
                EXPECT_EQ(y, gauss_sum_Y_direct(p, m, PrimeK(k))) << "K=" << k << " p=" << p << " m=" << m;
                EXPECT_GE(h_valuation(y), m) << "K=" << k << " p=" << p << " m=" << m;
            }
        }
}

TEST(GaussSumY, RejectsMultiplesOfK) {
    EXPECT_THROW(gauss_sum_Y(7, 1, PrimeK(7)), hypothesis_error);
    EXPECT_THROW(gauss_sum_Y_direct(-14, 0, PrimeK(7)), hypothesis_error);
    EXPECT_THROW(check_Y_correspondence(3, 1, PrimeK(3), 2), hypothesis_error);
}

TEST(GaussIntegralY, LeadingCoefficientAndVanishingOrder) {
    for (long p = -6; p <= 6; ++p) {
        if (p == 0) continue;
        EXPECT_EQ(gauss_integral_Y(p, 0, 4)[0], make_rational(-1, p));
        for (long m = 0; m <= 6; ++m) EXPECT_GE(gauss_integral_Y(p, m, 10).order_of_vanishing(), static_cast<std::size_t>(m)) << "p=" << p << " m=" << m;
    }
}

TEST(GaussIntegralY, CorrespondsToCyclotomicSum) {
    for (long k : {3L, 5L, 7L, 11L, 13L})
        for (long p = -6; p <= 6; ++p) {
            if (p == 0 || p % k == 0) continue;
            for (long m = 0; m <= 4; ++m)
                for (std::size_t depth = 0; depth <= 6; ++depth)
                    EXPECT_TRUE(check_Y_correspondence(p, m, PrimeK(k), depth)) << "K=" << k << " p=" << p << " m=" << m << " depth=" << depth;
        }
}

TEST(GaussIntegralY, MatchesContourQuadratureAtLargeK) {
    for (long p : {-3L, -1L, 1L, 2L, 5L})
        for (long m = 0; m <= 3; ++m)
            for (double K : {301.0, 1001.0}) {
                const std::complex<double> h = std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi / K)) - 1.0;
                const std::complex<double> series = eval_series(gauss_integral_Y(p, m, 30), h);
                const std::complex<double> quad = y_by_quadrature(p, m, K);
                EXPECT_LT(std::abs(series - quad), 1e-7 * std::abs(series)) << "p=" << p << " m=" << m << " K=" << K;
            }
}

TEST(GaussIntegralY, DecaysLikeKToTheMinusM) {
    for (long p : {-2L, 1L, 3L})
        for (long m = 1; m <= 3; ++m) {
            const double small = std::abs(y_by_quadrature(p, m, 301.0)) * std::pow(301.0, static_cast<double>(m));
            const double large = std::abs(y_by_quadrature(p, m, 1001.0)) * std::pow(1001.0, static_cast<double>(m));
            EXPECT_LT(large, 1.5 * small);
            EXPECT_GT(large, small / 1.5);
        }
}
