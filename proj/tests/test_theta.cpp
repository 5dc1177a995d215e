#include "ellident/theta.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ellident;
using K = ThetaKind;

namespace {

double rel_err(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

const std::vector<cplx> test_taus = {cplx{0.0, 1.0}, cplx{0.0, 1.2}, cplx{0.0, 2.0},
                                     cplx{0.3, 1.1}, cplx{-0.4, 0.9}};

TEST(Theta, Theta1VanishesAtZero) {
    EXPECT_EQ(theta(K::T1, cplx{0.0, 0.0}, cplx{0.0, 1.5}), (cplx{0.0, 0.0}));
}

TEST(Theta, Theta4PartialSumValue) {
    // q = 0.1 means tau = i ln(10)/pi; three terms of the alternating series:
    // 1 - 2(0.1) + 2(0.1)^4 - 2(0.1)^9.
    cplx tau{0.0, std::log(10.0) / pi};
    cplx v = theta(K::T4, cplx{0.0, 0.0}, tau);
    EXPECT_LT(std::abs(v - cplx{0.800199999998, 0.0}), 1e-11);
}

TEST(Theta, Parity) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ur(-1.5, 1.5);
    for (cplx tau : test_taus) {
        for (int i = 0; i < 20; ++i) {
            cplx z{ur(rng), 0.25 * ur(rng)};
            EXPECT_LT(rel_err(theta(K::T1, -z, tau), -theta(K::T1, z, tau)), 1e-12);
            for (K k : {K::T2, K::T3, K::T4})
                EXPECT_LT(rel_err(theta(k, -z, tau), theta(k, z, tau)), 1e-12);
        }
    }
}

TEST(Theta, Periodicity2Pi) {
    cplx tau{0.3, 1.1};
    cplx z{0.47, 0.11};
    for (K k : {K::T1, K::T2, K::T3, K::T4}) {
        cplx a = theta(k, z + 2.0 * pi, tau);
        cplx b = theta(k, z, tau);
        EXPECT_LT(rel_err(a, b), 1e-12) << static_cast<int>(k);
    }
    // One pi step flips the sign of theta1, theta2 only.
    EXPECT_LT(rel_err(theta(K::T1, z + pi, tau), -theta(K::T1, z, tau)), 1e-12);
    EXPECT_LT(rel_err(theta(K::T2, z + pi, tau), -theta(K::T2, z, tau)), 1e-12);
    EXPECT_LT(rel_err(theta(K::T3, z + pi, tau), theta(K::T3, z, tau)), 1e-12);
    EXPECT_LT(rel_err(theta(K::T4, z + pi, tau), theta(K::T4, z, tau)), 1e-12);
}

TEST(Theta, Quasiperiodicity) {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    cplx tau{0.4, 1.1};
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {-1, 2}}) {
        for (int i = 0; i < 5; ++i) {
            cplx z{ur(rng), 0.3 * ur(rng)};
            cplx lhs = theta(K::T1, z + (static_cast<double>(m) + static_cast<double>(n) * tau) * pi, tau);
            double sign = ((m + n) % 2 == 0) ? 1.0 : -1.0;
            cplx rhs = sign *
                       std::exp(-iu * pi * tau * static_cast<double>(n) * static_cast<double>(n) -
                                2.0 * iu * static_cast<double>(n) * z) *
                       theta(K::T1, z, tau);
            EXPECT_LT(rel_err(lhs, rhs), 1e-10) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Theta, QuasiperiodShiftCaseM0N1) {
    cplx tau{0.4, 1.1};
    cplx z{0.31, 0.14};
    cplx q = std::exp(iu * pi * tau);
    cplx lhs = theta(K::T1, z + pi * tau, tau);
    cplx rhs = -std::exp(-2.0 * iu * z) / q * theta(K::T1, z, tau);
    EXPECT_LT(rel_err(lhs, rhs), 1e-10);
}

TEST(ThetaDerivative, OddEvenStructure) {
    cplx tau{0.0, 1.3};
    // theta2 is even, so its first derivative vanishes at 0.
    EXPECT_LT(std::abs(theta_z_derivative(K::T2, 1, cplx{0.0, 0.0}, tau)), 1e-13);
    EXPECT_LT(std::abs(theta_z_derivative(K::T3, 1, cplx{0.0, 0.0}, tau)), 1e-13);
    EXPECT_LT(std::abs(theta_z_derivative(K::T4, 1, cplx{0.0, 0.0}, tau)), 1e-13);
}

TEST(ThetaDerivative, Theta1PrimeFactorizes) {
    cplx tau{0.0, 1.3};
    cplx lhs = theta_z_derivative(K::T1, 1, cplx{0.0, 0.0}, tau);
    cplx rhs = theta(K::T2, cplx{0.0, 0.0}, tau) * theta(K::T3, cplx{0.0, 0.0}, tau) *
               theta(K::T4, cplx{0.0, 0.0}, tau);
    EXPECT_LT(rel_err(lhs, rhs), 1e-11);
}

TEST(ThetaDerivative, AgainstFiniteDifferences) {
    cplx tau{0.3, 1.1};
    cplx z{0.37, 0.12};
    const double h = 1e-4;
    for (K k : {K::T1, K::T2, K::T3, K::T4}) {
        cplx d1 = (theta(k, z + h, tau) - theta(k, z - h, tau)) / (2.0 * h);
        cplx d2 = (theta(k, z + 0.5 * h, tau) - theta(k, z - 0.5 * h, tau)) / h;
        cplx num = (4.0 * d2 - d1) / 3.0;
        EXPECT_LT(rel_err(num, theta_z_derivative(k, 1, z, tau)), 1e-9);
    }
}

TEST(Theta1Prime0Product, MatchesSeriesDerivative) {
    for (cplx tau : {cplx{0.0, 1.2}, cplx{0.3, 1.0}, cplx{0.0, 5.0}}) {
        cplx a = theta1_prime0_product(tau);
        cplx b = theta_z_derivative(K::T1, 1, cplx{0.0, 0.0}, tau);
        EXPECT_LT(rel_err(a, b), 1e-11) << "tau = " << tau;
    }
}

TEST(Theta1Prime0Product, SmallNomeLeadingTerm) {
    cplx tau{0.0, 5.0};
    cplx q = std::exp(iu * pi * tau);
    cplx v = theta1_prime0_product(tau);
    EXPECT_LT(std::abs(v - 2.0 * std::exp(iu * pi * tau / 4.0)), 2.0 * std::abs(q) * std::abs(q));
}

TEST(TripleProduct, Theta1VanishesAtZ0) {
    cplx v = triple_product_theta1(cplx{0.0, 0.0}, cplx{0.0, 1.1});
    EXPECT_LT(std::abs(v), 1e-14);
}

TEST(TripleProduct, Theta1MatchesSeries) {
    EXPECT_LT(rel_err(triple_product_theta1(cplx{0.23, 0.0}, cplx{0.0, 1.1}),
                      theta(K::T1, pi * 0.23, cplx{0.0, 1.1})),
              1e-11);
    cplx z{0.4, 0.1}, tau{0.2, 1.3};
    EXPECT_LT(rel_err(triple_product_theta1(z, tau), theta(K::T1, pi * z, tau)), 1e-10);
}

TEST(TripleProduct, Theta3MatchesSeries) {
    cplx tau{0.0, 1.5};
    EXPECT_LT(rel_err(triple_product_theta3(cplx{0.31, 0.0}, tau),
                      theta(K::T3, pi * 0.31, tau)),
              1e-11);
    EXPECT_LT(rel_err(triple_product_theta3(cplx{0.5, 0.0}, cplx{0.0, 1.0}),
                      theta(K::T3, pi * 0.5, cplx{0.0, 1.0})),
              1e-11);
    // z = 0: the two shifted factors merge into a square.
    cplx q2 = std::exp(2.0 * iu * pi * tau);
    cplx prod{1.0, 0.0};
    for (int j = 1; j < 60; ++j) {
        cplx qj = std::pow(q2, j);
        cplx qh = std::exp(iu * pi * tau * (2.0 * j - 1.0));
        prod *= (1.0 - qj) * (1.0 + qh) * (1.0 + qh);
    }
    EXPECT_LT(rel_err(triple_product_theta3(cplx{0.0, 0.0}, tau), prod), 1e-11);
}

TEST(Theta, ModularTauPlusOne) {
    for (cplx tau : {cplx{0.0, 1.0}, cplx{0.4, 1.2}}) {
        cplx z{0.41, 0.17};
        cplx ratio = theta(K::T1, z, tau + 1.0) / theta(K::T1, z, tau);
        EXPECT_LT(std::abs(ratio - std::exp(iu * pi / 4.0)), 1e-9) << "tau = " << tau;
    }
}

TEST(Theta, ModularInversion) {
    for (cplx tau : {cplx{0.0, 1.0}, cplx{0.4, 1.2}}) {
        cplx z{0.29, 0.08};
        cplx lhs = theta(K::T1, z, -1.0 / tau);
        cplx rhs = -iu * std::sqrt(-iu * tau) * std::exp(iu * tau * z * z / pi) *
                   theta(K::T1, tau * z, tau);
        EXPECT_LT(rel_err(lhs, rhs), 1e-9) << "tau = " << tau;
    }
}

TEST(Theta, ArgumentReductionLargeImZ) {
    // Large |Im z| must agree with the quasi-period multiplier applied by hand.
    cplx tau{0.2, 1.1};
    cplx z{0.4, 6.0};
    cplx direct = theta(K::T1, z, tau);
    // reduce manually by n = 2 quasi-period steps (pi tau per step has Im 3.456)
    long n = std::lround(z.imag() / (pi * tau.imag()));
    cplx zr = z - static_cast<double>(n) * pi * tau;
    long m = std::lround(zr.real() / pi);
    zr -= static_cast<double>(m) * pi;
    double sign = ((m + n) % 2 == 0) ? 1.0 : -1.0;
    cplx expected = sign *
                    std::exp(-iu * pi * tau * static_cast<double>(n) * static_cast<double>(n) -
                             2.0 * iu * static_cast<double>(n) * zr) *
                    theta(K::T1, zr, tau);
    EXPECT_LT(rel_err(direct, expected), 1e-11);
    EXPECT_TRUE(std::isfinite(direct.real()) && std::isfinite(direct.imag()));
}

TEST(Theta, DomainErrors) {
    EXPECT_THROW(theta(K::T1, cplx{0.1, 0.0}, cplx{0.5, -1.0}), std::domain_error);
    EXPECT_THROW(theta(K::T3, cplx{0.1, 0.0}, cplx{0.5, 0.01}), std::domain_error);
    EXPECT_THROW(theta_z_derivative(K::T1, 9, cplx{0.0, 0.0}, cplx{0.0, 1.0}),
                 std::invalid_argument);
}

}  // namespace
