#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cylrad/errors.hpp"
#include "cylrad/specfun.hpp"

using namespace cylrad;
using namespace cylrad::specfun;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Reference {
    int n;
    cplx z, j, h;
};

// 30-digit values from an arbitrary-precision library.
const Reference kReference[] = {
    {0, {1.0, 0.0}, {0.76519768655796655, 0.0}, {0.76519768655796655, 0.088256964215676958}},
    {1, {1.0, 0.0}, {0.44005058574493352, 0.0}, {0.44005058574493352, -0.78121282130028872}},
    {3, {2.5, 1.5}, {0.17490009848897438, 0.37066723829674304}, {-0.15528433473737392, -0.19789498244890344}},
    {7, {15.0, -4.0}, {0.75657119569619105, -3.7191971480994273}, {1.5138497314222778, -7.4442733688590407}},
    {-4, {0.3, 0.2}, {-3.0724616960329503e-5, 3.1357038231682423e-5}, {-1301.9739749213944, 1265.5012473012497}},
    {12, {40.0, 3.0}, {-1.1067551486372411, 0.23986723653529444}, {-0.0072963316828169454, -0.0009716012381253382}},
    {2, {-8.0, 5.0}, {-3.1562559157078626, -17.148168923937901}, {0.0013447990664736874, -0.0014160873142942183}},
    {25, {10.0, 0.5}, {3.0546068329710342e-9, 6.8097213581508458e-9}, {-1690794.5609818282, -777921.74024498071}},
    {0, {150.0, 20.0}, {855713.2409520738, 15712453.188453447}, {-1.0434967739826298e-11, -1.3326486859017164e-10}},
    {5, {3.0, 4.0}, {-0.98523617349773845, -0.5942655412104944}, {0.0097010867769495118, 0.042517570935586093}},
};

}  // namespace

TEST(BesselJ, ReferenceValues)
{
    for (const auto& r : kReference) {
        EXPECT_LT(rel(bessel_j(r.n, r.z), r.j), 1e-10) << r.n << " " << r.z;
        EXPECT_LT(rel(hankel1(r.n, r.z), r.h), 1e-9) << r.n << " " << r.z;
    }
}

TEST(BesselJ, OriginAndParity)
{
    EXPECT_EQ(bessel_j(0, 0.0), cplx(1.0));
    EXPECT_EQ(bessel_j(3, 0.0), cplx(0.0));
    const cplx z(2.3, -0.7);
    for (int n = 1; n <= 12; ++n) {
        const double sign = n % 2 ? -1.0 : 1.0;
        EXPECT_LT(rel(bessel_j(-n, z), sign * bessel_j(n, z)), 1e-14);
    }
}

TEST(BesselJ, OverflowIsReported)
{
    EXPECT_THROW(bessel_j(0, cplx(0.0, 1000.0)), OverflowRisk);
    EXPECT_THROW(bessel_j(-9, cplx(689.52122514762254, 711.42743701968038)), OverflowRisk);
    EXPECT_THROW(hankel1(-35, cplx(396.53460286262833, -711.7516676240532)), OverflowRisk);
}

TEST(BesselJ, Recurrence)
{
    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const int n = int(u(g) * 60) - 30;
        const cplx z = std::polar(std::exp(std::log(1e-2) + u(g) * std::log(1e4)), (2 * u(g) - 1) * 3.1);
        if (std::abs(z.imag()) > 200) continue;
        const cplx lhs = bessel_j(n - 1, z) + bessel_j(n + 1, z);
        const cplx rhs = 2.0 * n / z * bessel_j(n, z);
        const double scale = std::max({std::abs(bessel_j(n - 1, z)), std::abs(bessel_j(n + 1, z)), 1e-300});
        EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-9) << n << " " << z;
    }
}

TEST(Hankel, ZeroArgumentIsDomainError)
{
    EXPECT_THROW(hankel1(0, 0.0), DomainError);
    EXPECT_THROW(bessel_pair(0, 0.0), DomainError);
}

TEST(Hankel, LogarithmicSmallArgument)
{
    for (double x : {1e-6, 1e-9, 1e-12}) {
        const cplx h = hankel1(0, x);
        const double expected = 2.0 / 3.141592653589793 * (std::log(x / 2.0) + 0.5772156649015329);
        EXPECT_NEAR(h.imag(), expected, 1e-9);
        EXPECT_NEAR(h.real(), 1.0, 1e-9);
    }
}

TEST(Hankel, SecondKindRelation)
{
    const cplx z(4.2, 0.9);
    for (int n : {0, 1, 6}) EXPECT_LT(rel(hankel1(n, z), bessel_j(n, z) + cplx(0, 1) * bessel_y(n, z)), 1e-13);
}

TEST(LogDerivative, Examples)
{
    EXPECT_NEAR(std::abs(log_derivative_j(1, 1.0) - 0.32514710081303303 / 0.44005058574493352), 0.0, 1e-12);
    const cplx z(3.3, 1.2);
    EXPECT_LT(rel(log_derivative_j(0, z), -bessel_j(1, z) / bessel_j(0, z)), 1e-12);
}

TEST(LogDerivative, LargeImaginaryArgument)
{
    for (double y : {1e3, 1e4, 1e5}) {
        for (int n : {0, 3, 40}) {
            EXPECT_LT(std::abs(log_derivative_j(n, cplx(2.0, y)) - cplx(0, -1)), 1.0 / y);
            EXPECT_LT(std::abs(log_derivative_j(n, cplx(2.0, -y)) - cplx(0, 1)), 1.0 / y);
        }
    }
}

TEST(LogDerivative, PoleNearZero)
{
    EXPECT_THROW(log_derivative_j(0, 2.404825557695773), PoleError);
    EXPECT_NO_THROW(log_derivative_j(0, 2.4048));
}

TEST(LogDerivative, MatchesDirectProduct)
{
    std::mt19937_64 g(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const int n = int(u(g) * 40) - 20;
        const cplx z(u(g) * 60 - 30, u(g) * 40 - 20);
        const cplx j = bessel_j(n, z);
        const cplx jp = 0.5 * (bessel_j(n - 1, z) - bessel_j(n + 1, z));
        const double scale = std::abs(0.5 * bessel_j(n - 1, z)) + std::abs(0.5 * bessel_j(n + 1, z));
        EXPECT_LT(std::abs(log_derivative_j(n, z) * j - jp) / scale, 1e-9) << n << " " << z;
    }
}

TEST(LogDerivative, OrdersAgreeWithSingle)
{
    const cplx z(12.0, 0.4);
    const auto all = log_derivative_j_orders(30, z);
    for (int k = 0; k <= 30; ++k) EXPECT_LT(rel(all[k], log_derivative_j(k, z)), 1e-12);
}

TEST(BesselPair, Examples)
{
    EXPECT_LT(bessel_pair(0, 1.0).wronskian_residual, 1e-12);
    const auto e = bessel_pair(5, cplx(3, 4));
    const cplx z(3, 4);
    const cplx j3 = bessel_j(3, z), j4 = bessel_j(4, z);
    const cplx j5 = 2.0 * 4.0 / z * j4 - j3;
    EXPECT_LT(rel(e.value_j, j5), 1e-9);
}

TEST(BesselPair, WronskianRandomSample)
{
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int used = 0;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const int n = int(u(g) * 101) - 50;
        const cplx z = std::polar(std::exp(std::log(1e-3) + u(g) * std::log(1e6)), (2 * u(g) - 1) * 0.9999 * 3.141592653589793);
        try {
            worst = std::max(worst, bessel_pair(n, z).wronskian_residual);
            ++used;
        } catch (const OverflowRisk&) {
        }
    }
    EXPECT_GT(used, 9000);
    EXPECT_LT(worst, 1e-9);
}

TEST(ExteriorRatios, ConsistentWithDirectValues)
{
    const cplx z(7.5, 0.0);
    const auto r = exterior_ratios(20, z);
    for (int k = 0; k <= 20; ++k) {
        const cplx h = hankel1(k, z);
        EXPECT_LT(rel(r.j_over_h[k], bessel_j(k, z) / h), 1e-11);
        EXPECT_LT(rel(r.h_log_derivative[k], log_derivative_h1(k, z)), 1e-11);
        if (k > 0) EXPECT_LT(rel(r.prev_over_h[k], hankel1(k - 1, z) / h), 1e-11);
    }
}
