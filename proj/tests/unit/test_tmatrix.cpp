#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/materials.hpp"
#include "cylrad/tmatrix.hpp"

using namespace cylrad;
using namespace cylrad::tmatrix;

namespace {

constexpr double kPi = constants::pi;
const cplx kI(0.0, 1.0);

double rel(cplx a, cplx b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double block_rel(const TMatrixBlock& a, const TMatrixBlock& b)
{
    return std::max({rel(a.t_mm, b.t_mm), rel(a.t_nn, b.t_nn), rel(a.t_mn, b.t_mn), rel(a.t_nm, b.t_nm)});
}

double max_abs_diff(const TMatrixBlock& a, const TMatrixBlock& b)
{
    return std::max({std::abs(a.t_mm - b.t_mm), std::abs(a.t_nn - b.t_nn), std::abs(a.t_mn - b.t_mn),
                     std::abs(a.t_nm - b.t_nm)});
}

ModeIndex mode_at(int n, double kz_ratio, double omega_ev)
{
    const double omega = constants::ev_to_rad_per_s(omega_ev);
    return {n, kz_ratio * omega / constants::c, omega};
}

struct Draw {
    cplx eps_r, eps_z;
    double radius;
    ModeIndex mode;
};

class Sampler {
public:
    explicit Sampler(unsigned seed) : g_(seed) {}
    double u() { return u_(g_); }
    Draw draw()
    {
        Draw d;
        d.eps_r = {u() * 20 - 10, 0.01 + u() * 10};
        d.eps_z = {u() * 20 - 10, 0.01 + u() * 10};
        const int n = int(u() * 17) - 8;
        const double w = std::exp(std::log(0.01) + u() * std::log(100.0));
        d.mode = mode_at(n, (2 * u() - 1) * 0.999, w);
        d.radius = std::exp(std::log(10e-9) + u() * std::log(1e4));
        return d;
    }

private:
    std::mt19937_64 g_;
    std::uniform_real_distribution<double> u_{0.0, 1.0};
};

}  // namespace

TEST(TBlock, VacuumScattersNothing)
{
    const auto m = mode_at(2, 0.3, 0.5);
    const auto t = t_block_uniaxial(1.0, 1.0, 1.0, 1e-6, m);
    EXPECT_EQ(std::abs(t.t_mm) + std::abs(t.t_nn) + std::abs(t.t_mn) + std::abs(t.t_nm), 0.0);
    const auto o = t_block_oracle(1.0, 1.0, 1.0, 1e-6, m);
    EXPECT_LT(std::abs(o.t_mm) + std::abs(o.t_nn) + std::abs(o.t_mn) + std::abs(o.t_nm), 1e-14);
}

TEST(TBlock, VacuumOracleInteriorIsIncidentWave)
{
    const auto sol = t_block_oracle_solve(1.0, 1.0, 1.0, 1e-6, mode_at(2, 0.3, 0.5));
    EXPECT_LT(std::abs(sol.interior_m[0] - sol.interior_n[1]), 1e-12 * std::abs(sol.interior_m[0]));
    EXPECT_LT(std::abs(sol.interior_m[1]) + std::abs(sol.interior_n[0]), 1e-12 * std::abs(sol.interior_m[0]));
}

TEST(TBlock, OracleEquivalence)
{
    Sampler s(17);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Draw d = s.draw();
        worst = std::max(worst, block_rel(t_block_uniaxial(d.eps_r, d.eps_z, 1.0, d.radius, d.mode),
                                          t_block_oracle(d.eps_r, d.eps_z, 1.0, d.radius, d.mode)));
    }
    EXPECT_LT(worst, 1e-8);
}

TEST(TBlock, MagneticOracleEquivalence)
{
    Sampler s(23);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Draw d = s.draw();
        d.radius = std::min(d.radius, 2e-6);
        const cplx mu(0.5 + 3 * s.u(), 0.01 + s.u());
        worst = std::max(worst, block_rel(t_block_uniaxial(d.eps_r, d.eps_z, mu, d.radius, d.mode),
                                          t_block_oracle(d.eps_r, d.eps_z, mu, d.radius, d.mode)));
    }
    EXPECT_LT(worst, 1e-8);
}

TEST(TBlock, IsotropicReduction)
{
    Sampler s(29);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Draw d = s.draw();
        worst = std::max(worst, block_rel(t_block_uniaxial(d.eps_r, d.eps_r, 1.0, d.radius, d.mode),
                                          t_block_isotropic(d.eps_r, 1.0, d.radius, d.mode)));
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(TBlock, Symmetries)
{
    Sampler s(31);
    for (int i = 0; i < 300; ++i) {
        Draw d = s.draw();
        const auto t = t_block_uniaxial(d.eps_r, d.eps_z, 1.0, d.radius, d.mode);
        EXPECT_EQ(t.t_mn, t.t_nm);
        ModeIndex flipped = d.mode;
        flipped.n = -flipped.n;
        flipped.k_z = -flipped.k_z;
        EXPECT_LT(block_rel(t, t_block_uniaxial(d.eps_r, d.eps_z, 1.0, d.radius, flipped)), 1e-13);
        ModeIndex kz_only = d.mode;
        kz_only.k_z = -kz_only.k_z;
        const auto u = t_block_uniaxial(d.eps_r, d.eps_z, 1.0, d.radius, kz_only);
        EXPECT_LT(rel(u.t_mm, t.t_mm), 1e-13);
        EXPECT_LT(rel(u.t_nn, t.t_nn), 1e-13);
        EXPECT_LT(rel(u.t_mn, -t.t_mn), 1e-13);
    }
}

TEST(TBlock, DecoupledAtZeroOrderNormalIncidence)
{
    const auto o = t_block_oracle(cplx(4, 1), cplx(2, 0.5), 1.0, 1e-6, mode_at(0, 0.0, 0.3));
    EXPECT_LT(std::abs(o.t_mn) + std::abs(o.t_nm), 1e-15);
    const auto t = t_block_uniaxial(cplx(4, 1), cplx(2, 0.5), 1.0, 1e-6, mode_at(0, 0.0, 0.3));
    EXPECT_EQ(std::abs(t.t_mn), 0.0);
}

TEST(TBlock, PassivityAndSubunitarity)
{
    Sampler s(37);
    for (int i = 0; i < 1000; ++i) {
        const Draw d = s.draw();
        const auto t = t_block_uniaxial(d.eps_r, d.eps_z, 1.0, d.radius, d.mode);
        EXPECT_LE(t.t_mm.real() + std::norm(t.t_mm) + std::norm(t.t_mn), 1e-12);
        EXPECT_LE(t.t_nn.real() + std::norm(t.t_nn) + std::norm(t.t_nm), 1e-12);
        Eigen::Matrix2cd S;
        S << 1.0 + 2.0 * t.t_mm, 2.0 * t.t_mn, 2.0 * t.t_nm, 1.0 + 2.0 * t.t_nn;
        const Eigen::Vector2d sv = S.jacobiSvd().singularValues();
        EXPECT_LE(sv.maxCoeff(), 1.0 + 1e-10);
    }
}

TEST(TBlock, WaveVectorBranches)
{
    const auto m = mode_at(0, 0.6, 0.2);
    const auto w = wave_vectors(cplx(-5, 0.2), cplx(-2, -0.0) + cplx(0, 0.3), 1.0, m);
    const double k = m.omega / constants::c;
    EXPECT_NEAR(w.q.real(), 0.8 * k, 1e-9 * k);
    EXPECT_EQ(w.q.imag(), 0.0);
    EXPECT_GE(w.q_m.imag(), 0.0);
    const auto v = wave_vectors(cplx(3, 0), cplx(3, 0), 1.0, m);
    EXPECT_GE(v.q_m.real(), 0.0);
}

TEST(TBlock, SmallArgumentZeroOrder)
{
    const double omega = constants::ev_to_rad_per_s(0.1);
    const double k = omega / constants::c;
    const ModeIndex m{0, 0.0, omega};
    const auto t = t_block_uniaxial(2.0, 2.0, 1.0, 0.01 / k, m);
    EXPECT_NEAR(t.t_nn.imag(), kPi / 4.0 * 1e-4, 1e-3 * kPi / 4.0 * 1e-4);
    EXPECT_LT(std::abs(t.t_nn - t_smallR(2.0, 1.0, m, 0.01 / k).t_nn), 1e-7);
}

TEST(TBlock, DirectEndpointRejected)
{
    const auto m = mode_at(1, 1.0, 0.3);
    EXPECT_THROW(t_block_uniaxial(cplx(2, 1), cplx(2, 1), 1.0, 1e-6, m), DomainError);
    EXPECT_THROW(t_block_uniaxial(cplx(2, 1), cplx(2, 1), 1.0, 0.0, mode_at(1, 0.2, 0.3)), DomainError);
}

TEST(TBlock, OrderBlocksMatchSingleBlocks)
{
    const cplx er(-12, 3), ez(4, 0.7);
    const double kR = 6.0, kt = 0.35;
    const auto all = t_blocks_by_order(er, ez, 1.0, kR, kt, std::sqrt(1.0 - kt * kt), 15);
    const double omega = 1e15, k = omega / constants::c;
    for (int n = 0; n <= 15; ++n) {
        const auto t = t_block_uniaxial(er, ez, 1.0, kR / k, {n, kt * k, omega});
        EXPECT_LT(rel(all.t_mm[n], t.t_mm), 1e-11);
        EXPECT_LT(rel(all.t_nn[n], t.t_nn), 1e-11);
        EXPECT_LT(rel(all.t_mn[n], t.t_mn), 1e-11);
    }
}

TEST(SmallR, Examples)
{
    const auto m = mode_at(1, 0.0, 0.1);
    const double k = m.omega / constants::c;
    const double R = 0.01 / k;
    const auto zero = t_smallR(1.0, 1.0, mode_at(1, 0.4, 0.1), R);
    EXPECT_EQ(std::abs(zero.t_mm) + std::abs(zero.t_nn) + std::abs(zero.t_mn), 0.0);
    const auto t = t_smallR(2.0, 1.0, m, R);
    EXPECT_LT(std::abs(t.t_mm - kI * kPi / 4.0 / 3.0 * 1e-4), 1e-18);
    const auto plus = t_smallR(cplx(3, 1), 1.0, mode_at(1, 0.5, 0.1), R);
    const auto minus = t_smallR(cplx(3, 1), 1.0, mode_at(-1, 0.5, 0.1), R);
    EXPECT_EQ(plus.t_mn, -minus.t_mn);
    EXPECT_EQ(t_smallR(cplx(3, 1), 1.0, mode_at(2, 0.5, 0.1), R).t_mm, cplx(0.0));
}

TEST(SmallR, AgreesWithExactBlock)
{
    for (int n : {-1, 0, 1}) {
        for (double kt : {0.0, 0.45, -0.8}) {
            const auto m = mode_at(n, kt, 0.1);
            const double R = 1e-3 / (m.omega / constants::c);
            const cplx eps(5.0, 2.0);
            const auto exact = t_block_isotropic(eps, 1.0, R, m);
            const auto approx = t_smallR(eps, 1.0, m, R);
            const double scale = std::max({std::abs(exact.t_mm), std::abs(exact.t_nn), std::abs(exact.t_mn)});
            EXPECT_LT(max_abs_diff(exact, approx) / scale, 1e-4) << n << " " << kt;
        }
    }
}

TEST(SmallR, FourthOrderRemainder)
{
    const cplx eps(5.0, 2.0);
    for (int n : {0, 1}) {
        const auto m = mode_at(n, 0.3, 0.1);
        const double k = m.omega / constants::c;
        double prev = 0.0;
        for (double x = 0.04; x > 0.004; x /= 2) {
            const double err = max_abs_diff(t_block_isotropic(eps, 1.0, x / k, m), t_smallR(eps, 1.0, m, x / k));
            if (prev > 0.0) {
                const double ratio = prev / err;
                EXPECT_GT(ratio, 12.0) << n << " " << x;
                EXPECT_LT(ratio, 20.0) << n << " " << x;
            }
            prev = err;
        }
    }
}

TEST(ConductorLimit, InfinitePermittivity)
{
    const auto m = mode_at(0, 0.0, 0.1);
    const double x = 0.02;
    const double R = x / (m.omega / constants::c);
    const cplx expected = -kPi / (kPi + 2.0 * kI * constants::euler_gamma + 2.0 * kI * std::log(x / 2.0));
    EXPECT_LT(std::abs(t_conductor_limit(cplx(1e30, 1e30), m, R) - expected), 1e-12);
}

TEST(ConductorLimit, MatchesExactForGold)
{
    const double w = 0.1;
    const cplx eps = permittivity(DispersionModel{gold_drude()}, w);
    const auto m = mode_at(0, 0.0, w);
    const double R = 1e-6;
    const cplx exact = t_block_isotropic(eps, 1.0, R, m).t_nn;
    EXPECT_LT(std::abs(t_conductor_limit(eps, m, R) - exact) / std::abs(exact), 0.1);
}

// The 1/(1 - kt^2) term takes over the denominator near grazing incidence.
TEST(ConductorLimit, FiniteTowardGrazing)
{
    const cplx eps(-1e4, 1e3);
    const double R = 1e-7;
    double prev = INFINITY;
    for (double kt : {0.9, 0.99, 0.999, 0.9999}) {
        const double mag = std::abs(t_conductor_limit(eps, mode_at(0, kt, 0.1), R));
        EXPECT_TRUE(std::isfinite(mag));
        EXPECT_LT(mag, prev);
        prev = mag;
    }
}
