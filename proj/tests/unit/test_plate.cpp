#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/materials.hpp"
#include "cylrad/plate.hpp"

using namespace cylrad;
using namespace cylrad::plate;

namespace {

const double kOmega = constants::ev_to_rad_per_s(0.2);
const double kK = kOmega / constants::c;

double sigma_t4(double t) { return constants::stefan_boltzmann * std::pow(t, 4); }

}  // namespace

TEST(Fresnel, VacuumReflectsNothing)
{
    const auto r = fresnel_isotropic(1.0, 1.0, kOmega, 0.3 * kK);
    EXPECT_EQ(std::abs(r.r_ss) + std::abs(r.r_pp) + std::abs(r.r_sp) + std::abs(r.r_ps), 0.0);
    const auto u = fresnel_uniaxial(1.0, 1.0, 1.0, kOmega, 0.3 * kK, 0.7);
    EXPECT_LT(std::abs(u.r_ss) + std::abs(u.r_pp) + std::abs(u.r_sp) + std::abs(u.r_ps), 1e-15);
}

TEST(Fresnel, NormalIncidence)
{
    const auto r = fresnel_isotropic(4.0, 1.0, kOmega, 0.0);
    EXPECT_NEAR(std::abs(r.r_ss), 1.0 / 3.0, 1e-15);
    EXPECT_LT(std::abs(r.r_ss + r.r_pp), 1e-15);
    EXPECT_EQ(r.r_sp, cplx(0.0));
    EXPECT_EQ(r.r_ps, cplx(0.0));
}

TEST(Fresnel, MirrorLimit)
{
    const auto r = fresnel_isotropic(cplx(1e14, 1e14), 1.0, kOmega, 0.5 * kK);
    EXPECT_NEAR(std::abs(r.r_ss), 1.0, 1e-6);
    EXPECT_NEAR(std::abs(r.r_pp), 1.0, 1e-6);
}

TEST(Fresnel, EvanescentRejected)
{
    EXPECT_THROW(fresnel_isotropic(2.0, 1.0, kOmega, 1.5 * kK), DomainError);
    EXPECT_THROW(fresnel_uniaxial(2.0, 3.0, 1.0, kOmega, kK, 0.1), DomainError);
}

TEST(Fresnel, UniaxialReducesToIsotropic)
{
    std::mt19937_64 g(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const cplx eps(u(g) * 40 - 20, 1e-3 + u(g) * 10);
        const double kp = u(g) * 0.999 * kK;
        const double phi = u(g) * 2 * constants::pi;
        const auto a = fresnel_uniaxial(eps, eps, 1.0, kOmega, kp, phi);
        const auto b = fresnel_isotropic(eps, 1.0, kOmega, kp);
        worst = std::max({worst, std::abs(a.r_ss - b.r_ss), std::abs(a.r_pp - b.r_pp), std::abs(a.r_sp),
                          std::abs(a.r_ps)});
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Fresnel, PrincipalAzimuthsDecouple)
{
    for (double phi : {0.0, constants::pi / 2}) {
        const auto r = fresnel_uniaxial(cplx(-8, 2), cplx(3, 0.4), 1.0, kOmega, 0.6 * kK, phi);
        EXPECT_LT(std::abs(r.r_sp) + std::abs(r.r_ps), 1e-13);
    }
}

TEST(Fresnel, EnergyBoundAndReciprocity)
{
    std::mt19937_64 g(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const cplx er(u(g) * 40 - 20, 1e-3 + u(g) * 10);
        const cplx ez(u(g) * 40 - 20, 1e-3 + u(g) * 10);
        const double kp = u(g) * 0.999 * kK;
        const double phi = u(g) * 2 * constants::pi;
        const auto r = fresnel_uniaxial(er, ez, 1.0, kOmega, kp, phi);
        EXPECT_LE(std::norm(r.r_ss) + std::norm(r.r_ps), 1.0 + 1e-12);
        EXPECT_LE(std::norm(r.r_pp) + std::norm(r.r_sp), 1.0 + 1e-12);
        // Equal magnitudes; the sign follows from the p-wave convention.
        EXPECT_LT(std::abs(r.r_sp + r.r_ps), 1e-12);
    }
}

TEST(PlateEmission, BlackbodySurrogate)
{
    const auto m = isotropic_material("black", ConstantModel{cplx(1.0, 1e-6)});
    const auto res = plate_emissivity(m, 300.0);
    EXPECT_NEAR(res.normalized, 1.0, 1e-3);
    EXPECT_NEAR(res.s, sigma_t4(300.0) * res.normalized, 1e-9 * res.s);
    EXPECT_NEAR(sigma_t4(300.0), 459.3, 0.05);
}

TEST(PlateEmission, MirrorEmitsNothing)
{
    const auto m = isotropic_material("mirror", ConstantModel{cplx(1e12, 1e12)});
    EXPECT_LT(plate_emissivity(m, 300.0).normalized, 1e-4);
}

TEST(PlateEmission, SplitAndBrackets)
{
    for (const char* name : {"sic", "gold-drude", "tungsten-298"}) {
        const auto res = plate_emissivity(builtin_material(name), 300.0);
        EXPECT_NEAR(res.s_m + res.s_n, res.s, 1e-10 * res.s) << name;
        EXPECT_GE(res.min_bracket, 0.0) << name;
        EXPECT_LE(res.max_bracket, 1.0) << name;
        EXPECT_GT(res.s, 0.0) << name;
        EXPECT_NEAR(res.i_plate, 0.0, 1e-12) << name;
    }
}

TEST(PlateEmission, AngularUniaxialIsotropicAgree)
{
    const cplx eps(-30, 5);
    const auto a = plate_angular(eps, eps, 1.0, true, kOmega);
    const auto b = plate_angular(eps, eps, 1.0, false, kOmega);
    EXPECT_NEAR(a.m, b.m, 1e-9 * b.m);
    EXPECT_NEAR(a.n, b.n, 1e-9 * b.n);
}

TEST(PlateEmission, RejectsNonPositiveTemperature)
{
    EXPECT_THROW(plate_emissivity(builtin_material("sic"), 0.0), DomainError);
}

TEST(PlateEmission, GraphiteNeedsExtrapolation)
{
    EXPECT_THROW(plate_emissivity(builtin_material("graphite-uniaxial"), 300.0), MaterialWindowError);
}
