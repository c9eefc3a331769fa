#include <gtest/gtest.h>

#include <cmath>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/materials.hpp"
#include "cylrad/radiation.hpp"

using namespace cylrad;

namespace {

const double kOmega = constants::ev_to_rad_per_s(0.1);
const double kK = kOmega / constants::c;

MaterialSpec constant(cplx eps) { return isotropic_material("const", ConstantModel{eps}); }

}  // namespace

TEST(Occupation, Values)
{
    EXPECT_EQ(thermal_occupation(kOmega, 0.0), 0.0);
    const double x = constants::hbar * kOmega / (constants::k_B * 300.0);
    EXPECT_NEAR(thermal_occupation(kOmega, 300.0), 1.0 / std::expm1(x), 1e-15);
    EXPECT_GT(thermal_occupation(kOmega, 50.0), 0.0);
    EXPECT_LT(thermal_occupation(kOmega, 10.0), 1e-40);
}

TEST(ModeDensity, VacuumIsZero)
{
    const auto d = mode_density(1.0, 1.0, 1.0, 1e-6, kOmega, 300.0, 0.0);
    EXPECT_EQ(d.h_n, 0.0);
    EXPECT_EQ(d.h_m, 0.0);
    const auto lossless = mode_density(4.0, 4.0, 1.0, 1e-6, kOmega, 300.0, 0.0);
    EXPECT_EQ(lossless.h_n + lossless.h_m, 0.0);
}

TEST(ModeDensity, DualFormulaAndSign)
{
    const cplx cases[][2] = {{{4, 0.5}, {4, 0.5}}, {{-80, 2}, {-80, 2}}, {{-5, 1}, {7, 0.2}}, {{2, 1e-4}, {2, 1e-4}}};
    for (const auto& c : cases) {
        for (double kR : {0.05, 1.0, 8.0, 30.0}) {
            const auto d = mode_density(c[0], c[1], 1.0, kR / kK, kOmega, 300.0, 0.0);
            EXPECT_LT(d.dual_discrepancy, 1e-10) << c[0] << " " << kR;
            EXPECT_GE(d.min_mode_term, -1e-12);
            EXPECT_GT(d.h_n, 0.0);
            EXPECT_GT(d.h_m, 0.0);
            EXPECT_NEAR(d.h_total_smatrix, d.h_n + d.h_m, 1e-10 * (d.h_n + d.h_m));
        }
    }
}

TEST(ModeDensity, TemperatureAntisymmetry)
{
    const auto a = mode_sum(builtin_material("sic"), 2e-6, 0.1, 300.0, 450.0);
    const auto b = mode_sum(builtin_material("sic"), 2e-6, 0.1, 450.0, 300.0);
    EXPECT_EQ(a.h_n, -b.h_n);
    EXPECT_EQ(a.h_m, -b.h_m);
    EXPECT_LT(a.h_n, 0.0);
}

TEST(ModeDensity, TruncationGrowsWithSize)
{
    int prev = 0;
    for (double kR : {0.5, 5.0, 50.0, 200.0}) {
        const auto d = mode_density(cplx(-20, 3), cplx(-20, 3), 1.0, kR / kK, kOmega, 300.0, 0.0);
        EXPECT_GT(d.n_max, prev);
        EXPECT_GE(d.n_max, int(kR));
        prev = d.n_max;
    }
}

TEST(ModeDensity, TruncationToleranceConvergence)
{
    RadiationOptions loose;
    RadiationOptions tight;
    tight.truncation_tol = loose.truncation_tol / 2;
    const double R = 40.0 / kK;
    const auto a = mode_density(cplx(-20, 3), cplx(-20, 3), 1.0, R, kOmega, 300.0, 0.0, loose);
    const auto b = mode_density(cplx(-20, 3), cplx(-20, 3), 1.0, R, kOmega, 300.0, 0.0, tight);
    const double ha = a.h_n + a.h_m, hb = b.h_n + b.h_m;
    EXPECT_LT(std::abs(ha - hb) / hb, loose.truncation_tol);
}

TEST(ModeDensity, CapFailureIsReported)
{
    RadiationOptions opt;
    opt.n_cap = 20;
    EXPECT_THROW(mode_density(cplx(-20, 3), cplx(-20, 3), 1.0, 100.0 / kK, kOmega, 300.0, 0.0, opt),
                 TruncationFailure);
}

TEST(Spectrum, Invariants)
{
    const std::vector<double> w = {0.02, 0.05, 0.1, 0.2, 0.5};
    const auto s = spectral_emissivity(builtin_material("tungsten-298"), 5e-6, 298.0, w);
    for (std::size_t i = 0; i < w.size(); ++i) {
        EXPECT_GE(s.h_n[i], 0.0);
        EXPECT_GE(s.h_m[i], 0.0);
        EXPECT_LE(std::abs(s.i_omega[i]), 1.0);
        EXPECT_NEAR(s.i_omega[i], (s.h_n[i] - s.h_m[i]) / (s.h_n[i] + s.h_m[i]), 1e-12);
    }
    EXPECT_LT(s.max_dual_discrepancy, 1e-10);
}

TEST(Spectrum, PolarizationIndependentOfTemperature)
{
    const std::vector<double> w = {0.01, 0.1, 0.3};
    const auto m = constant(cplx(5.0, 2.0));
    const auto a = spectral_emissivity(m, 1e-6, 300.0, w);
    const auto b = spectral_emissivity(m, 1e-6, 1000.0, w);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(a.i_omega[i], b.i_omega[i]);
}

TEST(Spectrum, LongWavelengthPolarization)
{
    EXPECT_EQ(long_wavelength_polarization(1.0), 0.0);
    for (cplx eps : {cplx(4.0, 0.5), cplx(10.0, 3.0), cplx(2.0, 0.1)}) {
        const auto s = spectral_emissivity(constant(eps), 100e-9, 300.0, {1e-4});
        EXPECT_NEAR(s.i_omega[0], long_wavelength_polarization(eps), 1e-3) << eps;
    }
    const cplx e(4.0, 0.5);
    const double mod2 = std::norm(e);
    EXPECT_DOUBLE_EQ(long_wavelength_polarization(e), (mod2 + 2 * e.real() - 3) / (mod2 + 2 * e.real() + 9));
}

TEST(Total, ConsistencyAndSign)
{
    const auto r = total_radiation(builtin_material("sic"), 1e-6, 300.0);
    EXPECT_NEAR(r.h_total, r.h_npol + r.h_mpol, 1e-10 * r.h_total);
    EXPECT_GT(r.h_total, 0.0);
    EXPECT_LE(std::abs(r.i_total), 1.0);
    const double sb = constants::stefan_boltzmann * std::pow(300.0, 4);
    EXPECT_NEAR(r.normalized, r.h_total / (2 * constants::pi * 1e-6 * sb), 1e-12 * r.normalized);
    EXPECT_GT(r.mode_truncation, 0);
    EXPECT_LE(r.quadrature_report.omega_achieved, 1e-6);
    const auto back = total_radiation(builtin_material("sic"), 1e-6, 0.0, 300.0);
    EXPECT_LT(back.h_total, 0.0);
}

TEST(Total, InvalidArguments)
{
    EXPECT_THROW(total_radiation(builtin_material("sic"), 0.0, 300.0), DomainError);
    EXPECT_THROW(total_radiation(builtin_material("sic"), 1e-6, -1.0), DomainError);
    EXPECT_THROW(total_radiation(builtin_material("sic"), 1e-6, 0.0, 0.0), DomainError);
    EXPECT_THROW(total_radiation(builtin_material("graphite-uniaxial"), 1e-6, 300.0), MaterialWindowError);
}

TEST(SmallR, RealPermittivityAndLinearity)
{
    const auto zero = smallR_dielectric(constant(4.0), 1e-8, 300.0);
    EXPECT_EQ(zero.h_n, 0.0);
    EXPECT_EQ(zero.h_m, 0.0);
    const auto a = smallR_dielectric(builtin_material("sic"), 1e-8, 300.0);
    const auto b = smallR_dielectric(builtin_material("sic"), 2e-8, 300.0);
    EXPECT_EQ(b.h_n, 2.0 * a.h_n);
    EXPECT_EQ(b.h_m, 2.0 * a.h_m);
    EXPECT_GT(a.h_n, a.h_m);
}

TEST(LowTemperature, ClosedForms)
{
    EXPECT_EQ(low_temperature_polarization(1.0), 0.0);
    EXPECT_EQ(low_temperature_polarization(3.0), 0.5);
    double prev = -1.0;
    for (double e = 0.05; e < 200.0; e *= 1.1) {
        const double i = low_temperature_polarization(e);
        EXPECT_GT(i, prev);
        prev = i;
    }
    const auto a = lowT_dielectric(3.0, 100e-9, 5e-9, 10.0);
    const auto b = lowT_dielectric(3.0, 100e-9, 5e-9, 20.0);
    EXPECT_DOUBLE_EQ(b.h_n / a.h_n, 64.0);
    EXPECT_DOUBLE_EQ(b.h_m / a.h_m, 64.0);
    EXPECT_DOUBLE_EQ(a.i, 0.5);
}

TEST(Conductor, LargePermittivityVanishes)
{
    const double gold = conductor_asymptotic(builtin_material("gold-drude"), 1e-6, 30.0);
    const double near = conductor_asymptotic(constant(cplx(1e8, 1e8)), 1e-6, 30.0);
    const double mirror = conductor_asymptotic(constant(cplx(1e12, 1e12)), 1e-6, 30.0);
    EXPECT_GT(gold, 0.0);
    EXPECT_LT(mirror, 1e-2 * gold);
    EXPECT_LT(mirror, 0.02 * near);
}

TEST(Conductor, RytovRegime)
{
    EXPECT_THROW(rytov_approx(builtin_material("gold-drude"), 10e-6, 300.0), RegimeError);
    const double r = rytov_approx(builtin_material("gold-drude"), 1e-6, 30.0);
    const double exact = conductor_asymptotic(builtin_material("gold-drude"), 1e-6, 30.0);
    EXPECT_GT(r / exact, 0.1);
    EXPECT_LT(r / exact, 10.0);
}

TEST(PolarizationCondition, Examples)
{
    EXPECT_NEAR(polarization_ratio(cplx(2, 0.1)), 90.1, 1e-12);
    EXPECT_TRUE(polarization_condition(cplx(2, 0.1)));
    EXPECT_NEAR(polarization_ratio(cplx(-1, 1)), 1.0, 1e-15);
    EXPECT_FALSE(polarization_condition(cplx(-1, 1)));
    EXPECT_TRUE(polarization_condition(cplx(3, 0)));
    EXPECT_TRUE(std::isinf(polarization_ratio(cplx(3, 0))));
}

TEST(PlateLimit, References)
{
    const double sb = constants::stefan_boltzmann * std::pow(300.0, 4);
    EXPECT_NEAR(plate_limit_check(constant(cplx(1.0, 1e-6)), 300.0).s, sb, 1e-3 * sb);
    EXPECT_LT(plate_limit_check(constant(cplx(1e12, 1e12)), 300.0).s, 1e-4 * sb);
}
