#pragma once

#include <complex>
#include <vector>

#include "cylrad/materials.hpp"
#include "cylrad/plate.hpp"

namespace cylrad {

// Bose occupation 1/(exp(hbar omega / k_B T) - 1); 0 at T = 0.
// omega in rad/s.
double thermal_occupation(double omega, double temperature);

struct RadiationOptions {
    // Frequency band in units of k_B T_max / hbar, clipped to the material band.
    double x_lo = 0.02;
    double x_hi = 40.0;
    int base_intervals = 200;
    double omega_rel_tol = 1e-6;
    int omega_max_depth = 18;
    int omega_max_evaluations = 20000;
    int theta_nodes = 32;
    int theta_max_depth = 24;  // bisections of one polar panel
    int theta_max_nodes = 1 << 17;  // per frequency
    double theta_rel_tol = 1e-8;
    // An order is negligible once it is below truncation_tol times the running sum;
    // three in a row end the sum.
    double truncation_tol = 1e-8;
    int n_cap = 1024;
    bool allow_extrapolation = false;
    int workers = 0;  // 0: CYLRAD_WORKERS or hardware concurrency
};

// Per unit length and unit angular frequency (W s/m) at one frequency.
struct ModeDensity {
    double h_n = 0.0;
    double h_m = 0.0;
    // Same quantity through |S|^2 - 1 with S = 1 + 2T.
    double h_total_smatrix = 0.0;
    // Prefactor-free angular sums; their ratio is temperature independent.
    double sum_n = 0.0;
    double sum_m = 0.0;
    int n_max = 0;
    int theta_nodes = 0;
    double dual_discrepancy = 0.0;  // |direct - S form| / |direct|
    double min_mode_term = 0.0;     // min over nodes of -(Re T + |T|^2 + |T'|^2)
};

// Lower level entry: permittivities given directly, omega in rad/s.
ModeDensity mode_density(cplx eps_r, cplx eps_z, cplx mu, double radius, double omega, double t_cyl, double t_env,
                         const RadiationOptions& options = {});

// omega in eV.
ModeDensity mode_sum(const MaterialSpec& material, double radius, double omega_ev, double t_cyl, double t_env,
                     const RadiationOptions& options = {});

struct EmissionSpectrum {
    std::vector<double> omega_ev;
    std::vector<double> h_n;
    std::vector<double> h_m;
    std::vector<double> i_omega;  // NaN where h_n + h_m = 0
    std::vector<int> n_max;
    double max_dual_discrepancy = 0.0;
    double min_mode_term = 0.0;
};

// Environment at zero temperature.
EmissionSpectrum spectral_emissivity(const MaterialSpec& material, double radius, double temperature,
                                     const std::vector<double>& omega_ev, const RadiationOptions& options = {});
EmissionSpectrum spectral_emissivity(const MaterialSpec& material, double radius, double t_cyl, double t_env,
                                     const std::vector<double>& omega_ev, const RadiationOptions& options = {});

struct QuadratureReport {
    double omega_achieved = 0.0;
    int omega_evaluations = 0;
    int omega_depth = 0;
    int theta_nodes_max = 0;
    double max_dual_discrepancy = 0.0;
    double min_mode_term = 0.0;
};

struct RadiationResult {
    double h_total = 0.0;  // W/m
    double h_npol = 0.0;
    double h_mpol = 0.0;
    double i_total = 0.0;
    double normalized = 0.0;  // h_total / (2 pi R sigma T^4), T = max(T_c, T_env)
    int mode_truncation = 0;
    QuadratureReport quadrature_report;
};

RadiationResult total_radiation(const MaterialSpec& material, double radius, double t_cyl, double t_env = 0.0,
                                const RadiationOptions& options = {});

// Thin-cylinder laws, power per unit surface area (W/m^2).
struct PolarizedFlux {
    double h_n = 0.0;
    double h_m = 0.0;
    double i() const { return h_n + h_m != 0.0 ? (h_n - h_m) / (h_n + h_m) : 0.0; }
};

PolarizedFlux smallR_dielectric(const MaterialSpec& material, double radius, double temperature,
                                const RadiationOptions& options = {});

struct LowTemperatureFlux {
    double h_n = 0.0;
    double h_m = 0.0;
    double i = 0.0;
};
LowTemperatureFlux lowT_dielectric(double eps0, double lambda_in, double radius, double temperature);

// (eps0^2 + 2 eps0 - 3) / (eps0^2 + 2 eps0 + 9)
double low_temperature_polarization(double eps0);

// Conducting cylinder with skin depth << R << thermal wavelength; W/m^2,
// fully N-polarized.
double conductor_asymptotic(const MaterialSpec& material, double radius, double temperature,
                            const RadiationOptions& options = {});

// Simplified conductor law with the polar integral done in closed form.
// Throws RegimeError when omega R / 2c reaches 1 inside the frequency band.
double rytov_approx(const MaterialSpec& material, double radius, double temperature,
                    const RadiationOptions& options = {});

// ((Re eps + 1)^2 + (Im eps)^2) / Im eps > threshold; true for real eps.
bool polarization_condition(cplx eps, double threshold = 10.0);
double polarization_ratio(cplx eps);

// Long-wavelength spectral polarization of a thin isotropic cylinder.
double long_wavelength_polarization(cplx eps);

// Large-radius reference: the plate of the same material.
plate::PlateResult plate_limit_check(const MaterialSpec& material, double temperature,
                                     const plate::PlateOptions& options = {});

}  // namespace cylrad
