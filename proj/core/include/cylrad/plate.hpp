#pragma once

#include <complex>

#include "cylrad/materials.hpp"

namespace cylrad::plate {

using cplx = std::complex<double>;

// Reflection amplitudes r_{out,in}: r_sp is s scattered from incident p.
// p amplitudes are referred to the magnetic field, so normal incidence gives
// r_ss = -r_pp. In this basis reciprocity gives r_sp = -r_ps for a uniaxial
// medium with its axis in the surface plane.
struct FresnelPair {
    cplx r_ss;
    cplx r_pp;
    cplx r_sp;
    cplx r_ps;
};

// omega in rad/s, k_perp in rad/m, 0 <= k_perp < omega/c.
FresnelPair fresnel_isotropic(cplx eps, cplx mu, double omega, double k_perp);

// Optic axis in the surface plane at angle phi to the in-plane wavevector.
// eps_r is the ordinary (transverse) and eps_z the axial permittivity.
FresnelPair fresnel_uniaxial(cplx eps_r, cplx eps_z, cplx mu, double omega, double k_perp, double phi);

struct PlateOptions {
    double x_lo = 0.02;
    double x_hi = 40.0;
    int base_intervals = 200;
    double omega_rel_tol = 1e-6;
    int omega_max_depth = 18;
    int theta_nodes = 32;
    int theta_max_nodes = 2048;
    double theta_rel_tol = 1e-8;
    int phi_nodes = 64;
    int phi_max_nodes = 4096;
    double phi_rel_tol = 1e-8;
    bool allow_extrapolation = false;
    int workers = 0;
};

// Power per unit area (W/m^2). s_m + s_n = s.
struct PlateResult {
    double s = 0.0;
    double s_m = 0.0;
    double s_n = 0.0;
    double i_plate = 0.0;     // (s_n - s_m) / (s_n + s_m)
    double normalized = 0.0;  // s / (sigma T^4)
    double achieved = 0.0;
    double min_bracket = 1.0;  // smallest 1 - reflected power seen at any node
    double max_bracket = 0.0;
};

PlateResult plate_emissivity(const MaterialSpec& material, double temperature, const PlateOptions& options = {});

// Angular integrals at one frequency: int d^2k_perp sum_Q [1 - ...] split
// into M and N parts, in units of (omega/c)^2.
struct PlateSpectral {
    double m = 0.0;
    double n = 0.0;
    int theta_nodes = 0;
    int phi_nodes = 0;
    double min_bracket = 1.0;
    double max_bracket = 0.0;
};
PlateSpectral plate_angular(cplx eps_r, cplx eps_z, cplx mu, bool uniaxial, double omega,
                            const PlateOptions& options = {});

}  // namespace cylrad::plate
