#pragma once

#include <numbers>

namespace cylrad::constants {

// CODATA 2018 exact/recommended values, SI.
inline constexpr double c = 299792458.0;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double k_B = 1.380649e-23;
inline constexpr double e_charge = 1.602176634e-19;
inline constexpr double eps0 = 8.8541878128e-12;

inline constexpr double hbar_eVs = hbar / e_charge;
inline constexpr double k_B_eV = k_B / e_charge;
inline constexpr double hbar_c_eVm = hbar_eVs * c;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.5772156649015329;

// sigma = pi^2 k_B^4 / (60 hbar^3 c^2)
inline constexpr double stefan_boltzmann =
    pi * pi * (k_B * k_B * k_B * k_B) / (60.0 * hbar * hbar * hbar * c * c);

inline constexpr double ev_to_rad_per_s(double energy_ev) { return energy_ev / hbar_eVs; }
inline constexpr double rad_per_s_to_ev(double omega) { return omega * hbar_eVs; }
// vacuum wavenumber k = omega/c for a photon energy in eV, in rad/m
inline constexpr double wavenumber(double energy_ev) { return energy_ev / hbar_c_eVm; }
inline constexpr double wavelength_m(double energy_ev) { return 2.0 * pi * hbar_c_eVm / energy_ev; }
inline constexpr double energy_from_wavelength(double lambda_m) { return 2.0 * pi * hbar_c_eVm / lambda_m; }
inline constexpr double thermal_energy_ev(double temperature) { return k_B_eV * temperature; }

}  // namespace cylrad::constants
