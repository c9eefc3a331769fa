#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cylrad {

using cplx = std::complex<double>;

// Photon-energy interval in eV.
struct Window {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double omega_ev) const { return omega_ev >= lo && omega_ev <= hi; }
};

struct DrudeModel {
    double eps_inf = 1.0;
    double omega_p = 0.0;    // eV
    double omega_tau = 0.0;  // eV
};

// eps_inf (w^2 - w_LO^2 + i w g) / (w^2 - w_TO^2 + i w g)
struct LorentzModel {
    double eps_inf = 1.0;
    double omega_lo = 0.0;
    double omega_to = 0.0;
    double gamma = 0.0;
};

struct TungstenModel {
    double temperature_tag = 0.0;  // K
    bool has_oscillators = false;
    std::array<double, 3> k0{};
    std::array<double, 3> lambda_s{};  // um
    std::array<double, 3> delta{};
    std::array<double, 2> sigma{};     // 1e6 / (Ohm m)
    std::array<double, 2> lambda_r{};  // um
};

struct GraphiteOscillator {
    double f = 0.0;
    double alpha = 0.0;
    double omega_t = 0.0;  // eV
    double gamma = 0.0;    // eV
};

struct GraphiteAxisModel {
    double omega_p = 0.0;
    double gamma_0 = 0.0;
    double f_0 = 0.0;
    std::vector<GraphiteOscillator> oscillators;
    Window fitted;
    // Centre frequency of the damping Gaussian: omega_t unless overridden.
    std::optional<std::vector<double>> damping_centres;
};

// (eps_a + eps_b) / 2
struct GraphiteAverageModel {
    GraphiteAxisModel a;
    GraphiteAxisModel b;
};

struct TabulatedModel {
    struct Sample {
        double energy = 0.0;  // eV
        double re = 0.0;
        double im = 0.0;
    };
    std::vector<Sample> samples;
};

struct ConstantModel {
    cplx eps{1.0, 0.0};
};

// eps0 + i lambda_in omega / c
struct LinearLossModel {
    double eps0 = 1.0;
    double lambda_in = 0.0;  // m
};

using DispersionModel = std::variant<DrudeModel, LorentzModel, TungstenModel, GraphiteAxisModel,
                                     GraphiteAverageModel, TabulatedModel, ConstantModel, LinearLossModel>;

Window validity_window(const DispersionModel& model);

// Throws DomainError for omega <= 0 and MaterialWindowError outside the
// validity window unless allow_extrapolation is set.
cplx permittivity(const DispersionModel& model, double omega_ev, bool allow_extrapolation = false);

// c / (Im sqrt(eps) omega); +infinity for a lossless permittivity.
double skin_depth(cplx eps, double omega_ev);
double skin_depth(const DispersionModel& model, double omega_ev, bool allow_extrapolation = false);

TabulatedModel parse_tabulated(std::string_view text);
TabulatedModel load_tabulated(std::istream& in);
TabulatedModel load_tabulated(const std::filesystem::path& path);

struct AxisPermittivity {
    cplx radial;
    cplx axial;
};

struct MaterialSpec {
    std::string name;
    DispersionModel radial;
    DispersionModel axial;
    double mu = 1.0;
    bool uniaxial = false;
    // Photon-energy band the emission integrals are restricted to, if any.
    std::optional<Window> band;

    bool isotropic() const { return !uniaxial; }
};

MaterialSpec isotropic_material(std::string name, DispersionModel model, double mu = 1.0);
MaterialSpec uniaxial_material(std::string name, DispersionModel radial, DispersionModel axial, double mu = 1.0);

AxisPermittivity permittivity(const MaterialSpec& material, double omega_ev, bool allow_extrapolation = false);
Window validity_window(const MaterialSpec& material);

DrudeModel gold_drude();
LorentzModel silicon_carbide();
TungstenModel tungsten(int temperature_tag);
GraphiteAxisModel graphite_in_layer();
GraphiteAxisModel graphite_inter_layer();
Window graphite_band();

// gold-drude, sic, tungsten-298, tungsten-2400, graphite-uniaxial,
// graphite-isotropic-average. Throws std::invalid_argument otherwise.
MaterialSpec builtin_material(std::string_view name);
std::vector<std::string> builtin_material_names();

}  // namespace cylrad
