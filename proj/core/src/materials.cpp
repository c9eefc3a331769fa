#include "cylrad/materials.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"

namespace cylrad {

namespace {

const cplx kI(0.0, 1.0);

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

cplx eval_drude(const DrudeModel& m, double w)
{
    return m.eps_inf - m.omega_p * m.omega_p / (w * cplx(w, m.omega_tau));
}

cplx eval_lorentz(const LorentzModel& m, double w)
{
    const cplx num(w * w - m.omega_lo * m.omega_lo, w * m.gamma);
    const cplx den(w * w - m.omega_to * m.omega_to, w * m.gamma);
    return m.eps_inf * num / den;
}

// The tabulated form is written for exp(+i omega t) fields (Im eps < 0 for
// absorption); conjugate to the exp(-i omega t) convention used here.
cplx eval_tungsten(const TungstenModel& m, double w)
{
    const double lambda = constants::wavelength_m(w);
    cplx eps = 1.0;
    if (m.has_oscillators) {
        for (std::size_t p = 0; p < 3; ++p) {
            const double ls = m.lambda_s[p] * 1e-6;
            eps += m.k0[p] * lambda * lambda / cplx(lambda * lambda - ls * ls, m.delta[p] * ls * lambda);
        }
    }
    const double pref = lambda * lambda / (2.0 * constants::pi * constants::c * constants::eps0);
    for (std::size_t q = 0; q < 2; ++q) {
        const double sigma = m.sigma[q] * 1e6;
        const double lr = m.lambda_r[q] * 1e-6;
        eps -= pref * sigma / cplx(lr, -lambda);
    }
    return std::conj(eps);
}

cplx eval_graphite(const GraphiteAxisModel& m, double w)
{
    const double wp2 = m.omega_p * m.omega_p;
    cplx eps = 1.0 - m.f_0 * wp2 / (w * cplx(w, m.gamma_0));
    for (std::size_t j = 0; j < m.oscillators.size(); ++j) {
        const auto& o = m.oscillators[j];
        const double centre = m.damping_centres ? (*m.damping_centres)[j] : o.omega_t;
        const double x = (w - centre) / o.gamma;
        const double damping = o.gamma * std::exp(-o.alpha * x * x);
        eps -= o.f * wp2 / cplx(w * w - o.omega_t * o.omega_t, w * damping);
    }
    return eps;
}

cplx eval_tabulated(const TabulatedModel& m, double w)
{
    const auto& s = m.samples;
    if (w <= s.front().energy) return {s.front().re, s.front().im};
    if (w >= s.back().energy) return {s.back().re, s.back().im};
    auto it = std::upper_bound(s.begin(), s.end(), w,
                               [](double v, const TabulatedModel::Sample& x) { return v < x.energy; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (w - lo.energy) / (hi.energy - lo.energy);
    return {lo.re + t * (hi.re - lo.re), lo.im + t * (hi.im - lo.im)};
}

cplx evaluate(const DispersionModel& model, double w)
{
    return std::visit(
        overloaded{
            [&](const DrudeModel& m) { return eval_drude(m, w); },
            [&](const LorentzModel& m) { return eval_lorentz(m, w); },
            [&](const TungstenModel& m) { return eval_tungsten(m, w); },
            [&](const GraphiteAxisModel& m) { return eval_graphite(m, w); },
            [&](const GraphiteAverageModel& m) { return 0.5 * (eval_graphite(m.a, w) + eval_graphite(m.b, w)); },
            [&](const TabulatedModel& m) { return eval_tabulated(m, w); },
            [&](const ConstantModel& m) { return m.eps; },
            [&](const LinearLossModel& m) { return cplx(m.eps0, m.lambda_in * constants::wavenumber(w)); },
        },
        model);
}

Window intersect(Window a, Window b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

std::string describe(double w, Window win)
{
    std::ostringstream os;
    os << "photon energy " << w << " eV outside the model window [" << win.lo << ", " << win.hi << "] eV";
    return os.str();
}

GraphiteAxisModel make_graphite(double omega_p, double gamma_0, double f_0, const double (&f)[7],
                                const double (&alpha)[7], const double (&omega_t)[7], const double (&gamma)[7],
                                Window fitted)
{
    GraphiteAxisModel m;
    m.omega_p = omega_p;
    m.gamma_0 = gamma_0;
    m.f_0 = f_0;
    for (int j = 0; j < 7; ++j) m.oscillators.push_back({f[j], alpha[j], omega_t[j], gamma[j]});
    m.fitted = fitted;
    return m;
}

}  // namespace

Window validity_window(const DispersionModel& model)
{
    return std::visit(overloaded{
                          [](const GraphiteAxisModel& m) { return m.fitted; },
                          [](const GraphiteAverageModel& m) { return intersect(m.a.fitted, m.b.fitted); },
                          [](const TabulatedModel& m) {
                              return Window{m.samples.front().energy, m.samples.back().energy};
                          },
                          [](const auto&) { return Window{}; },
                      },
                      model);
}

cplx permittivity(const DispersionModel& model, double omega_ev, bool allow_extrapolation)
{
    if (!(omega_ev > 0.0) || !std::isfinite(omega_ev))
        throw DomainError("permittivity: photon energy must be positive and finite");
    const Window win = validity_window(model);
    if (!allow_extrapolation && !win.contains(omega_ev))
        throw MaterialWindowError(describe(omega_ev, win), omega_ev, win.lo, win.hi);
    return evaluate(model, omega_ev);
}

double skin_depth(cplx eps, double omega_ev)
{
    if (!(omega_ev > 0.0)) throw DomainError("skin_depth: photon energy must be positive");
    const double im = std::sqrt(eps).imag();
    if (im <= 0.0) return std::numeric_limits<double>::infinity();
    return constants::hbar_c_eVm / (omega_ev * im);
}

double skin_depth(const DispersionModel& model, double omega_ev, bool allow_extrapolation)
{
    return skin_depth(permittivity(model, omega_ev, allow_extrapolation), omega_ev);
}

TabulatedModel parse_tabulated(std::string_view text)
{
    using Kind = TabulatedDataError::Kind;
    TabulatedModel model;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }

        double values[3];
        int count = 0;
        std::size_t i = first;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',' && line[j] != '\r') ++j;
            if (count == 3)
                throw TabulatedDataError(Kind::Parse, "line " + std::to_string(line_no) + ": expected 3 columns", line_no);
            const char* b = line.data() + i;
            const char* e = line.data() + j;
            if (*b == '+') ++b;
            auto [ptr, ec] = std::from_chars(b, e, values[count]);
            if (ec != std::errc() || ptr != e || !std::isfinite(values[count]))
                throw TabulatedDataError(Kind::Parse,
                                         "line " + std::to_string(line_no) + ": malformed number '" +
                                             std::string(line.substr(i, j - i)) + "'",
                                         line_no);
            ++count;
            i = j;
        }
        if (count != 3)
            throw TabulatedDataError(Kind::Parse, "line " + std::to_string(line_no) + ": expected 3 columns", line_no);
        if (values[0] <= 0.0)
            throw TabulatedDataError(Kind::Parse, "line " + std::to_string(line_no) + ": energy must be positive",
                                     line_no);
        if (values[2] < 0.0)
            throw TabulatedDataError(Kind::NegativeImaginary,
                                     "line " + std::to_string(line_no) + ": negative imaginary permittivity", line_no);
        if (!model.samples.empty() && values[0] <= model.samples.back().energy)
            throw TabulatedDataError(Kind::Monotonicity,
                                     "line " + std::to_string(line_no) + ": energies not strictly ascending", line_no);
        model.samples.push_back({values[0], values[1], values[2]});
        if (end == text.size()) break;
    }
    if (model.samples.size() < 2)
        throw TabulatedDataError(Kind::TooFewSamples, "tabulated data needs at least 2 samples");
    return model;
}

TabulatedModel load_tabulated(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tabulated(buf.str());
}

TabulatedModel load_tabulated(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TabulatedDataError(TabulatedDataError::Kind::Io, "cannot open tabulated data file " + path.string());
    return load_tabulated(in);
}

MaterialSpec isotropic_material(std::string name, DispersionModel model, double mu)
{
    MaterialSpec m;
    m.name = std::move(name);
    m.radial = model;
    m.axial = std::move(model);
    m.mu = mu;
    m.uniaxial = false;
    return m;
}

MaterialSpec uniaxial_material(std::string name, DispersionModel radial, DispersionModel axial, double mu)
{
    MaterialSpec m;
    m.name = std::move(name);
    m.radial = std::move(radial);
    m.axial = std::move(axial);
    m.mu = mu;
    m.uniaxial = true;
    return m;
}

AxisPermittivity permittivity(const MaterialSpec& material, double omega_ev, bool allow_extrapolation)
{
    const cplx r = permittivity(material.radial, omega_ev, allow_extrapolation);
    if (!material.uniaxial) return {r, r};
    return {r, permittivity(material.axial, omega_ev, allow_extrapolation)};
}

Window validity_window(const MaterialSpec& material)
{
    if (!material.uniaxial) return validity_window(material.radial);
    return intersect(validity_window(material.radial), validity_window(material.axial));
}

DrudeModel gold_drude() { return {1.0, 9.03, 0.0267}; }

LorentzModel silicon_carbide() { return {6.7, 0.12, 0.098, 5.88e-4}; }

TungstenModel tungsten(int temperature_tag)
{
    TungstenModel m;
    m.temperature_tag = temperature_tag;
    if (temperature_tag == 298) {
        m.has_oscillators = true;
        m.k0 = {12.0, 14.4, 12.9};
        m.lambda_s = {1.26, 0.6, 0.3};
        m.delta = {0.6, 0.8, 0.6};
        m.sigma = {17.5, 0.21};
        m.lambda_r = {45.5, 3.7};
    } else if (temperature_tag == 2400) {
        m.has_oscillators = false;
        m.sigma = {1.19, 0.25};
        m.lambda_r = {3.66, 0.36};
    } else {
        throw std::invalid_argument("tungsten: parameters exist for 298 K and 2400 K only");
    }
    return m;
}

GraphiteAxisModel graphite_in_layer()
{
    static constexpr double f[7] = {0.134, 0.072, 0.307, 0.380, 0.065, 0.553, 1.381};
    static constexpr double alpha[7] = {24.708, 0.524, 0.217, 0.518, 0.286, 0.248, 15.101};
    static constexpr double wt[7] = {2.358, 5.149, 13.785, 10.947, 16.988, 24.038, 36.252};
    static constexpr double g[7] = {9.806, 472.7, 4.651, 1.797, 2.418, 21.395, 37.025};
    return make_graphite(19.0, 0.091, 0.016, f, alpha, wt, g, Window{2.0, 40.0});
}

GraphiteAxisModel graphite_inter_layer()
{
    static constexpr double f[7] = {0.073, 0.056, 0.069, 0.005, 0.262, 0.460, 0.200};
    static constexpr double alpha[7] = {0.505, 7.079, 0.362, 7.426, 0.000382, 1.387, 28.963};
    static constexpr double wt[7] = {0.275, 3.508, 4.451, 13.591, 14.226, 15.550, 32.011};
    static constexpr double g[7] = {4.102, 7.328, 1.414, 0.046, 1.862, 11.922, 39.091};
    return make_graphite(27.0, 6.365, 0.014, f, alpha, wt, g, Window{0.12, 40.0});
}

Window graphite_band() { return {0.004, 0.2}; }

MaterialSpec builtin_material(std::string_view name)
{
    if (name == "gold-drude") return isotropic_material("gold-drude", gold_drude());
    if (name == "sic") return isotropic_material("sic", silicon_carbide());
    if (name == "tungsten-298") return isotropic_material("tungsten-298", tungsten(298));
    if (name == "tungsten-2400") return isotropic_material("tungsten-2400", tungsten(2400));
    if (name == "graphite-uniaxial") {
        auto m = uniaxial_material("graphite-uniaxial", graphite_inter_layer(), graphite_in_layer());
        m.band = graphite_band();
        return m;
    }
    if (name == "graphite-isotropic-average") {
        auto m = isotropic_material("graphite-isotropic-average",
                                    GraphiteAverageModel{graphite_in_layer(), graphite_inter_layer()});
        m.band = graphite_band();
        return m;
    }
    throw std::invalid_argument("unknown material '" + std::string(name) + "'");
}

std::vector<std::string> builtin_material_names()
{
    return {"gold-drude", "sic", "tungsten-298", "tungsten-2400", "graphite-uniaxial", "graphite-isotropic-average"};
}

}  // namespace cylrad
