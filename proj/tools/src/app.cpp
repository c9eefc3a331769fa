#include "app.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/materials.hpp"
#include "cylrad/plate.hpp"
#include "cylrad/radiation.hpp"
#include "cylrad/selfcheck.hpp"

namespace cylrad::app {

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string material;
    std::string data_file;
    std::optional<double> radius;
    std::string radius_sweep;
    std::optional<double> temperature;
    double env_temperature = 0.0;
    std::optional<double> tolerance;
    std::optional<double> truncation_tolerance;
    std::optional<double> angular_tolerance;
    bool allow_extrapolation = false;
    std::string output;
    int points = 100;
    std::string lambda_range;
    int samples = 200;
    std::uint64_t seed = 20240601;
    double debug_eps_offset = 0.0;
};

struct Sweep {
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

double parse_number(const std::string& s, const char* what)
{
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || !std::isfinite(v))
        throw ConfigError(std::string(what) + ": not a number '" + s + "'");
    return v;
}

Sweep parse_sweep(const std::string& spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError("--radius-sweep expects MIN:MAX:N");
    Sweep s{parse_number(parts[0], "--radius-sweep"), parse_number(parts[1], "--radius-sweep"), 0};
    const double n = parse_number(parts[2], "--radius-sweep");
    if (n != std::floor(n) || n < 2 || n > 1e6) throw ConfigError("--radius-sweep: N must be an integer >= 2");
    s.points = int(n);
    if (!(s.lo > 0.0)) throw ConfigError("--radius-sweep: radius must be positive");
    if (!(s.lo < s.hi)) throw ConfigError("--radius-sweep: MIN must be below MAX");
    return s;
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g(n);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

MaterialSpec resolve_material(const RunConfig& cfg)
{
    if (!cfg.data_file.empty()) {
        auto model = load_tabulated(std::filesystem::path(cfg.data_file));
        return isotropic_material(cfg.material.empty() ? cfg.data_file : cfg.material, std::move(model));
    }
    if (cfg.material.empty()) throw ConfigError("--material or --data-file is required");
    for (const auto& name : builtin_material_names())
        if (name == cfg.material) return builtin_material(name);
    if (std::filesystem::is_regular_file(cfg.material))
        return isotropic_material(cfg.material, load_tabulated(std::filesystem::path(cfg.material)));
    throw ConfigError("unknown material '" + cfg.material + "' (not a built-in name or a readable file)");
}

double require_radius(const RunConfig& cfg)
{
    if (!cfg.radius) throw ConfigError("--radius is required");
    if (!(*cfg.radius > 0.0)) throw ConfigError("--radius must be positive");
    return *cfg.radius;
}

double require_temperature(const RunConfig& cfg)
{
    if (!cfg.temperature) throw ConfigError("--temperature is required");
    if (!(*cfg.temperature >= 0.0)) throw ConfigError("--temperature must be non-negative");
    if (!(cfg.env_temperature >= 0.0)) throw ConfigError("--env-temperature must be non-negative");
    if (*cfg.temperature == 0.0 && cfg.env_temperature == 0.0)
        throw ConfigError("cylinder and environment temperatures are both zero");
    return *cfg.temperature;
}

RadiationOptions radiation_options(const RunConfig& cfg)
{
    RadiationOptions o;
    if (cfg.tolerance) o.omega_rel_tol = *cfg.tolerance;
    if (cfg.truncation_tolerance) o.truncation_tol = *cfg.truncation_tolerance;
    if (cfg.angular_tolerance) o.theta_rel_tol = *cfg.angular_tolerance;
    o.allow_extrapolation = cfg.allow_extrapolation;
    return o;
}

plate::PlateOptions plate_options(const RunConfig& cfg)
{
    plate::PlateOptions o;
    if (cfg.tolerance) o.omega_rel_tol = *cfg.tolerance;
    if (cfg.angular_tolerance) o.theta_rel_tol = o.phi_rel_tol = *cfg.angular_tolerance;
    o.allow_extrapolation = cfg.allow_extrapolation;
    return o;
}

class Csv {
public:
    explicit Csv(const char* header) { text_ << header << '\n'; }
    void row(std::initializer_list<double> values)
    {
        bool first = true;
        for (double v : values) {
            if (!first) text_ << ',';
            text_ << format_double(v);
            first = false;
        }
        text_ << '\n';
    }
    std::string str() const { return text_.str(); }

private:
    std::ostringstream text_;
};

std::string run_spectrum(const RunConfig& cfg)
{
    const MaterialSpec material = resolve_material(cfg);
    const double radius = require_radius(cfg);
    const double t_cyl = require_temperature(cfg);
    if (cfg.points < 2) throw ConfigError("--points must be at least 2");
    const RadiationOptions opt = radiation_options(cfg);

    double lam_lo, lam_hi;  // um
    if (!cfg.lambda_range.empty()) {
        const auto parts = split(cfg.lambda_range, ':');
        if (parts.size() != 2) throw ConfigError("--lambda-range expects MIN:MAX (um)");
        lam_lo = parse_number(parts[0], "--lambda-range");
        lam_hi = parse_number(parts[1], "--lambda-range");
        if (!(lam_lo > 0.0 && lam_lo < lam_hi)) throw ConfigError("--lambda-range: need 0 < MIN < MAX");
    } else {
        const double kt = constants::thermal_energy_ev(std::max(t_cyl, cfg.env_temperature));
        double lo = opt.x_lo * kt, hi = opt.x_hi * kt;
        if (material.band) {
            lo = std::max(lo, material.band->lo);
            hi = std::min(hi, material.band->hi);
        }
        if (!(hi > lo)) throw ConfigError("empty frequency band for this material and temperature");
        lam_lo = constants::wavelength_m(hi) * 1e6;
        lam_hi = constants::wavelength_m(lo) * 1e6;
    }
    const auto lambda = log_grid(lam_lo, lam_hi, cfg.points);
    std::vector<double> omega(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) omega[i] = constants::energy_from_wavelength(lambda[i] * 1e-6);

    const auto spec = spectral_emissivity(material, radius, t_cyl, cfg.env_temperature, omega, opt);
    Csv csv("omega_ev,lambda_um,h_n,h_m,h_total,i_omega");
    for (std::size_t i = 0; i < omega.size(); ++i)
        csv.row({omega[i], lambda[i], spec.h_n[i], spec.h_m[i], spec.h_n[i] + spec.h_m[i], spec.i_omega[i]});
    return csv.str();
}

std::string run_radii(const RunConfig& cfg, const std::vector<double>& radii)
{
    const MaterialSpec material = resolve_material(cfg);
    const double t_cyl = require_temperature(cfg);
    const RadiationOptions opt = radiation_options(cfg);
    Csv csv("radius_m,h_n_per_len,h_m_per_len,h_total_per_len,normalized,i_total");
    for (double r : radii) {
        const auto res = total_radiation(material, r, t_cyl, cfg.env_temperature, opt);
        csv.row({r, res.h_npol, res.h_mpol, res.h_total, res.normalized, res.i_total});
    }
    return csv.str();
}

std::string run_sweep(const RunConfig& cfg)
{
    if (cfg.radius_sweep.empty()) {
        if (cfg.radius) return run_radii(cfg, {require_radius(cfg)});
        throw ConfigError("--radius-sweep MIN:MAX:N is required");
    }
    const Sweep s = parse_sweep(cfg.radius_sweep);
    return run_radii(cfg, log_grid(s.lo, s.hi, s.points));
}

std::string run_plate(const RunConfig& cfg)
{
    const MaterialSpec material = resolve_material(cfg);
    const double t = require_temperature(cfg);
    if (cfg.env_temperature != 0.0) throw ConfigError("plate: --env-temperature is not supported");
    const auto res = plate::plate_emissivity(material, t, plate_options(cfg));
    Csv csv("s_m,s_n,s_total,i_plate");
    csv.row({res.s_m, res.s_n, res.s, res.i_plate});
    return csv.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
        out.flush();
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + cfg.output + "'");
    f << text;
    if (!f) throw ConfigError("cannot write output file '" + cfg.output + "'");
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.command == "selfcheck") {
        selfcheck::SelfcheckOptions o;
        if (cfg.samples < 1) throw ConfigError("--samples must be positive");
        o.samples = cfg.samples;
        o.seed = cfg.seed;
        o.eps_offset = {cfg.debug_eps_offset, 0.0};
        const auto results = selfcheck::run_all(o);
        std::ostringstream report;
        selfcheck::print_report(report, results);
        emit(cfg, report.str(), out);
        for (const auto& r : results) {
            if (!r.passed) {
                err << "selfcheck: " << r.name << " failed\n";
                return kFailure;
            }
        }
        return kOk;
    }
    std::string text;
    if (cfg.command == "spectrum")
        text = run_spectrum(cfg);
    else if (cfg.command == "sweep-radius")
        text = run_sweep(cfg);
    else if (cfg.command == "total")
        text = run_radii(cfg, {require_radius(cfg)});
    else if (cfg.command == "plate")
        text = run_plate(cfg);
    else
        throw ConfigError("unknown command '" + cfg.command + "'");
    emit(cfg, text, out);
    return kOk;
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, p) : std::string("nan");
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App cli{"Thermal radiation of long cylinders and plates"};
    cli.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");
    cli.add_option("command", cfg.command, "spectrum, sweep-radius, plate, total or selfcheck")
        ->required()
        ->check(CLI::IsMember({"spectrum", "sweep-radius", "plate", "total", "selfcheck"}));
    cli.add_option("--material", cfg.material, "built-in material name or tabulated data file");
    cli.add_option("--data-file", cfg.data_file, "tabulated optical data (energy_eV re_eps im_eps)");
    cli.add_option("--radius", cfg.radius, "cylinder radius in m");
    cli.add_option("--radius-sweep", cfg.radius_sweep, "MIN:MAX:N, log-spaced radii in m");
    cli.add_option("--temperature", cfg.temperature, "cylinder temperature in K");
    cli.add_option("--env-temperature", cfg.env_temperature, "environment temperature in K");
    cli.add_option("--tolerance", cfg.tolerance, "relative tolerance of the frequency integral");
    cli.add_option("--truncation-tolerance", cfg.truncation_tolerance, "relative size of a negligible order");
    cli.add_option("--angular-tolerance", cfg.angular_tolerance, "relative tolerance of the angular integrals");
    cli.add_flag("--allow-extrapolation", cfg.allow_extrapolation, "evaluate materials outside their data window");
    cli.add_option("--output", cfg.output, "CSV destination (default standard output)");
    cli.add_option("--points", cfg.points, "spectrum: number of wavelengths");
    cli.add_option("--lambda-range", cfg.lambda_range, "spectrum: MIN:MAX wavelength in um");
    cli.add_option("--samples", cfg.samples, "selfcheck: random samples per check");
    cli.add_option("--seed", cfg.seed, "selfcheck: random seed");
    cli.add_option("--debug-eps-offset", cfg.debug_eps_offset, "selfcheck: perturb the closed-form permittivity")
        ->group("");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return cli.exit(e, out, err);
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        return dispatch(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const MaterialWindowError& e) {
        err << "material window: " << e.what() << " (use --allow-extrapolation to override)\n";
        return kOutsideWindow;
    } catch (const ConvergenceError& e) {
        err << "not converged: " << e.what() << "; achieved tolerance " << e.achieved() << '\n';
        return kNotConverged;
    } catch (const TabulatedDataError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("cylrad");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return run(int(argv.size()), argv.data(), out, err);
}

}  // namespace cylrad::app
