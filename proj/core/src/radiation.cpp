#include "cylrad/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/quadrature.hpp"
#include "cylrad/tmatrix.hpp"

namespace cylrad {

namespace {

using constants::pi;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

void require_temperature(double t, const char* what)
{
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError(std::string(what) + " must be non-negative");
}

bool lossless(cplx eps_r, cplx eps_z, cplx mu)
{
    return eps_r.imag() == 0.0 && eps_z.imag() == 0.0 && mu.imag() == 0.0;
}

// (|1 + 2t|^2 - 1) / 4 carried in double-double.
double s_diagonal(cplx t)
{
    using quad::DoubleDouble;
    const DoubleDouble a = quad::two_sum(1.0, 2.0 * t.real());
    const DoubleDouble b{2.0 * t.imag(), 0.0};
    const DoubleDouble v = a * a + b * b - DoubleDouble{1.0, 0.0};
    return 0.25 * v.value();
}

// Polar panels of equal width in x = kR cos(theta): the summand ripples
// once per unit of x as successive orders open. Each panel is a map from
// s in [0, 1] to theta; the panel reaching grazing incidence uses
// theta = pi/2 - (pi/2 - theta_0)(1 - s)^3 to gather nodes where the
// exterior functions turn logarithmic. Panels are bisected in s wherever
// an n-point and a 2n-point Gauss-Legendre rule disagree, which resolves
// narrow resonances of weakly absorbing cylinders.
constexpr double kPanelWidth = 4.0;

int panel_count(double kR) { return std::max(1, static_cast<int>(std::ceil(kR / kPanelWidth))); }

struct Panel {
    double t_a = 0.0;
    double t_b = 0.0;
    bool grazing = false;
};

Panel make_panel(double kR, int p)
{
    const int panels = panel_count(kR);
    const double u_hi = double(panels - p) / panels;
    const double u_lo = double(panels - p - 1) / panels;
    Panel out;
    out.t_a = p == 0 ? 0.0 : std::acos(u_hi);
    out.grazing = p + 1 == panels;
    out.t_b = out.grazing ? 0.5 * pi : std::acos(u_lo);
    return out;
}

// Per-order sums over k_z in units of k of -(Re T^PP + |T^PP|^2 + |T^PP'|^2)
// for one s-interval of a panel. Blocks at (-n, -k_z) equal those at
// (n, k_z), and the summand is even in k_z.
struct OrderSums {
    std::vector<double> n, m, s;
    double min_term = 0.0;
    int nodes = 0;
};

OrderSums interval_sums(cplx eps_r, cplx eps_z, cplx mu, double kR, const Panel& panel, double s_a, double s_b,
                        int count, int n_max)
{
    const auto& rule = quad::gauss_legendre(count);
    const std::size_t orders = n_max + 1;
    OrderSums out;
    out.nodes = count;
    std::vector<double> pn(orders * count), pm(orders * count), ps(orders * count);
    const double half_s = 0.5 * (s_b - s_a);
    const double span = panel.t_b - panel.t_a;
    for (int i = 0; i < count; ++i) {
        const double sv = s_a + half_s * (rule.nodes[i] + 1.0);
        double sin_t, cos_t, weight;
        if (panel.grazing) {
            const double r = 1.0 - sv;
            const double rest = span * r * r * r;  // pi/2 - theta
            sin_t = std::cos(rest);
            cos_t = std::sin(rest);
            weight = half_s * rule.weights[i] * 3.0 * span * r * r * cos_t;
        } else {
            const double th = panel.t_a + span * sv;
            sin_t = std::sin(th);
            cos_t = std::cos(th);
            weight = half_s * rule.weights[i] * span * cos_t;
        }
        const auto b = tmatrix::t_blocks_by_order(eps_r, eps_z, mu, kR, sin_t, cplx(cos_t, 0.0), n_max);
        for (std::size_t k = 0; k < orders; ++k) {
            const double cross = std::norm(b.t_mn[k]);
            const double fn = -(b.t_nn[k].real() + std::norm(b.t_nn[k]) + cross);
            const double fm = -(b.t_mm[k].real() + std::norm(b.t_mm[k]) + cross);
            const double fs = -(s_diagonal(b.t_nn[k]) + s_diagonal(b.t_mm[k]) + 2.0 * cross);
            out.min_term = std::min({out.min_term, fn, fm});
            const double w = 2.0 * weight * (k == 0 ? 1.0 : 2.0);
            pn[k * count + i] = w * fn;
            pm[k * count + i] = w * fm;
            ps[k * count + i] = w * fs;
        }
    }
    out.n.resize(orders);
    out.m.resize(orders);
    out.s.resize(orders);
    for (std::size_t k = 0; k < orders; ++k) {
        out.n[k] = quad::pairwise_sum(std::span<const double>(pn).subspan(k * count, count));
        out.m[k] = quad::pairwise_sum(std::span<const double>(pm).subspan(k * count, count));
        out.s[k] = quad::pairwise_sum(std::span<const double>(ps).subspan(k * count, count));
    }
    return out;
}

double order_total(const std::vector<double>& v) { return quad::pairwise_sum(v); }

struct PolarSums {
    double n = 0.0, m = 0.0, s = 0.0;
    double min_term = 0.0;
    bool truncated = false;
    double tail = 0.0;
    double achieved = 0.0;  // estimated polar error relative to |n| + |m|
    bool converged = true;
    int nodes = 0;
};

struct PolarSettings {
    int count;
    int max_depth;
    double rel_tol;
    int max_nodes;
};

// Adaptive integral over one s-interval; leaves are appended in order.
void refine(cplx eps_r, cplx eps_z, cplx mu, double kR, const Panel& panel, double s_a, double s_b, int n_max,
            const PolarSettings& set, double abs_tol, int depth, OrderSums coarse, std::vector<OrderSums>& leaves,
            PolarSums& acc)
{
    OrderSums fine = interval_sums(eps_r, eps_z, mu, kR, panel, s_a, s_b, 2 * set.count, n_max);
    acc.nodes += fine.nodes;
    const double diff = std::abs(order_total(fine.n) - order_total(coarse.n)) +
                        std::abs(order_total(fine.m) - order_total(coarse.m));
    const double budget = abs_tol * (s_b - s_a);
    if (diff <= budget || depth >= set.max_depth || acc.nodes >= set.max_nodes) {
        if (diff > budget) {
            acc.converged = false;
            acc.achieved += diff;
        }
        fine.min_term = std::min(fine.min_term, coarse.min_term);
        leaves.push_back(std::move(fine));
        return;
    }
    const double mid = 0.5 * (s_a + s_b);
    OrderSums left = interval_sums(eps_r, eps_z, mu, kR, panel, s_a, mid, set.count, n_max);
    OrderSums right = interval_sums(eps_r, eps_z, mu, kR, panel, mid, s_b, set.count, n_max);
    acc.nodes += left.nodes + right.nodes;
    refine(eps_r, eps_z, mu, kR, panel, s_a, mid, n_max, set, abs_tol, depth + 1, std::move(left), leaves, acc);
    refine(eps_r, eps_z, mu, kR, panel, mid, s_b, n_max, set, abs_tol, depth + 1, std::move(right), leaves, acc);
}

PolarSums polar_sums(cplx eps_r, cplx eps_z, cplx mu, double kR, int n_max, const PolarSettings& set,
                     double trunc_tol)
{
    const int panels = panel_count(kR);
    PolarSums out;
    std::vector<OrderSums> coarse;
    coarse.reserve(panels);
    double scale = 0.0;
    for (int p = 0; p < panels; ++p) {
        coarse.push_back(interval_sums(eps_r, eps_z, mu, kR, make_panel(kR, p), 0.0, 1.0, set.count, n_max));
        out.nodes += set.count;
        scale += std::abs(order_total(coarse.back().n)) + std::abs(order_total(coarse.back().m));
    }
    // The error budget is shared evenly between panels, in proportion to
    // the s-width inside each.
    const double abs_tol = set.rel_tol * scale / panels;
    std::vector<OrderSums> leaves;
    for (int p = 0; p < panels; ++p)
        refine(eps_r, eps_z, mu, kR, make_panel(kR, p), 0.0, 1.0, n_max, set, abs_tol, 0, std::move(coarse[p]),
               leaves, out);

    const std::size_t orders = n_max + 1;
    std::vector<double> gn(orders), gm(orders), gs(orders), column(leaves.size());
    auto gather = [&](std::vector<double> OrderSums::*field, std::vector<double>& dst) {
        for (std::size_t k = 0; k < orders; ++k) {
            for (std::size_t l = 0; l < leaves.size(); ++l) column[l] = (leaves[l].*field)[k];
            dst[k] = quad::pairwise_sum(column);
        }
    };
    gather(&OrderSums::n, gn);
    gather(&OrderSums::m, gm);
    gather(&OrderSums::s, gs);
    for (const auto& l : leaves) out.min_term = std::min(out.min_term, l.min_term);
    out.n = quad::pairwise_sum(gn);
    out.m = quad::pairwise_sum(gm);
    out.s = quad::pairwise_sum(gs);
    const double total = std::abs(out.n) + std::abs(out.m);
    if (total > 0.0) out.achieved /= total;
    out.truncated = true;
    for (int k = std::max(0, n_max - 2); k <= n_max; ++k) {
        const double part = std::abs(gn[k]) + std::abs(gm[k]);
        out.tail = std::max(out.tail, total > 0.0 ? part / total : part);
        if (part > trunc_tol * total) out.truncated = false;
    }
    return out;
}

struct Band {
    double lo, hi;  // eV
};

Band frequency_band(const MaterialSpec& material, double t_max, const RadiationOptions& opt)
{
    const double kt = constants::thermal_energy_ev(t_max);
    Band b{opt.x_lo * kt, opt.x_hi * kt};
    if (material.band) {
        b.lo = std::max(b.lo, material.band->lo);
        b.hi = std::min(b.hi, material.band->hi);
    }
    if (!(b.hi > b.lo)) throw DomainError("radiation: empty frequency band");
    return b;
}

quad::BlockOptions block_options(const RadiationOptions& opt)
{
    quad::BlockOptions bo;
    bo.base_intervals = opt.base_intervals;
    bo.rel_tol = opt.omega_rel_tol;
    bo.max_depth = opt.omega_max_depth;
    bo.max_evaluations = opt.omega_max_evaluations;
    return bo;
}

void check_converged(const quad::BlockResult& res, double tol, const char* what)
{
    if (!res.converged && res.achieved > tol) throw ConvergenceError(what, res.achieved);
}

}  // namespace

double thermal_occupation(double omega, double temperature)
{
    require_positive(omega, "thermal_occupation: omega");
    require_temperature(temperature, "thermal_occupation: temperature");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(constants::hbar * omega / (constants::k_B * temperature));
}

ModeDensity mode_density(cplx eps_r, cplx eps_z, cplx mu, double radius, double omega, double t_cyl, double t_env,
                         const RadiationOptions& opt)
{
    require_positive(radius, "mode_sum: radius");
    require_positive(omega, "mode_sum: omega");
    require_temperature(t_cyl, "mode_sum: cylinder temperature");
    require_temperature(t_env, "mode_sum: environment temperature");
    ModeDensity out;
    if (lossless(eps_r, eps_z, mu)) return out;

    const double k = omega / constants::c;
    const double kR = k * radius;
    int n_max = static_cast<int>(std::ceil(kR)) + 8;
    const PolarSettings set{std::max(4, opt.theta_nodes / 2), opt.theta_max_depth, opt.theta_rel_tol,
                            opt.theta_max_nodes};
    PolarSums prev;
    for (;;) {
        if (n_max > opt.n_cap) n_max = opt.n_cap;
        prev = polar_sums(eps_r, eps_z, mu, kR, n_max, set, opt.truncation_tol);
        if (prev.truncated) break;
        if (n_max >= opt.n_cap)
            throw TruncationFailure("mode_sum: order sum not converged at the order cap", prev.tail, opt.n_cap);
        n_max += std::max(8, n_max / 4);
    }
    if (!prev.converged && prev.achieved > opt.theta_rel_tol)
        throw ConvergenceError("mode_sum: polar quadrature did not converge", prev.achieved);

    const double occupation = thermal_occupation(omega, t_cyl) - thermal_occupation(omega, t_env);
    const double pref = constants::hbar * omega * k * occupation / (pi * pi);
    out.sum_n = prev.n;
    out.sum_m = prev.m;
    out.h_n = pref * prev.n;
    out.h_m = pref * prev.m;
    out.h_total_smatrix = pref * prev.s;
    out.n_max = n_max;
    out.theta_nodes = prev.nodes;
    const double direct = prev.n + prev.m;
    out.dual_discrepancy = direct != 0.0 ? std::abs(direct - prev.s) / std::abs(direct) : std::abs(prev.s);
    out.min_mode_term = prev.min_term;
    return out;
}

ModeDensity mode_sum(const MaterialSpec& material, double radius, double omega_ev, double t_cyl, double t_env,
                     const RadiationOptions& opt)
{
    require_positive(omega_ev, "mode_sum: omega");
    const AxisPermittivity e = permittivity(material, omega_ev, opt.allow_extrapolation);
    return mode_density(e.radial, e.axial, material.mu, radius, constants::ev_to_rad_per_s(omega_ev), t_cyl, t_env,
                        opt);
}

EmissionSpectrum spectral_emissivity(const MaterialSpec& material, double radius, double temperature,
                                     const std::vector<double>& omega_ev, const RadiationOptions& opt)
{
    return spectral_emissivity(material, radius, temperature, 0.0, omega_ev, opt);
}

EmissionSpectrum spectral_emissivity(const MaterialSpec& material, double radius, double temperature, double t_env,
                                     const std::vector<double>& omega_ev, const RadiationOptions& opt)
{
    require_temperature(temperature, "spectral_emissivity: temperature");
    require_temperature(t_env, "spectral_emissivity: environment temperature");
    require_positive(radius, "spectral_emissivity: radius");
    const std::size_t n = omega_ev.size();
    EmissionSpectrum out;
    out.omega_ev = omega_ev;
    out.h_n.assign(n, 0.0);
    out.h_m.assign(n, 0.0);
    out.i_omega.assign(n, 0.0);
    out.n_max.assign(n, 0);
    std::vector<ModeDensity> dens(n);
    quad::parallel_for(
        n, [&](std::size_t i) { dens[i] = mode_sum(material, radius, omega_ev[i], temperature, t_env, opt); },
        opt.workers);
    for (std::size_t i = 0; i < n; ++i) {
        const ModeDensity& d = dens[i];
        out.h_n[i] = d.h_n;
        out.h_m[i] = d.h_m;
        const double den = d.sum_n + d.sum_m;
        out.i_omega[i] = den > 0.0 ? (d.sum_n - d.sum_m) / den : std::numeric_limits<double>::quiet_NaN();
        out.n_max[i] = d.n_max;
        out.max_dual_discrepancy = std::max(out.max_dual_discrepancy, d.dual_discrepancy);
        out.min_mode_term = std::min(out.min_mode_term, d.min_mode_term);
    }
    return out;
}

RadiationResult total_radiation(const MaterialSpec& material, double radius, double t_cyl, double t_env,
                                const RadiationOptions& opt)
{
    require_positive(radius, "total_radiation: radius");
    require_temperature(t_cyl, "total_radiation: cylinder temperature");
    require_temperature(t_env, "total_radiation: environment temperature");
    const double t_max = std::max(t_cyl, t_env);
    if (t_max == 0.0) throw DomainError("total_radiation: temperatures must not both be zero");
    const Band band = frequency_band(material, t_max, opt);

    struct NodeInfo {
        int n_max = 0, theta = 0;
        double dual = 0.0, min_term = 0.0;
    };
    std::vector<NodeInfo> info;
    auto evaluate = [&](std::span<const double> u, std::vector<std::vector<double>>& values) {
        std::vector<NodeInfo> local(u.size());
        quad::parallel_for(
            u.size(),
            [&](std::size_t i) {
                const double w_ev = std::exp(u[i]);
                const ModeDensity d = mode_sum(material, radius, w_ev, t_cyl, t_env, opt);
                const double omega = constants::ev_to_rad_per_s(w_ev);
                values[i][0] = omega * d.h_n;
                values[i][1] = omega * d.h_m;
                local[i] = {d.n_max, d.theta_nodes, d.dual_discrepancy, d.min_mode_term};
            },
            opt.workers);
        info.insert(info.end(), local.begin(), local.end());
    };
    const auto res = quad::integrate_blocks(std::log(band.lo), std::log(band.hi), 2, evaluate, block_options(opt));
    check_converged(res, opt.omega_rel_tol, "total_radiation: frequency quadrature did not converge");

    RadiationResult r;
    r.h_npol = res.integral[0];
    r.h_mpol = res.integral[1];
    r.h_total = r.h_npol + r.h_mpol;
    r.i_total = r.h_total != 0.0 ? (r.h_npol - r.h_mpol) / r.h_total : 0.0;
    r.normalized = r.h_total / (2.0 * pi * radius * constants::stefan_boltzmann * std::pow(t_max, 4));
    auto& q = r.quadrature_report;
    q.omega_achieved = res.achieved;
    q.omega_evaluations = res.evaluations;
    q.omega_depth = res.depth;
    for (const auto& n : info) {
        r.mode_truncation = std::max(r.mode_truncation, n.n_max);
        q.theta_nodes_max = std::max(q.theta_nodes_max, n.theta);
        q.max_dual_discrepancy = std::max(q.max_dual_discrepancy, n.dual);
        q.min_mode_term = std::min(q.min_mode_term, n.min_term);
    }
    return r;
}

PolarizedFlux smallR_dielectric(const MaterialSpec& material, double radius, double temperature,
                                const RadiationOptions& opt)
{
    if (material.uniaxial) throw DomainError("smallR_dielectric: isotropic material required");
    require_positive(radius, "smallR_dielectric: radius");
    require_positive(temperature, "smallR_dielectric: temperature");
    const Band band = frequency_band(material, temperature, opt);
    const double c3 = constants::c * constants::c * constants::c;
    auto evaluate = [&](std::span<const double> u, std::vector<std::vector<double>>& values) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double w_ev = std::exp(u[i]);
            const cplx eps = permittivity(material, w_ev, opt.allow_extrapolation).radial;
            const double omega = constants::ev_to_rad_per_s(w_ev);
            const double w4 = omega * omega * omega * omega;
            const double pref = constants::hbar * w4 * thermal_occupation(omega, temperature) * radius / (pi * pi * c3);
            const double weight_n = ((eps * eps + 2.0 * eps - 1.0) / (eps + 1.0)).imag();
            const double weight_m = ((eps - 1.0) / (eps + 1.0)).imag();
            values[i][0] = omega * pref * weight_n / 6.0;
            values[i][1] = omega * pref * weight_m / 2.0;
        }
    };
    const auto res = quad::integrate_blocks(std::log(band.lo), std::log(band.hi), 2, evaluate, block_options(opt));
    check_converged(res, opt.omega_rel_tol, "smallR_dielectric: frequency quadrature did not converge");
    return {res.integral[0], res.integral[1]};
}

double low_temperature_polarization(double eps0)
{
    const double p = eps0 * eps0 + 2.0 * eps0;
    return (p - 3.0) / (p + 9.0);
}

LowTemperatureFlux lowT_dielectric(double eps0, double lambda_in, double radius, double temperature)
{
    require_positive(eps0, "lowT_dielectric: eps0");
    require_positive(lambda_in, "lowT_dielectric: lambda_in");
    require_positive(radius, "lowT_dielectric: radius");
    require_positive(temperature, "lowT_dielectric: temperature");
    const double lambda_t = constants::hbar * constants::c / (constants::k_B * temperature);
    const double l2 = lambda_t * lambda_t;
    const double scale =
        constants::hbar * constants::c * constants::c * lambda_in * radius / (l2 * l2 * l2);
    const double p4 = std::pow(pi, 4);
    const double g = 1.0 / ((eps0 + 1.0) * (eps0 + 1.0));
    LowTemperatureFlux out;
    out.h_n = 4.0 * p4 / 189.0 * scale * (1.0 + 2.0 * g);
    out.h_m = 8.0 * p4 / 63.0 * scale * g;
    out.i = low_temperature_polarization(eps0);
    return out;
}

double conductor_asymptotic(const MaterialSpec& material, double radius, double temperature,
                            const RadiationOptions& opt)
{
    if (material.uniaxial) throw DomainError("conductor_asymptotic: isotropic material required");
    require_positive(radius, "conductor_asymptotic: radius");
    require_positive(temperature, "conductor_asymptotic: temperature");
    const Band band = frequency_band(material, temperature, opt);
    const cplx i_pi(0.0, pi);
    auto evaluate = [&](std::span<const double> u, std::vector<std::vector<double>>& values) {
        quad::parallel_for(
            u.size(),
            [&](std::size_t i) {
                const double w_ev = std::exp(u[i]);
                const cplx eps = permittivity(material, w_ev, opt.allow_extrapolation).radial;
                const double omega = constants::ev_to_rad_per_s(w_ev);
                const double x0 = omega * radius / constants::c;
                const cplx inv_root = 1.0 / std::sqrt(eps);
                const cplx reg = cplx(0.0, -2.0) * inv_root;
                auto polar = [&](double theta) {
                    const double ct = std::cos(theta);
                    if (ct <= 0.0) return 0.0;
                    const double c2 = ct * ct;
                    const cplx den = c2 * (2.0 * constants::euler_gamma - i_pi) * x0 + reg +
                                     2.0 * c2 * x0 * std::log(ct * x0 / 2.0);
                    return 2.0 * inv_root.real() * c2 * ct / std::norm(den);
                };
                const double integral = quad::adaptive_gk(polar, 0.0, pi / 2.0, 1e-10, nullptr, 30);
                const double pref = constants::hbar * omega * omega * omega * thermal_occupation(omega, temperature) /
                                    (pi * pi * constants::c * constants::c);
                values[i][0] = omega * pref * integral;
            },
            opt.workers);
    };
    const auto res = quad::integrate_blocks(std::log(band.lo), std::log(band.hi), 1, evaluate, block_options(opt));
    check_converged(res, opt.omega_rel_tol, "conductor_asymptotic: frequency quadrature did not converge");
    return res.integral[0];
}

double rytov_approx(const MaterialSpec& material, double radius, double temperature, const RadiationOptions& opt)
{
    if (material.uniaxial) throw DomainError("rytov_approx: isotropic material required");
    require_positive(radius, "rytov_approx: radius");
    require_positive(temperature, "rytov_approx: temperature");
    const Band band = frequency_band(material, temperature, opt);
    const double omega_hi = constants::ev_to_rad_per_s(band.hi);
    if (omega_hi * radius / (2.0 * constants::c) >= 1.0)
        throw RegimeError("rytov_approx: log(omega R / 2c) vanishes inside the frequency band");
    auto evaluate = [&](std::span<const double> u, std::vector<std::vector<double>>& values) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double w_ev = std::exp(u[i]);
            const cplx eps = permittivity(material, w_ev, opt.allow_extrapolation).radial;
            const double omega = constants::ev_to_rad_per_s(w_ev);
            const double lg = std::abs(radius * std::log(omega * radius / (2.0 * constants::c)));
            const double v = constants::hbar * std::pow(omega, 1.5) * thermal_occupation(omega, temperature) /
                             (2.0 * pi * pi * std::sqrt(constants::c)) * (1.0 / std::sqrt(eps)).real() *
                             std::pow(std::abs(eps), 0.25) / std::pow(lg, 1.5);
            values[i][0] = omega * v;
        }
    };
    const auto res = quad::integrate_blocks(std::log(band.lo), std::log(band.hi), 1, evaluate, block_options(opt));
    check_converged(res, opt.omega_rel_tol, "rytov_approx: frequency quadrature did not converge");
    return res.integral[0];
}

double polarization_ratio(cplx eps)
{
    if (eps.imag() == 0.0) return std::numeric_limits<double>::infinity();
    const double a = eps.real() + 1.0;
    return (a * a + eps.imag() * eps.imag()) / eps.imag();
}

bool polarization_condition(cplx eps, double threshold) { return polarization_ratio(eps) > threshold; }

double long_wavelength_polarization(cplx eps)
{
    const double p = std::norm(eps) + 2.0 * eps.real();
    return (p - 3.0) / (p + 9.0);
}

plate::PlateResult plate_limit_check(const MaterialSpec& material, double temperature,
                                     const plate::PlateOptions& options)
{
    return plate::plate_emissivity(material, temperature, options);
}

}  // namespace cylrad
