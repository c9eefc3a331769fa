#include "cylrad/plate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/quadrature.hpp"

namespace cylrad::plate {

namespace {

using Vec3 = Eigen::Matrix<cplx, 3, 1>;

cplx upper_sqrt(cplx z)
{
    cplx r = std::sqrt(z);
    if (r.imag() < 0.0 || (r.imag() == 0.0 && r.real() < 0.0)) r = -r;
    return r;
}

void check_propagating(double omega, double k_perp)
{
    if (!(omega > 0.0)) throw DomainError("fresnel: omega must be positive");
    const double k = omega / constants::c;
    if (!(k_perp >= 0.0) || !(k_perp < k)) throw DomainError("fresnel: k_perp must lie in [0, omega/c)");
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return Vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}

cplx dot(const Vec3& a, const Vec3& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

Vec3 normalized(const Vec3& v)
{
    const double n = v.norm();
    if (!(n > 0.0)) throw BranchDegeneracy("fresnel_uniaxial: transmitted polarization vector vanishes");
    return v / n;
}

FresnelPair iso_coefficients(cplx eps, cplx mu, double s, double c)
{
    const cplx kz1 = upper_sqrt(eps * mu - s * s);
    FresnelPair r;
    r.r_ss = (mu * c - kz1) / (mu * c + kz1);
    r.r_pp = (eps * c - kz1) / (eps * c + kz1);
    r.r_sp = 0.0;
    r.r_ps = 0.0;
    return r;
}

// Direction given by sin and cos of the polar angle, so grazing incidence
// keeps full relative precision in the normal component.
FresnelPair uni_coefficients(cplx eps_r, cplx eps_z, cplx mu, double kx, double kz0, double phi)
{
    // Lengths in units of 1/k. Vacuum above (z > 0), medium below.
    const double ca = std::cos(phi), sa = std::sin(phi);
    const Vec3 axis(ca, sa, 0.0);

    const cplx kap_o = upper_sqrt(eps_r * mu - kx * kx);
    const cplx kap_e = upper_sqrt(eps_z * mu - kx * kx * sa * sa - (eps_z / eps_r) * kx * kx * ca * ca);

    const Vec3 ko(kx, 0.0, -kap_o);
    const Vec3 ke(kx, 0.0, -kap_e);
    const Vec3 e_o = normalized(cross(axis, ko));
    const Vec3 d_e = dot(ke, ke) * axis - dot(ke, axis) * ke;
    const cplx d_par = dot(d_e, axis);
    const Vec3 e_e = normalized((d_e - d_par * axis) / eps_r + (d_par / eps_z) * axis);
    const Vec3 h_o = cross(ko, e_o) / mu;
    const Vec3 h_e = cross(ke, e_e) / mu;

    // Unknowns: reflected s, reflected p, ordinary, extraordinary.
    // Rows: E_x, E_y, H_x, H_y.
    Eigen::Matrix4cd m;
    m << 0.0, kz0, -e_o(0), -e_e(0),
         1.0, 0.0, -e_o(1), -e_e(1),
         -kz0, 0.0, -h_o(0), -h_e(0),
         0.0, 1.0, -h_o(1), -h_e(1);
    Eigen::Matrix<cplx, 4, 2> rhs;
    rhs << 0.0, kz0,
           -1.0, 0.0,
           -kz0, 0.0,
           0.0, -1.0;

    const auto lu = m.fullPivLu();
    if (lu.rank() < 4 || !(std::abs(lu.rcond()) > 1e-13)) {
        if (std::abs(kap_o - kap_e) <= 1e-13 * std::abs(kap_o))
            throw BranchDegeneracy("fresnel_uniaxial: ordinary and extraordinary branches coincide");
        throw SingularMatrix("fresnel_uniaxial: interface system is singular", 1.0 / std::abs(lu.rcond()));
    }
    const Eigen::Matrix<cplx, 4, 2> sol = lu.solve(rhs);
    FresnelPair r;
    r.r_ss = sol(0, 0);
    r.r_ps = sol(1, 0);
    r.r_sp = sol(0, 1);
    r.r_pp = sol(1, 1);
    return r;
}

}  // namespace

FresnelPair fresnel_isotropic(cplx eps, cplx mu, double omega, double k_perp)
{
    check_propagating(omega, k_perp);
    const double s = k_perp / (omega / constants::c);
    return iso_coefficients(eps, mu, s, std::sqrt((1.0 - s) * (1.0 + s)));
}

FresnelPair fresnel_uniaxial(cplx eps_r, cplx eps_z, cplx mu, double omega, double k_perp, double phi)
{
    check_propagating(omega, k_perp);
    const double s = k_perp / (omega / constants::c);
    return uni_coefficients(eps_r, eps_z, mu, s, std::sqrt((1.0 - s) * (1.0 + s)), phi);
}

namespace {

struct Bracket {
    double m, n, lo, hi;
};

Bracket brackets(const FresnelPair& r, double c2, double s2)
{
    const double a = std::norm(r.r_ss) + std::norm(r.r_sp);
    const double b = std::norm(r.r_pp) + std::norm(r.r_ps);
    const double es = 1.0 - (std::norm(r.r_ss) + std::norm(r.r_ps));
    const double ep = 1.0 - (std::norm(r.r_pp) + std::norm(r.r_sp));
    return {1.0 - (a * c2 + b * s2), 1.0 - (a * s2 + b * c2), std::min(es, ep), std::max(es, ep)};
}

// Integral over phi in [0, 2 pi) at fixed k_perp; the integrand is even and
// pi-periodic, so the trapezoid runs over [0, pi/2] with nested doubling.
Bracket phi_integral(cplx eps_r, cplx eps_z, cplx mu, double s, double c, const PlateOptions& opt,
                     int& nodes_used)
{
    const double quarter = constants::pi / 2.0;
    int n = std::max(1, opt.phi_nodes / 4);
    std::vector<Bracket> samples;
    auto sample = [&](double phi) {
        const FresnelPair r = uni_coefficients(eps_r, eps_z, mu, s, c, phi);
        const double cp = std::cos(phi), sp = std::sin(phi);
        return brackets(r, cp * cp, sp * sp);
    };
    for (int j = 0; j <= n; ++j) samples.push_back(sample(j * quarter / n));

    auto trapezoid = [&](const std::vector<Bracket>& v, double& m, double& nn) {
        std::vector<double> pm, pn;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double w = (j == 0 || j + 1 == v.size()) ? 0.5 : 1.0;
            pm.push_back(w * v[j].m);
            pn.push_back(w * v[j].n);
        }
        const double h = quarter / double(v.size() - 1);
        m = 4.0 * h * quad::pairwise_sum(pm);
        nn = 4.0 * h * quad::pairwise_sum(pn);
    };

    double m_prev, n_prev;
    trapezoid(samples, m_prev, n_prev);
    for (;;) {
        const int n2 = 2 * n;
        std::vector<Bracket> next(n2 + 1);
        for (int j = 0; j <= n; ++j) next[2 * j] = samples[j];
        for (int j = 0; j < n; ++j) next[2 * j + 1] = sample((2 * j + 1) * quarter / n2);
        samples = std::move(next);
        n = n2;
        double m_cur, n_cur;
        trapezoid(samples, m_cur, n_cur);
        const double diff = std::abs(m_cur - m_prev) + std::abs(n_cur - n_prev);
        const double scale = std::abs(m_cur) + std::abs(n_cur);
        m_prev = m_cur;
        n_prev = n_cur;
        if (diff <= opt.phi_rel_tol * scale || scale == 0.0) break;
        if (4 * n >= opt.phi_max_nodes) {
            throw ConvergenceError("plate: azimuthal quadrature did not converge", scale > 0 ? diff / scale : diff);
        }
    }
    nodes_used = 4 * n;
    Bracket out{m_prev, n_prev, 1.0, 0.0};
    for (const auto& b : samples) {
        out.lo = std::min(out.lo, b.lo);
        out.hi = std::max(out.hi, b.hi);
    }
    return out;
}

}  // namespace

PlateSpectral plate_angular(cplx eps_r, cplx eps_z, cplx mu, bool uniaxial, double /*omega*/,
                            const PlateOptions& opt)
{
    // int d^2k_perp / k^2 = int dphi int_0^1 u du with u the cosine of the
    // polar angle. Strong reflectors emit p waves near u ~ 1/|sqrt(eps)|, so
    // the u range is cut into decade panels reaching well below that scale.
    PlateSpectral out;
    const double scale = std::max({std::abs(std::sqrt(eps_r * mu)), std::abs(std::sqrt(eps_z * mu)), 1.0});
    std::vector<double> edges{1.0};
    const double floor_u = 1e-3 / scale;
    while (edges.back() > floor_u) edges.push_back(edges.back() * 0.1);
    edges.push_back(0.0);

    auto node_value = [&](double u, int& phi_used) {
        const double sn = std::sqrt((1.0 - u) * (1.0 + u));
        if (!uniaxial) {
            const Bracket full = brackets(iso_coefficients(eps_r, mu, sn, u), 0.5, 0.5);
            // int_0^{2 pi} cos^2 = int_0^{2 pi} sin^2 = pi
            return Bracket{2.0 * constants::pi * full.m, 2.0 * constants::pi * full.n, full.lo, full.hi};
        }
        return phi_integral(eps_r, eps_z, mu, sn, u, opt, phi_used);
    };

    std::vector<double> pm, pn;
    int theta_max = 0, phi_max = 0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double a = edges[p + 1], b = edges[p];
        auto panel = [&](int count, double& m, double& n) {
            const auto& rule = quad::gauss_legendre(count);
            std::vector<double> vm(count), vn(count);
            for (int i = 0; i < count; ++i) {
                const double u = a + 0.5 * (b - a) * (rule.nodes[i] + 1.0);
                const double w = 0.5 * (b - a) * rule.weights[i] * u;
                int used = 0;
                const Bracket br = node_value(u, used);
                phi_max = std::max(phi_max, used);
                vm[i] = w * br.m;
                vn[i] = w * br.n;
                out.min_bracket = std::min(out.min_bracket, br.lo);
                out.max_bracket = std::max(out.max_bracket, br.hi);
            }
            m = quad::pairwise_sum(vm);
            n = quad::pairwise_sum(vn);
        };
        int count = opt.theta_nodes;
        double m0, n0;
        panel(count, m0, n0);
        for (;;) {
            count *= 2;
            double m1, n1;
            panel(count, m1, n1);
            const double diff = std::abs(m1 - m0) + std::abs(n1 - n0);
            const double size = std::abs(m1) + std::abs(n1);
            m0 = m1;
            n0 = n1;
            if (diff <= opt.theta_rel_tol * size || size == 0.0) break;
            if (count >= opt.theta_max_nodes)
                throw ConvergenceError("plate: polar quadrature did not converge", size > 0 ? diff / size : diff);
        }
        theta_max = std::max(theta_max, count);
        pm.push_back(m0);
        pn.push_back(n0);
    }
    out.m = quad::pairwise_sum(pm);
    out.n = quad::pairwise_sum(pn);
    out.theta_nodes = theta_max;
    out.phi_nodes = phi_max;
    return out;
}

PlateResult plate_emissivity(const MaterialSpec& material, double temperature, const PlateOptions& opt)
{
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw DomainError("plate_emissivity: temperature must be positive");
    const double kt = constants::thermal_energy_ev(temperature);
    double lo = opt.x_lo * kt, hi = opt.x_hi * kt;
    if (material.band) {
        lo = std::max(lo, material.band->lo);
        hi = std::min(hi, material.band->hi);
    }
    if (!(hi > lo)) throw DomainError("plate_emissivity: empty frequency band");

    const bool uni = material.uniaxial;
    std::vector<double> min_b, max_b;
    auto evaluate = [&](std::span<const double> u, std::vector<std::vector<double>>& out) {
        std::vector<double> mins(u.size(), 1.0), maxs(u.size(), 0.0);
        quad::parallel_for(
            u.size(),
            [&](std::size_t i) {
                const double w_ev = std::exp(u[i]);
                const AxisPermittivity e = permittivity(material, w_ev, opt.allow_extrapolation);
                const double omega = constants::ev_to_rad_per_s(w_ev);
                const PlateSpectral a = plate_angular(e.radial, e.axial, material.mu, uni, omega, opt);
                const double nb = 1.0 / std::expm1(w_ev / kt);
                const double k = omega / constants::c;
                // hbar/(8 pi^3) omega n_B k^2, times omega for d(ln omega)
                const double pref = constants::hbar / (8.0 * std::pow(constants::pi, 3)) * omega * nb * k * k * omega;
                out[i][0] = pref * a.m;
                out[i][1] = pref * a.n;
                mins[i] = a.min_bracket;
                maxs[i] = a.max_bracket;
            },
            opt.workers);
        min_b.insert(min_b.end(), mins.begin(), mins.end());
        max_b.insert(max_b.end(), maxs.begin(), maxs.end());
    };

    quad::BlockOptions bo;
    bo.base_intervals = opt.base_intervals;
    bo.rel_tol = opt.omega_rel_tol;
    bo.max_depth = opt.omega_max_depth;
    const auto res = quad::integrate_blocks(std::log(lo), std::log(hi), 2, evaluate, bo);
    if (!res.converged && res.achieved > opt.omega_rel_tol)
        throw ConvergenceError("plate_emissivity: frequency quadrature did not converge", res.achieved);

    PlateResult r;
    r.s_m = res.integral[0];
    r.s_n = res.integral[1];
    r.s = r.s_m + r.s_n;
    r.i_plate = r.s != 0.0 ? (r.s_n - r.s_m) / r.s : 0.0;
    r.normalized = r.s / (constants::stefan_boltzmann * std::pow(temperature, 4));
    r.achieved = res.achieved;
    for (double v : min_b) r.min_bracket = std::min(r.min_bracket, v);
    for (double v : max_b) r.max_bracket = std::max(r.max_bracket, v);
    return r;
}

}  // namespace cylrad::plate
