#include "cylrad/tmatrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/specfun.hpp"

namespace cylrad::tmatrix {

namespace {

constexpr double kPi = constants::pi;
const cplx kI(0.0, 1.0);

cplx upper_branch(cplx z)
{
    if (z.imag() < 0.0 || (z.imag() == 0.0 && z.real() < 0.0)) return -z;
    return z;
}

struct Reduced {
    double kR;
    double kz_ratio;
    cplx q_ratio;
};

Reduced reduce(double radius, const ModeIndex& mode)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("tmatrix: radius must be positive");
    if (!(mode.omega > 0.0) || !std::isfinite(mode.omega)) throw DomainError("tmatrix: omega must be positive");
    const double k = mode.omega / constants::c;
    const double kt = mode.k_z / k;
    const cplx qt = upper_branch(std::sqrt(cplx(1.0 - kt * kt, 0.0)));
    if (qt == 0.0) throw DomainError("tmatrix: k_z = +-omega/c (q = 0) is not evaluated");
    return {k * radius, kt, qt};
}

// P_n(z) = J_{n+1}(z) / (z J_n(z)) = A(w) / (2 B(w)), w = -z^2/4. Returns
// P_n(z1) - P_n(z2) without cancelling the leading terms; diff_sq = z1^2 - z2^2.
constexpr double kSmallArg = 2.0;

cplx small_ratio_difference(int n, cplx z1sq, cplx z2sq, cplx diff_sq)
{
    constexpr int kTerms = 24;
    std::array<double, kTerms> a{}, b{};
    a[0] = 1.0 / (n + 1);
    b[0] = 1.0;
    for (int j = 1; j < kTerms; ++j) {
        a[j] = a[j - 1] / (double(j) * (n + j + 1));
        b[j] = b[j - 1] / (double(j) * (n + j));
    }
    const cplx w1 = -0.25 * z1sq, w2 = -0.25 * z2sq;
    // Enough terms for the larger argument; |w| <= 1 here.
    const double wmax = std::max(std::abs(w1), std::abs(w2));
    int terms = 2;
    for (double mag = wmax; terms < kTerms && mag * b[terms - 1] > 1e-18; ++terms) mag *= wmax;
    std::array<cplx, kTerms> p1{}, p2{}, pp{}, e{};
    p1[0] = p2[0] = pp[0] = 1.0;
    e[0] = 0.0;
    for (int j = 1; j < terms; ++j) {
        p1[j] = p1[j - 1] * w1;
        p2[j] = p2[j - 1] * w2;
        pp[j] = pp[j - 1] * w1 * w2;
        e[j] = w1 * e[j - 1] + p2[j - 1];  // (w1^j - w2^j) / (w1 - w2)
    }
    cplx b1 = 0.0, b2 = 0.0, sum = 0.0;
    for (int j = 0; j < terms; ++j) {
        b1 += b[j] * p1[j];
        b2 += b[j] * p2[j];
        for (int k = 0; k < j; ++k) sum += (a[j] * b[k] - a[k] * b[j]) * pp[k] * e[j - k];
    }
    return -0.25 * diff_sq * sum / (2.0 * b1 * b2);
}

using lcplx = std::complex<long double>;

// J_{n+1}(z) / (z J_n(z)) for n >= 0: extended-precision series near the
// origin, recurrence ratios elsewhere.
lcplx ratio_over_arg(int n, cplx z)
{
    if (std::abs(z) <= 4.0) {
        const lcplx w = -0.25L * lcplx(z) * lcplx(z);
        lcplx a = 1.0L / (n + 1), b = 1.0L, ta = a, tb = 1.0L;
        for (int j = 1; j < 60; ++j) {
            ta *= w / (long double)((long double)j * (n + j + 1));
            tb *= w / (long double)((long double)j * (n + j));
            a += ta;
            b += tb;
            if (std::abs(ta) < 1e-22L * std::abs(a) && std::abs(tb) < 1e-22L * std::abs(b)) break;
        }
        return a / (2.0L * b);
    }
    return lcplx(specfun::bessel_j_ratio_orders(n, z)[n] / z);
}

bool is_vacuum(cplx eps_r, cplx eps_z, cplx mu) { return eps_r == 1.0 && eps_z == 1.0 && mu == 1.0; }

TMatrixBlock from_orders(const OrderBlocks& b, int n, const ModeIndex& mode, double radius)
{
    const int k = std::abs(n);
    const double s = n < 0 ? -1.0 : 1.0;
    TMatrixBlock t;
    t.t_mm = b.t_mm[k];
    t.t_nn = b.t_nn[k];
    t.t_mn = s * b.t_mn[k];
    t.t_nm = t.t_mn;
    t.mode = mode;
    t.radius = radius;
    return t;
}

}  // namespace

WaveVectors wave_vectors(cplx eps_r, cplx eps_z, cplx mu, const ModeIndex& mode)
{
    const double k = mode.omega / constants::c;
    const double kz2 = mode.k_z * mode.k_z;
    WaveVectors w;
    w.q = upper_branch(std::sqrt(cplx(k * k - kz2, 0.0)));
    w.q_m = upper_branch(std::sqrt(eps_r * mu * k * k - kz2));
    w.q_n = upper_branch(std::sqrt(eps_z / eps_r) * w.q_m);
    return w;
}

OrderBlocks t_blocks_by_order(cplx eps_r, cplx eps_z, cplx mu, double kR, double kz_ratio, cplx q_ratio, int n_max)
{
    OrderBlocks out;
    out.t_mm.assign(n_max + 1, 0.0);
    out.t_nn.assign(n_max + 1, 0.0);
    out.t_mn.assign(n_max + 1, 0.0);
    if (is_vacuum(eps_r, eps_z, mu)) return out;

    const cplx x = kR * q_ratio;
    if (x == 0.0) throw DomainError("tmatrix: q = 0 endpoint");
    const double kt2 = kz_ratio * kz_ratio;
    const cplx xm = upper_branch(kR * std::sqrt(eps_r * mu - kt2));
    const bool same_axes = eps_r == eps_z;
    const cplx xn = same_axes ? xm : upper_branch(std::sqrt(eps_z / eps_r) * xm);

    const auto rm = specfun::bessel_j_ratio_orders(n_max, xm);
    const auto rn = same_axes ? rm : specfun::bessel_j_ratio_orders(n_max, xn);
    const auto ext = specfun::exterior_ratios(n_max, x);

    // Squared-argument differences written out so they stay exact as the
    // arguments approach each other.
    const double kR2 = kR * kR;
    const cplx x2 = x * x, xm2 = xm * xm, xn2 = xn * xn;
    const cplx x_minus_xm = kR2 * (1.0 - eps_r * mu);
    const cplx xm_minus_x = -x_minus_xm;
    const cplx xn_minus_x = kR2 * (eps_z * mu - 1.0 + kt2 * (1.0 - eps_z / eps_r));
    const cplx pole_m = kR2 * (mu - eps_r * mu + kt2 * (1.0 - mu)) / (mu * x2 * xm2);
    const cplx pole_n = kR2 * ((1.0 - mu) + kt2 * (1.0 / eps_r - 1.0)) / (x2 * xn2);
    const cplx coupling = kz_ratio * x_minus_xm / (x2 * xm2);
    const cplx inv_x2_outer = 1.0 / x2;

    const cplx inv_xm2 = 1.0 / xm2, inv_xn2 = 1.0 / xn2;
    const cplx alpha1 = inv_xn2 + inv_x2_outer / eps_z;
    const cplx alpha2 = inv_xm2 + inv_x2_outer / mu;
    const cplx lead = inv_xn2 * inv_xm2 - kt2 * inv_xm2 * inv_xm2 / (eps_z * mu) +
                      inv_x2_outer * (inv_xn2 / mu + inv_xm2 / eps_z + 2.0 * kt2 * inv_xm2 / (eps_z * mu) +
                                      1.0 / (kR2 * eps_z * mu));

    const bool small_m = std::abs(x) <= kSmallArg && std::abs(xm) <= kSmallArg;
    const bool small_n = std::abs(x) <= kSmallArg && std::abs(xn) <= kSmallArg;

    const cplx inv_x = 1.0 / x;
    const cplx inv_x2 = inv_x * inv_x;
    const cplx eps_mu = eps_z * mu;
    const cplx inv_mu = 1.0 / mu;
    const cplx inv_ez = 1.0 / eps_z;

    for (int k = 0; k <= n_max; ++k) {
        const double dk = k;
        const cplx pm = rm[k] / xm;
        const cplx pn = rn[k] / xn;
        const cplx a_m = dk / xm2 - pm;
        const cplx a_n = dk / xn2 - pn;
        const cplx h = ext.h_log_derivative[k] * inv_x;
        const cplx d1 = a_n - h * inv_ez;
        const cplx d2 = a_m - h * inv_mu;
        const cplx kappa = dk * coupling;
        const cplx k2 = kappa * kappa / eps_mu;
        // d1 d2 - k2 with the 1/x^4 parts of the order-squared term
        // cancelled by hand; they nearly annihilate at grazing incidence.
        const cplx g = ext.prev_over_h[k] * inv_x;
        const cplx beta1 = pn + g * inv_ez, beta2 = pm + g * inv_mu;
        const cplx den = dk * dk * lead - dk * (alpha1 * beta2 + alpha2 * beta1) + beta1 * beta2;
        if (!(std::abs(den) > 0.0) || !std::isfinite(std::abs(den)))
            throw DegenerateDenominator("tmatrix: Delta1 Delta2 - K^2 degenerate at n = " + std::to_string(k));
        const cplx jh = ext.j_over_h[k];
        const cplx jp = ext.jnext_over_h[k] * inv_x;  // J_{k+1} / (x H_k)

        // jh a - J'/(x H) / mu, split into pole and regular parts
        cplx num_m = jh * dk * pole_m;
        num_m += small_m ? -jh * small_ratio_difference(k, xm2, x2, xm_minus_x) - jp * (1.0 - inv_mu)
                         : -jh * pm + jp * inv_mu;
        cplx num_n = jh * dk * pole_n;
        num_n += small_n ? -jh * small_ratio_difference(k, xn2, x2, xn_minus_x) - jp * (1.0 - inv_ez)
                         : -jh * pn + jp * inv_ez;

        out.t_mm[k] = -(d1 * num_m - k2 * jh) / den;
        out.t_nn[k] = -(d2 * num_n - k2 * jh) / den;
        out.t_mn[k] = 2.0 * kI * kappa * ext.inv_h_squared[k] * inv_x2 / (kPi * eps_mu * den);
    }
    return out;
}

TMatrixBlock t_block_uniaxial(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode)
{
    const Reduced r = reduce(radius, mode);
    const auto b = t_blocks_by_order(eps_r, eps_z, mu, r.kR, r.kz_ratio, r.q_ratio, std::abs(mode.n));
    return from_orders(b, mode.n, mode, radius);
}

TMatrixBlock t_block_isotropic(cplx eps, cplx mu, double radius, const ModeIndex& mode)
{
    const Reduced r = reduce(radius, mode);
    TMatrixBlock t{};
    t.mode = mode;
    t.radius = radius;
    if (is_vacuum(eps, eps, mu)) return t;

    const int n = mode.n;
    const int na = std::abs(n);
    const double kt2 = r.kz_ratio * r.kz_ratio;
    const double kR2 = r.kR * r.kR;
    const cplx x = r.kR * r.q_ratio;
    const cplx xm = upper_branch(r.kR * std::sqrt(eps * mu - kt2));
    const cplx x2 = x * x, xm2 = xm * xm;
    const cplx px = specfun::bessel_j_ratio_orders(na, x)[na] / x;
    const cplx pm = specfun::bessel_j_ratio_orders(na, xm)[na] / xm;
    const cplx a = double(na) / xm2 - pm;
    const cplx h = specfun::log_derivative_h1(n, x) / x;
    const cplx hv = specfun::hankel1(n, x);
    const cplx jh = specfun::bessel_j(n, x) / hv;

    // a - j/c = n (c x^2 - x_M^2) / (c x^2 x_M^2) - (P(x_M) - P(x)) - P(x) (1 - 1/c)
    const cplx dp = std::abs(x) <= kSmallArg && std::abs(xm) <= kSmallArg
                        ? small_ratio_difference(na, xm2, x2, kR2 * (eps * mu - 1.0))
                        : pm - px;
    const cplx d3 = double(na) * kR2 * (eps - eps * mu + kt2 * (1.0 - eps)) / (eps * x2 * xm2) - dp -
                    px * (1.0 - 1.0 / eps);
    const cplx d4 = double(na) * kR2 * (mu - eps * mu + kt2 * (1.0 - mu)) / (mu * x2 * xm2) - dp -
                    px * (1.0 - 1.0 / mu);

    const cplx root = std::sqrt(eps * mu);
    const cplx kk = double(n) * r.kz_ratio * kR2 * (1.0 - eps * mu) / (x2 * xm2) / root;
    const cplx d1 = a - h / eps;
    const cplx d2 = a - h / mu;
    // Same grouping as the uniaxial denominator.
    const cplx g = specfun::exterior_ratios(na, x).prev_over_h[na] / x;
    const cplx inv_x2 = 1.0 / x2, inv_xm2 = 1.0 / xm2;
    const cplx alpha1 = inv_xm2 + inv_x2 / eps, alpha2 = inv_xm2 + inv_x2 / mu;
    const cplx beta1 = pm + g / eps, beta2 = pm + g / mu;
    const cplx lead = inv_xm2 * inv_xm2 * (1.0 - kt2 / (eps * mu)) +
                      inv_x2 * (inv_xm2 / mu + inv_xm2 / eps + 2.0 * kt2 * inv_xm2 / (eps * mu) +
                                1.0 / (kR2 * eps * mu));
    const double dn = na;
    const cplx den = dn * dn * lead - dn * (alpha1 * beta2 + alpha2 * beta1) + beta1 * beta2;
    if (!(std::abs(den) > 0.0) || !std::isfinite(std::abs(den)))
        throw DegenerateDenominator("tmatrix: isotropic denominator degenerate");
    t.t_mm = -jh * (d1 * d4 - kk * kk) / den;
    t.t_nn = -jh * (d2 * d3 - kk * kk) / den;
    t.t_mn = 2.0 * kI / (kPi * root * x * x) * kk / (hv * hv) / den;
    t.t_nm = t.t_mn;
    return t;
}

OracleSolution t_block_oracle_solve(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode)
{
    const Reduced r = reduce(radius, mode);
    const int n = mode.n;
    const double kR = r.kR;
    const double nk = double(n) * r.kz_ratio;
    const cplx ct = r.q_ratio;
    const cplx x = kR * ct;
    const cplx xm = upper_branch(kR * std::sqrt(eps_r * mu - r.kz_ratio * r.kz_ratio));
    const cplx xn = upper_branch(std::sqrt(eps_z / eps_r) * xm);

    // Radial functions: interior columns divided by J_n(x_M), J_n(x_N);
    // exterior columns and right-hand sides divided by H_n(x). Interior
    // log-derivatives enter as |n|/z - z P(z) with P = J_{|n|+1} / (z J_|n|).
    const int na = std::abs(n);
    const lcplx lm = (long double)na / lcplx(xm) - lcplx(xm) * ratio_over_arg(na, xm);
    const lcplx ln = (long double)na / lcplx(xn) - lcplx(xn) * ratio_over_arg(na, xn);
    const cplx hv = specfun::hankel1(n, x);
    const cplx hp = 0.5 * (specfun::hankel1(n - 1, x) - specfun::hankel1(n + 1, x));
    const cplx jv = specfun::bessel_j(n, x);
    const lcplx lh = lcplx(hp / hv);
    const lcplx jh = lcplx(jv / hv);
    lcplx jph;
    if (std::abs(x) <= 4.0)
        jph = jh * ((long double)na / lcplx(x) - lcplx(x) * ratio_over_arg(na, x));
    else
        jph = lcplx(0.5 * (specfun::bessel_j(n - 1, x) - specfun::bessel_j(n + 1, x)) / hv);

    const lcplx lx(x), lxm(xm), lxn(xn), lct(ct), lmu(mu), ler(eps_r), lez(eps_z);
    const long double lkR = kR, lnk = nk;
    const lcplx zero(0.0L);
    Eigen::Matrix<lcplx, 4, 4> m;
    m << lxm / (lmu * lkR), -lct, zero, zero,
         lm, -lh, lnk / lxn, -lnk / lx,
         zero, zero, (ler / lez) * lxn / lkR, -lct,
         lnk / (lmu * lxm), -lnk / lx, ler * ln, -lh;
    Eigen::Matrix<lcplx, 4, 2> rhs;
    rhs << lct * jh, zero,
           jph, lnk / lx * jh,
           zero, lct * jh,
           lnk / lx * jh, jph;

    Eigen::JacobiSVD<Eigen::Matrix<lcplx, 4, 4>> svd(m);
    const auto sv = svd.singularValues();
    const double cond = sv(3) > 0.0L ? double(sv(0) / sv(3)) : std::numeric_limits<double>::infinity();
    if (!(cond <= 1e14)) throw SingularMatrix("tmatrix oracle: boundary system is singular", cond);

    const Eigen::Matrix<lcplx, 4, 2> lsol = m.fullPivLu().solve(rhs);
    const Eigen::Matrix<cplx, 4, 2> sol = lsol.unaryExpr([](const lcplx& v) { return cplx(v); });

    OracleSolution out;
    out.block.t_mm = sol(1, 0);
    out.block.t_nm = sol(3, 0);
    out.block.t_mn = sol(1, 1);
    out.block.t_nn = sol(3, 1);
    out.block.mode = mode;
    out.block.radius = radius;
    out.interior_m = {sol(0, 0), sol(0, 1)};
    out.interior_n = {sol(2, 0), sol(2, 1)};
    out.condition = cond;
    return out;
}

TMatrixBlock t_block_oracle(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode)
{
    return t_block_oracle_solve(eps_r, eps_z, mu, radius, mode).block;
}

TMatrixBlock t_smallR(cplx eps, cplx mu, const ModeIndex& mode, double radius)
{
    const double k = mode.omega / constants::c;
    const double kt = mode.k_z / k;
    const double x2 = (k * radius) * (k * radius);
    TMatrixBlock t{};
    t.mode = mode;
    t.radius = radius;
    const int n = mode.n;
    if (n == 0) {
        t.t_nn = -kI * kPi / 4.0 * (eps - 1.0) * (kt * kt - 1.0) * x2;
        t.t_mm = -kI * kPi / 4.0 * (mu - 1.0) * (kt * kt - 1.0) * x2;
    } else if (std::abs(n) == 1) {
        const cplx den = (eps + 1.0) * (mu + 1.0);
        t.t_nn = kI * kPi / 4.0 * (kt * kt * (mu + 1.0) * (eps - 1.0) + (mu - 1.0) * (eps + 1.0)) / den * x2;
        t.t_mm = kI * kPi / 4.0 * (kt * kt * (mu - 1.0) * (eps + 1.0) + (mu + 1.0) * (eps - 1.0)) / den * x2;
        t.t_mn = double(n) * kI * kPi / 2.0 * (eps * mu - 1.0) * kt / den * x2;
        t.t_nm = t.t_mn;
    }
    return t;
}

cplx t_conductor_limit(cplx eps, const ModeIndex& mode, double radius)
{
    const double k = mode.omega / constants::c;
    const double kt = mode.k_z / k;
    const double x0 = k * radius;
    const double s = 1.0 - kt * kt;
    const cplx den = kPi + 2.0 * kI * constants::euler_gamma + 2.0 / (s * (2.0 * kI + std::sqrt(eps) * x0)) +
                     2.0 * kI * std::log(std::sqrt(s) * x0 / 2.0);
    return -kPi / den;
}

}  // namespace cylrad::tmatrix
