#include "cylrad/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"

namespace cylrad::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;
constexpr double kSeriesRadius = 2.0;
constexpr double kAsymptoticRadius = 25.0;
constexpr double kLogMax = 709.0;
constexpr double kPoleRatio = 1e13;
constexpr double kRescale = 1e250;
constexpr int kMaxOrder = 5000;
const cplx kI(0.0, 1.0);

double parity(int n) { return (n & 1) ? -1.0 : 1.0; }

cplx ipow(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return 1.0;
    case 1: return kI;
    case 2: return -1.0;
    default: return -kI;
    }
}

void check_argument(int n, cplx z, const char* who)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(who) + ": non-finite argument");
    if (std::abs(n) > kMaxOrder)
        throw DomainError(std::string(who) + ": order outside |n| <= 5000");
}

cplx series_j(int n, cplx z)
{
    const cplx half = 0.5 * z;
    cplx lead = 1.0;
    for (int i = 1; i <= n; ++i) lead *= half / double(i);
    const cplx w = -half * half;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        term *= w / (double(k) * double(n + k));
        sum += term;
        if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    }
    return lead * sum;
}

// sum_k (s i)^k a_k(n) / z^k of the Hankel expansion; empty if the
// truncated series cannot reach full precision at this |z|.
std::optional<cplx> hankel_tail(int n, cplx z, double s)
{
    const double mu = 4.0 * double(n) * double(n);
    const cplx step = cplx(0.0, s) / (8.0 * z);
    cplx term = 1.0, sum = 1.0;
    double peak = 1.0, prev = 1.0;
    for (int k = 1; k < 600; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / double(k) * step;
        const double mag = std::abs(term);
        sum += term;
        if (mag <= 0.25 * kEps * std::abs(sum)) {
            if (peak > 16.0) return std::nullopt;
            return sum;
        }
        if (odd > 2.0 * n && mag > prev) return std::nullopt;
        peak = std::max(peak, mag);
        prev = mag;
    }
    return std::nullopt;
}

// Re z >= 0 assumed.
std::optional<cplx> asymptotic_j(int n, cplx z)
{
    auto plus = hankel_tail(n, z, 1.0);
    if (!plus) return std::nullopt;
    auto minus = hankel_tail(n, z, -1.0);
    if (!minus) return std::nullopt;
    const cplx pref = std::sqrt(2.0 / (kPi * z));
    const cplx chi = z - (0.5 * n + 0.25) * kPi;
    const double log_mag = std::log(std::abs(pref)) + std::abs(z.imag()) +
                           std::log(std::max(std::abs(*plus), std::abs(*minus)));
    if (log_mag > kLogMax) throw OverflowRisk("bessel_j: |J_n(z)| exceeds double range");
    return 0.5 * pref * (std::exp(kI * chi) * *plus + std::exp(-kI * chi) * *minus);
}

// Backward recurrence from well above max(n_top, |z|), normalised with
// exp(-i s z) = J_0 + 2 sum_k (-i s)^k J_k, s = sign(Im z).
// Returns J_k * exp(-log_scale) for k = 0..n_top.
std::vector<cplx> miller_sequence(int n_top, cplx z, double& log_scale)
{
    const double top = std::max<double>(n_top, std::abs(z));
    const int start = int(top + 20.0 + 10.0 * std::cbrt(top));
    const double s = z.imag() < 0.0 ? -1.0 : 1.0;
    const cplx phase[4] = {1.0, cplx(0.0, -s), -1.0, cplx(0.0, s)};

    std::vector<cplx> y(n_top + 1, 0.0);
    cplx y_next = 0.0, y_cur = 1.0, norm = 0.0;
    for (int k = start; k >= 1; --k) {
        if (k <= n_top) y[k] = y_cur;
        norm += 2.0 * phase[k & 3] * y_cur;
        const cplx y_prev = (2.0 * k / z) * y_cur - y_next;
        y_next = y_cur;
        y_cur = y_prev;
        if (std::abs(y_cur) > kRescale) {
            const double f = 1.0 / kRescale;
            y_cur *= f;
            y_next *= f;
            norm *= f;
            for (int j = std::max(k, 1); j <= n_top; ++j) y[j] *= f;
        }
    }
    y[0] = y_cur;
    norm += y_cur;

    const cplx e = cplx(0.0, -s) * z;
    log_scale = e.real();
    const cplx factor = std::exp(cplx(0.0, e.imag())) / norm;
    for (auto& v : y) v *= factor;
    return y;
}

cplx miller_j(int n, cplx z)
{
    double log_scale = 0.0;
    const auto y = miller_sequence(std::max(n, 1), z, log_scale);
    const cplx v = y[n];
    if (v == 0.0) return 0.0;
    if (std::log(std::abs(v)) + log_scale > kLogMax)
        throw OverflowRisk("bessel_j: |J_n(z)| exceeds double range");
    return v * std::exp(log_scale);
}

// K_0(w), K_1(w) for Re w >= 0, w != 0.
void bessel_k01(cplx w, cplx& k0, cplx& k1)
{
    if (std::abs(w) <= 2.0) {
        const cplx t = 0.25 * w * w;
        const cplx lg = std::log(0.5 * w);
        cplx term0 = 1.0, term1 = 1.0;
        cplx i0 = 1.0, s0 = 0.0, i1s = 1.0, s1 = 1.0 - 2.0 * kGamma;
        double harmonic = 0.0;
        for (int k = 1; k < 80; ++k) {
            term0 *= t / (double(k) * k);
            term1 *= t / (double(k) * (k + 1));
            harmonic += 1.0 / k;
            i0 += term0;
            s0 += harmonic * term0;
            i1s += term1;
            s1 += (2.0 * (harmonic - kGamma) + 1.0 / (k + 1)) * term1;
            if (std::abs(term0) < 1e-18 * std::abs(i0) && std::abs(term1) < 1e-18 * std::abs(i1s)) break;
        }
        k0 = -(lg + kGamma) * i0 + s0;
        k1 = 1.0 / w + lg * (0.5 * w * i1s) - 0.25 * w * s1;
        return;
    }
    // Steed/Temme continued fraction
    cplx b = 2.0 * (1.0 + w);
    cplx d = 1.0 / b;
    cplx h = d, delh = d;
    cplx q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    cplx q = a1;
    double c = a1, a = -a1;
    cplx s = 1.0 + q * delh;
    int i = 1;
    for (; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < 0.5 * kEps * std::abs(s)) break;
    }
    if (i == 100000) throw ConvergenceError("bessel_k01: continued fraction did not converge", 0.0);
    h = a1 * h;
    k0 = std::sqrt(kPi / (2.0 * w)) * std::exp(-w) / s;
    k1 = k0 * (w + 0.5 - h) / w;
}

// Im z >= 0, z != 0, n >= 0.
cplx hankel1_upper(int n, cplx z)
{
    const cplx w = -kI * z;
    cplx k0, k1;
    bessel_k01(w, k0, k1);
    cplx kn = k0;
    if (n >= 1) {
        cplx km = k0;
        kn = k1;
        for (int k = 1; k < n; ++k) {
            const cplx kp = km + (2.0 * k / w) * kn;
            km = kn;
            kn = kp;
            if (!(std::abs(kn) < 1e300)) throw OverflowRisk("hankel1: |H_n(z)| exceeds double range");
        }
    }
    return (2.0 / kPi) * ipow(-n - 1) * kn;
}

// Lentz evaluation of J_{n+1}/J_n.
cplx cf1_ratio(int n, cplx z)
{
    const double tiny = 1e-300;
    cplx f = tiny, cc = f, dd = 0.0;
    const int cap = int(20.0 * (std::abs(z) + n)) + 2000;
    for (int k = 1; k < cap; ++k) {
        const cplx b = 2.0 * (n + k) / z;
        const double a = k == 1 ? 1.0 : -1.0;
        dd = b + a * dd;
        if (dd == 0.0) dd = tiny;
        cc = b + a / cc;
        if (cc == 0.0) cc = tiny;
        dd = 1.0 / dd;
        const cplx delta = cc * dd;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) return f;
    }
    throw ConvergenceError("log_derivative_j: continued fraction did not converge", 0.0);
}

// Backward ratio recurrence seeded by the continued fraction; J is the
// solution dominant in the downward direction for every argument, so this
// stays stable where J_n itself would overflow.
std::vector<cplx> ratio_orders_first_quadrant(int n_max, cplx z)
{
    std::vector<cplx> r(n_max + 1);
    r[n_max] = cf1_ratio(n_max, z);
    for (int k = n_max; k >= 1; --k) r[k - 1] = 1.0 / (2.0 * k / z - r[k]);
    return r;
}

void check_pole(cplx r, int n, cplx z)
{
    if (!(std::abs(r) < kPoleRatio))
        throw PoleError("log_derivative_j: argument at a zero of J_" + std::to_string(n) + " (z = " +
                        std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i)");
}

}  // namespace

cplx bessel_j(int n, cplx z)
{
    check_argument(n, z, "bessel_j");
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        sign = parity(n);
    }
    if (z.real() < 0.0) {
        z = -z;
        sign *= parity(n);
    }
    const double az = std::abs(z);
    cplx v;
    if (az <= kSeriesRadius) {
        v = series_j(n, z);
    } else if (auto a = az >= kAsymptoticRadius ? asymptotic_j(n, z) : std::nullopt) {
        v = *a;
    } else {
        v = miller_j(n, z);
    }
    // The magnitude estimates above are approximate near the edge of the double range.
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw OverflowRisk("bessel_j: |J_n(z)| exceeds double range");
    return sign * v;
}

cplx hankel1(int n, cplx z)
{
    check_argument(n, z, "hankel1");
    if (z == 0.0) throw DomainError("hankel1: singular at z = 0");
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        sign = parity(n);
    }
    if (z.imag() >= 0.0) return sign * hankel1_upper(n, z);
    const cplx v = 2.0 * bessel_j(n, z) - std::conj(hankel1_upper(n, std::conj(z)));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw OverflowRisk("hankel1: |H_n(z)| exceeds double range");
    return sign * v;
}

cplx bessel_y(int n, cplx z) { return (hankel1(n, z) - bessel_j(n, z)) / kI; }

cplx log_derivative_j(int n, cplx z)
{
    check_argument(n, z, "log_derivative_j");
    n = std::abs(n);
    if (z == 0.0) {
        if (n == 0) return 0.0;
        throw PoleError("log_derivative_j: J_n(0) = 0 for n != 0");
    }
    const bool flip = z.real() < 0.0;
    if (flip) z = -z;
    const bool mirrored = z.imag() < 0.0;
    if (mirrored) z = std::conj(z);

    const cplx r = cf1_ratio(n, z);
    check_pole(r, n, z);
    cplx out = double(n) / z - r;
    if (mirrored) out = std::conj(out);
    return flip ? -out : out;
}

cplx log_derivative_h1(int n, cplx z)
{
    check_argument(n, z, "log_derivative_h1");
    if (z == 0.0) throw DomainError("log_derivative_h1: singular at z = 0");
    n = std::abs(n);
    if (z.imag() >= 0.0) {
        const cplx h0 = hankel1_upper(0, z);
        const cplx h1 = hankel1_upper(1, z);
        cplx s = h1 / h0;
        for (int k = 1; k <= n; ++k) s = 2.0 * k / z - 1.0 / s;
        return double(n) / z - s;
    }
    const cplx hn = hankel1(n, z);
    const cplx hp = hankel1(n + 1, z);
    return double(n) / z - hp / hn;
}

BesselEval bessel_pair(int n, cplx z)
{
    BesselEval e;
    e.order = n;
    e.argument = z;
    e.value_h1 = hankel1(n, z);
    e.value_j = bessel_j(n, z);
    e.value_jprime = 0.5 * (bessel_j(n - 1, z) - bessel_j(n + 1, z));
    e.value_h1prime = 0.5 * (hankel1(n - 1, z) - hankel1(n + 1, z));
    const cplx expected = 2.0 * kI / (kPi * z);
    cplx w;
    if (z.imag() < 0.0) {
        // H1 = 2J - H2 grows here; W[J, H1] = -W[J, H2] avoids cancelling two large products.
        const cplx zc = std::conj(z);
        const cplx h2 = std::conj(hankel1(n, zc));
        const cplx h2p = std::conj(0.5 * (hankel1(n - 1, zc) - hankel1(n + 1, zc)));
        w = -(e.value_j * h2p - e.value_jprime * h2);
    } else {
        w = e.value_j * e.value_h1prime - e.value_jprime * e.value_h1;
    }
    e.wronskian_residual = std::abs(w - expected) / std::abs(expected);
    return e;
}

std::vector<cplx> bessel_j_ratio_orders(int n_max, cplx z)
{
    check_argument(n_max, z, "bessel_j_ratio_orders");
    if (n_max < 0) throw DomainError("bessel_j_ratio_orders: negative order count");
    if (z == 0.0) {
        if (n_max == 0) return {0.0};
        throw PoleError("bessel_j_ratio_orders: J_n(0) = 0 for n != 0");
    }
    const bool flip = z.real() < 0.0;
    if (flip) z = -z;
    const bool mirrored = z.imag() < 0.0;
    if (mirrored) z = std::conj(z);

    auto out = ratio_orders_first_quadrant(n_max, z);
    for (int k = 0; k <= n_max; ++k) {
        check_pole(out[k], k, z);
        if (mirrored) out[k] = std::conj(out[k]);
        if (flip) out[k] = -out[k];
    }
    return out;
}

std::vector<cplx> log_derivative_j_orders(int n_max, cplx z)
{
    check_argument(n_max, z, "log_derivative_j_orders");
    if (n_max < 0) throw DomainError("log_derivative_j_orders: negative order count");
    if (z == 0.0) {
        if (n_max == 0) return {0.0};
        throw PoleError("log_derivative_j_orders: J_n(0) = 0 for n != 0");
    }
    auto out = bessel_j_ratio_orders(n_max, z);
    for (int k = 0; k <= n_max; ++k) out[k] = double(k) / z - out[k];
    return out;
}

ExteriorRatios exterior_ratios(int n_max, cplx z)
{
    check_argument(n_max, z, "exterior_ratios");
    if (z == 0.0) throw DomainError("exterior_ratios: singular at z = 0");
    if (n_max < 0) throw DomainError("exterior_ratios: negative order count");

    double log_scale = 0.0;
    const auto j = miller_sequence(n_max + 1, z, log_scale);
    if (log_scale > kLogMax) throw OverflowRisk("exterior_ratios: |J_n(z)| exceeds double range");
    const double scale = std::exp(log_scale);

    ExteriorRatios out;
    out.j_over_h.resize(n_max + 1);
    out.jprime_over_h.resize(n_max + 1);
    out.h_log_derivative.resize(n_max + 1);
    out.inv_h_squared.resize(n_max + 1);
    out.jnext_over_h.resize(n_max + 1);
    out.prev_over_h.resize(n_max + 1);

    cplx h_prev = hankel1(0, z);
    cplx h_cur = hankel1(1, z);
    // k = 0
    {
        const cplx inv = 1.0 / h_prev;
        out.j_over_h[0] = j[0] * scale * inv;
        out.jprime_over_h[0] = -j[1] * scale * inv;
        out.jnext_over_h[0] = j[1] * scale * inv;
        out.h_log_derivative[0] = -h_cur * inv;
        out.prev_over_h[0] = -h_cur * inv;
        out.inv_h_squared[0] = inv * inv;
    }
    bool values = true;
    cplx ratio = h_cur / h_prev;  // H_k / H_{k-1}
    for (int k = 1; k <= n_max; ++k) {
        const cplx kz = double(k) / z;
        out.prev_over_h[k] = 1.0 / ratio;
        out.h_log_derivative[k] = out.prev_over_h[k] - kz;
        if (values && std::abs(h_cur) < 1e150) {
            const cplx inv = 1.0 / h_cur;
            out.j_over_h[k] = j[k] * scale * inv;
            out.jprime_over_h[k] = (j[k - 1] - kz * j[k]) * scale * inv;
            out.jnext_over_h[k] = j[k + 1] * scale * inv;
            out.inv_h_squared[k] = inv * inv;
        } else {
            values = false;
            out.j_over_h[k] = 0.0;
            out.jprime_over_h[k] = 0.0;
            out.inv_h_squared[k] = 0.0;
            out.jnext_over_h[k] = 0.0;
        }
        // advance H_{k+1} = (2k/z) H_k - H_{k-1}
        ratio = 2.0 * kz - 1.0 / ratio;
        if (values) {
            const cplx h_next = 2.0 * kz * h_cur - h_prev;
            h_prev = h_cur;
            h_cur = h_next;
        }
    }
    return out;
}

}  // namespace cylrad::specfun
