#include "cylrad/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "cylrad/constants.hpp"
#include "cylrad/errors.hpp"
#include "cylrad/radiation.hpp"
#include "cylrad/specfun.hpp"
#include "cylrad/tmatrix.hpp"

namespace cylrad::selfcheck {

namespace {

// mt19937_64 output mapped to [0, 1) by hand so the stream is identical on
// every standard library.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : g_(seed) {}
    double operator()() { return double(g_() >> 11) * 0x1.0p-53; }
    double between(double lo, double hi) { return lo + (hi - lo) * (*this)(); }
    double log_between(double lo, double hi) { return std::exp(between(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 g_;
};

double rel(cplx a, cplx b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double block_error(const tmatrix::TMatrixBlock& a, const tmatrix::TMatrixBlock& b)
{
    return std::max({rel(a.t_mm, b.t_mm), rel(a.t_nn, b.t_nn), rel(a.t_mn, b.t_mn), rel(a.t_nm, b.t_nm)});
}

struct Tuple {
    cplx eps_r, eps_z;
    double radius;
    tmatrix::ModeIndex mode;
};

Tuple draw_tuple(Uniform& u)
{
    Tuple t;
    t.eps_r = cplx(u.between(-10.0, 10.0), u.between(0.01, 10.0));
    t.eps_z = cplx(u.between(-10.0, 10.0), u.between(0.01, 10.0));
    const double kR = u.log_between(0.01, 20.0);
    const double kz_ratio = u.between(-0.99, 0.99);
    const int n = int(u.between(-10.0, 11.0));
    const double omega = 1e15;
    const double k = omega / constants::c;
    t.radius = kR / k;
    t.mode = {std::clamp(n, -10, 10), kz_ratio * k, omega};
    return t;
}

CheckResult finish(std::string name, double residual, double tol, int samples)
{
    return {std::move(name), std::isfinite(residual) && residual <= tol, residual, tol, samples};
}

}  // namespace

CheckResult oracle_equivalence(const SelfcheckOptions& options)
{
    Uniform u(options.seed);
    double worst = 0.0;
    for (int i = 0; i < options.samples; ++i) {
        const Tuple t = draw_tuple(u);
        const auto closed = tmatrix::t_block_uniaxial(t.eps_r + options.eps_offset, t.eps_z + options.eps_offset, 1.0,
                                                      t.radius, t.mode);
        const auto direct = tmatrix::t_block_oracle(t.eps_r, t.eps_z, 1.0, t.radius, t.mode);
        worst = std::max(worst, block_error(closed, direct));
    }
    return finish("oracle-equivalence", worst, 1e-8, options.samples);
}

CheckResult isotropic_reduction(const SelfcheckOptions& options)
{
    Uniform u(options.seed + 1);
    double worst = 0.0;
    for (int i = 0; i < options.samples; ++i) {
        const Tuple t = draw_tuple(u);
        const auto a = tmatrix::t_block_uniaxial(t.eps_r, t.eps_r, 1.0, t.radius, t.mode);
        const auto b = tmatrix::t_block_isotropic(t.eps_r, 1.0, t.radius, t.mode);
        worst = std::max(worst, block_error(a, b));
    }
    return finish("isotropic-reduction", worst, 1e-10, options.samples);
}

CheckResult wronskian_sample(const SelfcheckOptions& options)
{
    Uniform u(options.seed + 2);
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < options.samples * 10; ++i) {
        const int n = int(std::floor(u.between(-50.0, 51.0)));
        const double mag = u.log_between(1e-3, 1e3);
        const double arg = u.between(-0.999, 0.999) * constants::pi;
        try {
            const auto e = specfun::bessel_pair(std::clamp(n, -50, 50), std::polar(mag, arg));
            worst = std::max(worst, e.wronskian_residual);
            ++used;
        } catch (const OverflowRisk&) {
        }
    }
    return finish("wronskian", worst, 1e-9, used);
}

CheckResult dual_formula(const SelfcheckOptions&)
{
    struct Case {
        cplx eps_r, eps_z;
        double kR;
    };
    const Case cases[] = {
        {{6.5, 0.3}, {6.5, 0.3}, 0.3},     {{-20.0, 2.0}, {-20.0, 2.0}, 2.0},   {{3.0, 0.05}, {-4.0, 1.5}, 5.0},
        {{-300.0, 80.0}, {-300.0, 80.0}, 20.0}, {{2.0, 1e-3}, {2.0, 1e-3}, 0.01}, {{11.0, 4.0}, {1.5, 0.2}, 40.0},
    };
    const double omega = constants::ev_to_rad_per_s(0.1);
    const double k = omega / constants::c;
    RadiationOptions opt;
    opt.workers = 1;
    double worst = 0.0;
    int used = 0;
    for (const auto& c : cases) {
        const auto d = mode_density(c.eps_r, c.eps_z, 1.0, c.kR / k, omega, 300.0, 0.0, opt);
        worst = std::max(worst, d.dual_discrepancy);
        ++used;
    }
    return finish("dual-formula", worst, 1e-10, used);
}

std::vector<CheckResult> run_all(const SelfcheckOptions& options)
{
    std::vector<CheckResult> out;
    const auto guarded = [&](const char* name, CheckResult (*fn)(const SelfcheckOptions&), double tol) {
        try {
            out.push_back(fn(options));
        } catch (const std::exception&) {
            out.push_back({name, false, std::nan(""), tol, 0});
        }
    };
    guarded("oracle-equivalence", oracle_equivalence, 1e-8);
    guarded("wronskian", wronskian_sample, 1e-9);
    guarded("dual-formula", dual_formula, 1e-10);
    guarded("isotropic-reduction", isotropic_reduction, 1e-10);
    return out;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results)
{
    char line[256];
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%s %s residual=%.3e tolerance=%.1e samples=%d\n", r.passed ? "PASS" : "FAIL",
                      r.name.c_str(), r.residual, r.tolerance, r.samples);
        out << line;
    }
}

}  // namespace cylrad::selfcheck
