#pragma once

#include <complex>
#include <vector>

namespace cylrad::specfun {

using cplx = std::complex<double>;

struct BesselEval {
    int order = 0;
    cplx argument;
    cplx value_j;
    cplx value_jprime;
    cplx value_h1;
    cplx value_h1prime;
    // |J H' - J' H - 2i/(pi z)| / |2i/(pi z)|
    double wronskian_residual = 0.0;
};

// Integer-order Bessel function of the first kind. Throws OverflowRisk when
// |J_n(z)| would not fit in a double.
cplx bessel_j(int n, cplx z);

// Hankel function of the first kind. Throws DomainError at z = 0.
cplx hankel1(int n, cplx z);

// Y_n = (H1_n - J_n) / i
cplx bessel_y(int n, cplx z);

// J'_n(z)/J_n(z). Throws PoleError within 1e-13 of a zero of J_n.
cplx log_derivative_j(int n, cplx z);

// H1'_n(z)/H1_n(z)
cplx log_derivative_h1(int n, cplx z);

BesselEval bessel_pair(int n, cplx z);

// J'_k(z)/J_k(z) for k = 0..n_max, never forming J_k itself.
std::vector<cplx> log_derivative_j_orders(int n_max, cplx z);

// J_{k+1}(z) / J_k(z) for k = 0..n_max.
std::vector<cplx> bessel_j_ratio_orders(int n_max, cplx z);

// Ratios of regular to outgoing solutions at one argument, orders 0..n_max.
// Entries past the point where H1_k overflows are zero (log derivative kept).
struct ExteriorRatios {
    std::vector<cplx> j_over_h;
    std::vector<cplx> jprime_over_h;
    std::vector<cplx> h_log_derivative;
    std::vector<cplx> inv_h_squared;
    std::vector<cplx> jnext_over_h;  // J_{k+1} / H_k
    std::vector<cplx> prev_over_h;   // H_{k-1} / H_k
};
ExteriorRatios exterior_ratios(int n_max, cplx z);

}  // namespace cylrad::specfun
