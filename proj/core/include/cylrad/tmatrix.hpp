#pragma once

#include <array>
#include <complex>
#include <vector>

namespace cylrad::tmatrix {

using cplx = std::complex<double>;

struct ModeIndex {
    int n = 0;
    double k_z = 0.0;    // rad/m
    double omega = 0.0;  // rad/s
};

struct WaveVectors {
    cplx q;
    cplx q_m;
    cplx q_n;
};

struct TMatrixBlock {
    cplx t_mm;
    cplx t_nn;
    cplx t_mn;
    cplx t_nm;
    ModeIndex mode;
    double radius = 0.0;
};

WaveVectors wave_vectors(cplx eps_r, cplx eps_z, cplx mu, const ModeIndex& mode);

TMatrixBlock t_block_uniaxial(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode);

// Isotropic cylinder, single interior wavenumber.
TMatrixBlock t_block_isotropic(cplx eps, cplx mu, double radius, const ModeIndex& mode);

// Direct solve of the 4x4 boundary-value system (columns rescaled by the
// regular/outgoing radial functions). Throws SingularMatrix above 1e14.
struct OracleSolution {
    TMatrixBlock block;
    // Interior amplitudes times J_n(q_{M,N} R) / H_n(qR), for the two incident polarizations.
    std::array<cplx, 2> interior_m;
    std::array<cplx, 2> interior_n;
    double condition = 0.0;
};
OracleSolution t_block_oracle_solve(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode);
TMatrixBlock t_block_oracle(cplx eps_r, cplx eps_z, cplx mu, double radius, const ModeIndex& mode);

// Leading O((omega R/c)^2) elements for |n| <= 1; zero block otherwise.
TMatrixBlock t_smallR(cplx eps, cplx mu, const ModeIndex& mode, double radius);

// Leading n = 0 N-polarized element for delta << R << c/omega.
cplx t_conductor_limit(cplx eps, const ModeIndex& mode, double radius);

// Blocks for orders 0..n_max at fixed k R and axial direction
// (kz_ratio = k_z/k, q_ratio = q/k, passed separately so q stays exact
// near grazing incidence). t_nm equals t_mn for n >= 0.
struct OrderBlocks {
    std::vector<cplx> t_mm;
    std::vector<cplx> t_nn;
    std::vector<cplx> t_mn;
};
OrderBlocks t_blocks_by_order(cplx eps_r, cplx eps_z, cplx mu, double kR, double kz_ratio, cplx q_ratio,
                              int n_max);

}  // namespace cylrad::tmatrix
