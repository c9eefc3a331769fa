#include <benchmark/benchmark.h>

#include "cylrad/constants.hpp"
#include "cylrad/materials.hpp"
#include "cylrad/plate.hpp"
#include "cylrad/radiation.hpp"
#include "cylrad/specfun.hpp"
#include "cylrad/tmatrix.hpp"

using namespace cylrad;

namespace {

const double kOmega = constants::ev_to_rad_per_s(0.1);
const double kK = kOmega / constants::c;

void BM_BesselJ(benchmark::State& state)
{
    const cplx z(double(state.range(0)), 0.3 * double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_j(7, z));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(10)->Arg(100);

void BM_Hankel(benchmark::State& state)
{
    const cplx z(double(state.range(0)), 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(specfun::hankel1(7, z));
}
BENCHMARK(BM_Hankel)->Arg(1)->Arg(10)->Arg(100);

void BM_ExteriorRatios(benchmark::State& state)
{
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(specfun::exterior_ratios(n, cplx(0.8 * n, 0.0)));
}
BENCHMARK(BM_ExteriorRatios)->Arg(16)->Arg(128)->Arg(1024);

void BM_LogDerivativeConductor(benchmark::State& state)
{
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(specfun::log_derivative_j_orders(n, cplx(300.0, 2500.0)));
}
BENCHMARK(BM_LogDerivativeConductor)->Arg(16)->Arg(256);

void BM_BlockClosedForm(benchmark::State& state)
{
    const tmatrix::ModeIndex m{3, 0.4 * kK, kOmega};
    for (auto _ : state) benchmark::DoNotOptimize(tmatrix::t_block_uniaxial(cplx(-20, 3), cplx(5, 1), 1.0, 4.0 / kK, m));
}
BENCHMARK(BM_BlockClosedForm);

void BM_BlockOracle(benchmark::State& state)
{
    const tmatrix::ModeIndex m{3, 0.4 * kK, kOmega};
    for (auto _ : state) benchmark::DoNotOptimize(tmatrix::t_block_oracle(cplx(-20, 3), cplx(5, 1), 1.0, 4.0 / kK, m));
}
BENCHMARK(BM_BlockOracle);

void BM_BlocksByOrder(benchmark::State& state)
{
    const double kR = double(state.range(0));
    const int n_max = int(kR) + 8;
    for (auto _ : state)
        benchmark::DoNotOptimize(tmatrix::t_blocks_by_order(cplx(-80, 2), cplx(-80, 2), 1.0, kR, 0.3, 0.9539392, n_max));
}
BENCHMARK(BM_BlocksByOrder)->Arg(1)->Arg(10)->Arg(100);

void BM_ModeDensity(benchmark::State& state)
{
    RadiationOptions opt;
    opt.workers = 1;
    const double R = double(state.range(0)) / kK;
    for (auto _ : state) benchmark::DoNotOptimize(mode_density(cplx(-80, 2), cplx(-80, 2), 1.0, R, kOmega, 300, 0, opt));
}
BENCHMARK(BM_ModeDensity)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PlateAngularUniaxial(benchmark::State& state)
{
    plate::PlateOptions opt;
    for (auto _ : state)
        benchmark::DoNotOptimize(plate::plate_angular(cplx(-30, 5), cplx(4, 0.3), 1.0, true, kOmega, opt));
}
BENCHMARK(BM_PlateAngularUniaxial)->Unit(benchmark::kMillisecond);

void BM_Permittivity(benchmark::State& state)
{
    const MaterialSpec m = builtin_material("graphite-uniaxial");
    for (auto _ : state) benchmark::DoNotOptimize(permittivity(m, 2.5));
}
BENCHMARK(BM_Permittivity);

void BM_TotalRadiationSmall(benchmark::State& state)
{
    RadiationOptions opt;
    opt.workers = 1;
    const MaterialSpec m = builtin_material("gold-drude");
    for (auto _ : state) benchmark::DoNotOptimize(total_radiation(m, 1e-7, 300.0, 0.0, opt));
}
BENCHMARK(BM_TotalRadiationSmall)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
