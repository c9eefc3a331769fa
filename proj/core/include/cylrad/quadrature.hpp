#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cylrad::quad {

// Gauss-Legendre rule on [-1, 1]; cached per order, safe to call concurrently.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const Rule& gauss_legendre(int n);

// Deterministic summation: fixed binary split, independent of thread count.
double pairwise_sum(std::span<const double> values);

// Unevaluated sum hi + lo, enough to carry |S|^2 - 1 for |T| down to 1e-30.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
    double value() const { return hi + lo; }
};
DoubleDouble two_sum(double a, double b);
DoubleDouble two_prod(double a, double b);
DoubleDouble operator+(DoubleDouble a, DoubleDouble b);
DoubleDouble operator-(DoubleDouble a, DoubleDouble b);
DoubleDouble operator*(DoubleDouble a, DoubleDouble b);

// CYLRAD_WORKERS if set and positive, else hardware concurrency (at least 1).
int default_workers();

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
// thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers);

// Adaptive integration of a vector-valued function over [a, b]. The interval
// is split into `base_intervals` equal panels (a multiple of 4); every group
// of four panels carries a Simpson estimate and a Romberg (Boole) correction,
// and groups whose correction exceeds their share of the tolerance are
// bisected. Error control uses the sum of all components.
struct BlockOptions {
    int base_intervals = 200;
    double rel_tol = 1e-6;
    int max_depth = 18;
    int max_evaluations = 20000;  // refinement stops unconverged beyond this
};
struct BlockResult {
    std::vector<double> integral;
    double achieved = 0.0;  // estimated relative error of the summed components
    int evaluations = 0;
    int depth = 0;
    bool converged = true;
};
// evaluate(abscissae, values) fills values[i] (size = components) for each abscissa.
using BatchFunction = std::function<void(std::span<const double>, std::vector<std::vector<double>>&)>;
BlockResult integrate_blocks(double a, double b, int components, const BatchFunction& evaluate,
                             const BlockOptions& options = {});

// Adaptive Gauss-Kronrod (15-point) on [a, b].
double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   double* error_estimate = nullptr, unsigned max_depth = 20);

}  // namespace cylrad::quad
