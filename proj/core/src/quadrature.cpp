#include "cylrad/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "cylrad/errors.hpp"

namespace cylrad::quad {

const Rule& gauss_legendre(int n)
{
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Rule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (slot) return *slot;

    auto rule = std::make_unique<Rule>();
    // Non-negative zeros, ascending; mirror for the negative half.
    const auto zeros = boost::math::legendre_p_zeros<double>(n);
    std::vector<double> pos_nodes, pos_weights;
    for (double x : zeros) {
        const double dp = boost::math::legendre_p_prime(n, x);
        pos_nodes.push_back(x);
        pos_weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    for (std::size_t i = pos_nodes.size(); i-- > 0;) {
        if (pos_nodes[i] == 0.0) continue;
        rule->nodes.push_back(-pos_nodes[i]);
        rule->weights.push_back(pos_weights[i]);
    }
    for (std::size_t i = 0; i < pos_nodes.size(); ++i) {
        rule->nodes.push_back(pos_nodes[i]);
        rule->weights.push_back(pos_weights[i]);
    }
    slot = std::move(rule);
    return *slot;
}

double pairwise_sum(std::span<const double> v)
{
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

DoubleDouble two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

DoubleDouble two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

namespace {
DoubleDouble renorm(double hi, double lo)
{
    const double s = hi + lo;
    return {s, lo - (s - hi)};
}
}  // namespace

DoubleDouble operator+(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble s = two_sum(a.hi, b.hi);
    return renorm(s.hi, s.lo + a.lo + b.lo);
}

DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + DoubleDouble{-b.hi, -b.lo}; }

DoubleDouble operator*(DoubleDouble a, DoubleDouble b)
{
    DoubleDouble p = two_prod(a.hi, b.hi);
    return renorm(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

int default_workers()
{
    if (const char* env = std::getenv("CYLRAD_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers)
{
    if (workers <= 0) workers = default_workers();
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

struct Block {
    double a = 0.0, h = 0.0;  // four panels of width h
    int depth = 0;
    std::array<std::size_t, 5> idx{};
    std::vector<double> boole;
    double err = 0.0;
    double width() const { return 4.0 * h; }
};

}  // namespace

BlockResult integrate_blocks(double a, double b, int components, const BatchFunction& evaluate,
                             const BlockOptions& options)
{
    if (!(b > a)) throw DomainError("integrate_blocks: empty interval");
    if (options.base_intervals < 4 || options.base_intervals % 4 != 0)
        throw DomainError("integrate_blocks: base interval count must be a positive multiple of 4");
    const std::size_t m = static_cast<std::size_t>(components);

    std::vector<double> abscissae;
    std::vector<std::vector<double>> values;
    auto eval_new = [&](const std::vector<double>& xs) {
        std::vector<std::vector<double>> out(xs.size(), std::vector<double>(m, 0.0));
        if (!xs.empty()) evaluate(std::span<const double>(xs), out);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            abscissae.push_back(xs[i]);
            values.push_back(std::move(out[i]));
        }
    };

    const int nb = options.base_intervals;
    const double h0 = (b - a) / nb;
    {
        std::vector<double> xs(nb + 1);
        for (int i = 0; i <= nb; ++i) xs[i] = i == nb ? b : a + i * h0;
        eval_new(xs);
    }

    auto score = [&](Block& blk) {
        blk.boole.assign(m, 0.0);
        double fine_sum = 0.0, coarse_sum = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            const double f0 = values[blk.idx[0]][c], f1 = values[blk.idx[1]][c], f2 = values[blk.idx[2]][c],
                         f3 = values[blk.idx[3]][c], f4 = values[blk.idx[4]][c];
            const double fine = blk.h / 3.0 * (f0 + 4.0 * f1 + 2.0 * f2 + 4.0 * f3 + f4);
            const double coarse = 2.0 * blk.h / 3.0 * (f0 + 4.0 * f2 + f4);
            blk.boole[c] = fine + (fine - coarse) / 15.0;
            fine_sum += fine;
            coarse_sum += coarse;
        }
        blk.err = std::abs(fine_sum - coarse_sum) / 15.0;
    };

    std::vector<Block> done;
    std::vector<Block> active;
    for (int i = 0; i < nb; i += 4) {
        Block blk;
        blk.a = a + i * h0;
        blk.h = h0;
        for (int k = 0; k < 5; ++k) blk.idx[k] = static_cast<std::size_t>(i + k);
        score(blk);
        active.push_back(std::move(blk));
    }

    BlockResult result;
    result.integral.assign(m, 0.0);
    int depth = 0;
    for (;;) {
        // Current estimate of the summed integral from every leaf block.
        std::vector<double> parts;
        parts.reserve(done.size() + active.size());
        for (const auto& blk : done)
            for (double v : blk.boole) parts.push_back(v);
        for (const auto& blk : active)
            for (double v : blk.boole) parts.push_back(v);
        const double total = std::abs(pairwise_sum(parts));

        std::vector<Block> refine;
        for (auto& blk : active) {
            const double budget = options.rel_tol * total * blk.width() / (b - a);
            if (blk.err <= budget || blk.depth >= options.max_depth) {
                if (blk.err > budget) result.converged = false;
                done.push_back(std::move(blk));
            } else {
                refine.push_back(std::move(blk));
            }
        }
        active.clear();
        if (refine.empty()) break;
        if (abscissae.size() + 4 * refine.size() > static_cast<std::size_t>(options.max_evaluations)) {
            result.converged = false;
            for (auto& blk : refine) done.push_back(std::move(blk));
            break;
        }

        ++depth;
        std::vector<double> xs;
        for (const auto& blk : refine)
            for (int k = 0; k < 4; ++k) xs.push_back(blk.a + (2 * k + 1) * 0.5 * blk.h);
        const std::size_t base = abscissae.size();
        eval_new(xs);
        for (std::size_t r = 0; r < refine.size(); ++r) {
            const Block& p = refine[r];
            const std::size_t q = base + 4 * r;
            Block left, right;
            left.a = p.a;
            right.a = p.a + 2.0 * p.h;
            left.h = right.h = 0.5 * p.h;
            left.depth = right.depth = p.depth + 1;
            left.idx = {p.idx[0], q + 0, p.idx[1], q + 1, p.idx[2]};
            right.idx = {p.idx[2], q + 2, p.idx[3], q + 3, p.idx[4]};
            score(left);
            score(right);
            active.push_back(std::move(left));
            active.push_back(std::move(right));
        }
    }

    std::sort(done.begin(), done.end(), [](const Block& x, const Block& y) { return x.a < y.a; });
    double err_sum = 0.0;
    std::vector<double> errs;
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<double> col;
        col.reserve(done.size());
        for (const auto& blk : done) col.push_back(blk.boole[c]);
        result.integral[c] = pairwise_sum(col);
    }
    for (const auto& blk : done) errs.push_back(blk.err);
    err_sum = pairwise_sum(errs);
    double total = 0.0;
    for (double v : result.integral) total += v;
    result.achieved = total != 0.0 ? err_sum / std::abs(total) : (err_sum == 0.0 ? 0.0 : err_sum);
    result.evaluations = static_cast<int>(abscissae.size());
    result.depth = depth;
    return result;
}

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   double* error_estimate, unsigned max_depth)
{
    double err = 0.0;
    const double v =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &err);
    if (error_estimate) *error_estimate = err;
    return v;
}

}  // namespace cylrad::quad
