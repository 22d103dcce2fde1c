#include "frc/perturb.hpp"

#include <cmath>

#include "frc/stats.hpp"

namespace frc {

double fit(const PointCloud& ds) {
    double total = 0.0;
    for (std::int64_t i = 0; i < ds.rows(); ++i) {
        double sq = 0.0;
        for (std::int64_t j = 0; j < ds.cols(); ++j) sq += ds.at(i, j) * ds.at(i, j);
        total += std::sqrt(sq);
    }
    return total;
}

bool is_error_ok(const PointCloud& test, const PointCloud& initial, bool population_std) {
    if (test.rows() != initial.rows() || test.cols() != initial.cols())
        throw InputError("clouds must have the same shape");
    const ColumnStats a = column_stats(test, population_std);
    const ColumnStats b = column_stats(initial, population_std);
    for (std::size_t j = 0; j < a.mean.size(); ++j) {
        if (round3(a.mean[j]) != round3(b.mean[j])) return false;
        if (round3(a.stddev[j]) != round3(b.stddev[j])) return false;
    }
    for (std::size_t k = 0; k < a.correlation.size(); ++k)
        if (round3(a.correlation[k]) != round3(b.correlation[k])) return false;
    return true;
}

PointCloud perturb_step(const PointCloud& ds, double temp, double scale, Rng& rng) {
    if (scale <= 0.0) throw InputError("scale must be positive");
    for (;;) {
        PointCloud test = ds;
        const std::int64_t idx = static_cast<std::int64_t>(rng.uniform_int(
            static_cast<std::uint64_t>(ds.rows())));
        for (std::int64_t j = 0; j < ds.cols(); ++j) test.at(idx, j) += rng.normal(scale);
        // Fit improvement short-circuits the temperature draw.
        if (fit(test) > fit(ds)) return test;
        if (temp > rng.uniform()) return test;
    }
}

PerturbRun run_perturbation(const PointCloud& ds, const PerturbParams& params) {
    if (params.iterations < 0) throw InputError("iterations must be >= 0");
    Rng rng(params.seed);
    PerturbRun run;
    run.dataset = ds;
    run.iterations = params.iterations;
    run.temp = params.temp;
    run.scale = params.scale;
    run.seed = params.seed;
    for (std::int64_t it = 0; it < params.iterations; ++it) {
        PointCloud test = perturb_step(run.dataset, params.temp, params.scale, rng);
        if (is_error_ok(test, ds, params.population_std)) {
            run.dataset = std::move(test);
            ++run.effective_iterations;
        }
    }
    return run;
}

}  // namespace frc
