#pragma once

#include "frc/rng.hpp"
#include "frc/types.hpp"

namespace frc {

struct PerturbParams {
    std::int64_t iterations = 0;
    double temp = 1.0;
    double scale = 0.5;
    std::uint64_t seed = 0;
    bool population_std = false;  // default is the sample (n-1) convention
};

struct PerturbRun {
    PointCloud dataset;
    std::int64_t iterations = 0;
    std::int64_t effective_iterations = 0;
    double temp = 1.0;
    double scale = 0.5;
    std::uint64_t seed = 0;
};

/// Sum of Euclidean norms of all points.
double fit(const PointCloud& ds);

/// True when per-coordinate means, standard deviations and all Pearson
/// correlation entries of the two clouds agree after half-away-from-zero
/// rounding to three decimals.
bool is_error_ok(const PointCloud& test, const PointCloud& initial, bool population_std = false);

/// One candidate move: repeatedly displace a uniformly chosen point by a
/// per-coordinate normal of the given scale until the candidate either
/// improves the fit or wins the temperature draw. Statistics are not checked
/// here.
PointCloud perturb_step(const PointCloud& ds, double temp, double scale, Rng& rng);

/// The full randomizer: `iterations` candidate moves, each kept only when the
/// rounded statistics still match the original dataset. The comparison
/// baseline is always the original, so drift stays bounded for the whole run.
PerturbRun run_perturbation(const PointCloud& ds, const PerturbParams& params);

}  // namespace frc
