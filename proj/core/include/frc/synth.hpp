#pragma once

#include "frc/types.hpp"

namespace frc {

/// Parameters of a random geometric point cloud: n points uniform in the unit
/// hypercube of the given dimension. target_density is realized per instance
/// through radius_for_density.
struct RggSpec {
    std::int64_t n = 2;
    std::int64_t dim = 1;
    double target_density = 0.5;
    std::uint64_t seed = 0;
};

PointCloud gen_rgg_points(const RggSpec& spec);

/// Smallest pairwise distance r such that the fraction of pairs within r is
/// at least rho: the ceil(rho * binom(m,2))-th smallest off-diagonal distance.
/// Using r as the edge cutoff yields edge density >= rho, minimally so.
double radius_for_density(const DistanceMatrix& dist, double rho);

}  // namespace frc
