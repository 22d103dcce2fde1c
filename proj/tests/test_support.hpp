#pragma once

#include <algorithm>
#include <vector>

#include "frc/rng.hpp"
#include "frc/types.hpp"

namespace frc::test {

/// Random point cloud, uniform in [0,1)^dim.
inline PointCloud random_cloud(std::int64_t n, std::int64_t dim, std::uint64_t seed) {
    Rng rng(seed);
    PointCloud cloud(n, dim);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < dim; ++j) cloud.at(i, j) = rng.uniform();
    return cloud;
}

/// Erdos-Renyi weighted graph as a distance matrix: present edges get random
/// distinct weights in (0, 1), absent pairs sit above any usable cutoff.
inline DistanceMatrix random_er_matrix(std::int64_t n, double p, std::uint64_t seed,
                                       double absent = 8.0) {
    Rng rng(seed);
    DistanceMatrix dist(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            const bool edge = rng.uniform() < p;
            const double w = edge ? 0.05 + 0.9 * rng.uniform() : absent;
            dist.at(i, j) = w;
            dist.at(j, i) = w;
        }
    return dist;
}

/// Distance matrix from an explicit upper triangle, row by row.
inline DistanceMatrix matrix_from_upper(std::int64_t n, const std::vector<double>& upper) {
    DistanceMatrix dist(n);
    std::size_t k = 0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j) {
            dist.at(i, j) = upper[k];
            dist.at(j, i) = upper[k];
            ++k;
        }
    return dist;
}

/// Three mutually equidistant points.
inline DistanceMatrix equilateral(double side = 1.0) { return matrix_from_upper(3, {side, side, side}); }

/// Complete graph on n nodes with all pairwise distances equal.
inline DistanceMatrix complete_matrix(std::int64_t n, double side = 1.0) {
    std::vector<double> upper(static_cast<std::size_t>(n * (n - 1) / 2), side);
    return matrix_from_upper(n, upper);
}

}  // namespace frc::test
