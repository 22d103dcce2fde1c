#include "frc/synth.hpp"

#include <algorithm>
#include <cmath>

#include "frc/rng.hpp"

namespace frc {

PointCloud gen_rgg_points(const RggSpec& spec) {
    if (spec.n < 2) throw InputError("an RGG needs at least two nodes");
    if (spec.dim < 1) throw InputError("box dimension must be >= 1");
    if (!(spec.target_density > 0.0) || !(spec.target_density < 1.0))
        throw InputError("target density must lie strictly between 0 and 1");
    Rng rng(spec.seed);
    PointCloud cloud(spec.n, spec.dim);
    for (std::int64_t i = 0; i < spec.n; ++i)
        for (std::int64_t j = 0; j < spec.dim; ++j) cloud.at(i, j) = rng.uniform();
    return cloud;
}

double radius_for_density(const DistanceMatrix& dist, double rho) {
    if (!(rho > 0.0) || !(rho < 1.0)) throw InputError("rho must lie strictly between 0 and 1");
    const std::int64_t m = dist.size();
    if (m < 2) throw InputError("need at least two points");
    std::vector<double> pairs;
    pairs.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = i + 1; j < m; ++j) pairs.push_back(dist.at(i, j));
    const auto total = static_cast<double>(pairs.size());
    auto k = static_cast<std::int64_t>(std::ceil(rho * total - 1e-12));
    k = std::clamp<std::int64_t>(k, 1, static_cast<std::int64_t>(pairs.size()));
    std::nth_element(pairs.begin(), pairs.begin() + (k - 1), pairs.end());
    return pairs[static_cast<std::size_t>(k - 1)];
}

}  // namespace frc
