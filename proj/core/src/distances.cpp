#include "frc/distances.hpp"

#include <cmath>

namespace frc {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Euclidean: return "euclidean";
    }
    return "unknown";
}

Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return Metric::Euclidean;
    throw InputError("unsupported metric '" + name + "' (built-in: euclidean)");
}

static double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric) {
    switch (metric) {
        case Metric::Euclidean:
            return pairwise_distances(cloud, MetricFn(&euclidean));
    }
    throw InputError("unsupported metric");
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, const MetricFn& fn) {
    const std::int64_t m = cloud.rows();
    const std::int64_t n = cloud.cols();
    DistanceMatrix dist(m);
    for (std::int64_t i = 0; i < m; ++i) {
        const std::span<const double> ri(cloud.row(i), static_cast<std::size_t>(n));
        for (std::int64_t j = i + 1; j < m; ++j) {
            const std::span<const double> rj(cloud.row(j), static_cast<std::size_t>(n));
            const double d = fn(ri, rj);
            if (!std::isfinite(d) || d < 0.0)
                throw InputError("metric produced a negative or non-finite distance");
            dist.at(i, j) = d;
            dist.at(j, i) = d;
        }
    }
    return dist;
}

double diameter(std::span<const NodeId> nodes, const DistanceMatrix& dist) {
    if (nodes.empty()) throw InputError("diameter of an empty node set is undefined");
    double w = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        if (nodes[a] >= static_cast<NodeId>(dist.size()))
            throw InputError("node id out of range for distance matrix");
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            w = std::max(w, dist.at(nodes[a], nodes[b]));
    }
    return w;
}

}  // namespace frc
