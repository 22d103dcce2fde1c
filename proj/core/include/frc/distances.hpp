#pragma once

#include <functional>
#include <span>

#include "frc/types.hpp"

namespace frc {

/// Built-in metrics. Euclidean is the default and the only one exercised by
/// the shipped pipelines; the callable overload of pairwise_distances is the
/// extension hook for anything else.
enum class Metric {
    Euclidean,
};

const char* metric_name(Metric m);
Metric parse_metric(const std::string& name);

/// Distance between two coordinate rows of equal length.
using MetricFn = std::function<double(std::span<const double>, std::span<const double>)>;

/// Symmetric pairwise distance matrix of a point cloud under a built-in metric.
DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric = Metric::Euclidean);

/// Extension hook: any symmetric, non-negative distance function.
DistanceMatrix pairwise_distances(const PointCloud& cloud, const MetricFn& fn);

/// Max pairwise distance within a node set; 0 for a singleton.
double diameter(std::span<const NodeId> nodes, const DistanceMatrix& dist);

}  // namespace frc
