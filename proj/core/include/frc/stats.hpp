#pragma once

#include "frc/types.hpp"

namespace frc {

/// Per-column summary statistics of a point cloud.
struct ColumnStats {
    std::vector<double> mean;
    std::vector<double> stddev;       // sample (n-1) or population (n)
    std::vector<double> correlation;  // full Pearson matrix, row-major n x n
};

ColumnStats column_stats(const PointCloud& cloud, bool population_std = false);

/// Half-away-from-zero rounding to three decimal places.
double round3(double v);

/// Z-score each column in place (sample standard deviation); columns with
/// zero spread are left centered.
void normalize_columns(PointCloud& cloud);

}  // namespace frc
