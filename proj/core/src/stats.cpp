#include "frc/stats.hpp"

#include <cmath>

namespace frc {

ColumnStats column_stats(const PointCloud& cloud, bool population_std) {
    const std::int64_t m = cloud.rows();
    const std::int64_t n = cloud.cols();
    ColumnStats s;
    s.mean.assign(static_cast<std::size_t>(n), 0.0);
    s.stddev.assign(static_cast<std::size_t>(n), 0.0);
    s.correlation.assign(static_cast<std::size_t>(n * n), 0.0);

    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < n; ++j) s.mean[static_cast<std::size_t>(j)] += cloud.at(i, j);
    for (auto& v : s.mean) v /= static_cast<double>(m);

    // Centered second moments.
    std::vector<double> cov(static_cast<std::size_t>(n * n), 0.0);
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t a = 0; a < n; ++a) {
            const double da = cloud.at(i, a) - s.mean[static_cast<std::size_t>(a)];
            for (std::int64_t b = a; b < n; ++b) {
                const double db = cloud.at(i, b) - s.mean[static_cast<std::size_t>(b)];
                cov[static_cast<std::size_t>(a * n + b)] += da * db;
            }
        }
    const double denom = population_std ? static_cast<double>(m) : static_cast<double>(m - 1);
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = a; b < n; ++b) {
            cov[static_cast<std::size_t>(a * n + b)] /= denom > 0 ? denom : 1.0;
            cov[static_cast<std::size_t>(b * n + a)] = cov[static_cast<std::size_t>(a * n + b)];
        }

    for (std::int64_t a = 0; a < n; ++a)
        s.stddev[static_cast<std::size_t>(a)] = std::sqrt(cov[static_cast<std::size_t>(a * n + a)]);

    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            const double sa = s.stddev[static_cast<std::size_t>(a)];
            const double sb = s.stddev[static_cast<std::size_t>(b)];
            double r;
            if (a == b)
                r = 1.0;
            else if (sa == 0.0 || sb == 0.0)
                r = 0.0;
            else
                r = cov[static_cast<std::size_t>(a * n + b)] / (sa * sb);
            s.correlation[static_cast<std::size_t>(a * n + b)] = r;
        }
    return s;
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

void normalize_columns(PointCloud& cloud) {
    const ColumnStats s = column_stats(cloud, false);
    for (std::int64_t i = 0; i < cloud.rows(); ++i)
        for (std::int64_t j = 0; j < cloud.cols(); ++j) {
            const double sd = s.stddev[static_cast<std::size_t>(j)];
            cloud.at(i, j) = (cloud.at(i, j) - s.mean[static_cast<std::size_t>(j)]) / (sd > 0.0 ? sd : 1.0);
        }
}

}  // namespace frc
