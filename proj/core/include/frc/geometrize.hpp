#pragma once

#include <string>

#include "frc/distances.hpp"
#include "frc/types.hpp"

namespace frc {

/// Per-observation local-FRC curves over the cutoff grid: entry (i, j) is the
/// local d-FRC of observation i restricted to the Vietoris-Rips complex at
/// cutoff j. Values are kept as exact integer numerators over a shared
/// per-column denominator, so column sums reproduce the global curvature
/// without rounding.
class GeometrizedTable {
public:
    GeometrizedTable(std::vector<std::string> labels, std::vector<double> cutoffs, int dim,
                     std::vector<std::int64_t> numerators, std::vector<std::int64_t> denominators,
                     std::vector<std::int64_t> global_sums)
        : labels_(std::move(labels)),
          cutoffs_(std::move(cutoffs)),
          dim_(dim),
          num_(std::move(numerators)),
          den_(std::move(denominators)),
          global_(std::move(global_sums)) {}

    std::size_t observations() const { return labels_.size(); }
    std::size_t grid_size() const { return cutoffs_.size(); }
    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& cutoffs() const { return cutoffs_; }

    /// Exact local FRC of observation i at grid column j.
    Rational value(std::size_t i, std::size_t j) const {
        if (den_[j] == 0) return Rational::zero();
        return Rational(num_[i * cutoffs_.size() + j], den_[j]);
    }

    /// Exact global FRC at grid column j (what the column should sum to).
    Rational column_total(std::size_t j) const {
        if (den_[j] == 0) return Rational::zero();
        // den = (d+1) c_d, global average = S_d / c_d = (d+1) S_d / den.
        return Rational((dim_ + 1) * global_[j], den_[j]);
    }

    std::int64_t numerator(std::size_t i, std::size_t j) const { return num_[i * cutoffs_.size() + j]; }
    std::int64_t denominator(std::size_t j) const { return den_[j]; }
    std::int64_t global_sum(std::size_t j) const { return global_[j]; }

private:
    std::vector<std::string> labels_;
    std::vector<double> cutoffs_;
    int dim_;
    std::vector<std::int64_t> num_;     // observations x grid, row-major
    std::vector<std::int64_t> den_;     // per grid column: (d+1) * c_d
    std::vector<std::int64_t> global_;  // per grid column: S_d
};

struct GeometrizeOptions {
    Metric metric = Metric::Euclidean;
    /// Carried through to the output unchanged; defaults to row indices.
    std::vector<std::string> labels;
};

/// Run the full pipeline (distances, filtration, incremental curvature) and
/// reshape the node series into the observations x cutoffs table.
GeometrizedTable geometrize(const PointCloud& cloud, int d, int precision, double max_dist,
                            const GeometrizeOptions& options = {});
GeometrizedTable geometrize(const DistanceMatrix& dist, int d, int precision, double max_dist,
                            const GeometrizeOptions& options = {});

/// CSV form: header `observation,eps_<e1>,...,eps_<ek>[,label]`, cutoffs
/// formatted with `precision` decimals, cell values in shortest round-trip
/// form. When group labels were supplied they are appended as a final column.
void write_geometrized_csv(const std::string& path, const GeometrizedTable& table, int precision,
                           const std::vector<std::string>& group_labels = {});

}  // namespace frc
