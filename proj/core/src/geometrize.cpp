#include "frc/geometrize.hpp"

#include <cstdio>
#include <fstream>

#include "frc/csv.hpp"
#include "frc/engine.hpp"
#include "frc/filtration.hpp"

namespace frc {

GeometrizedTable geometrize(const PointCloud& cloud, int d, int precision, double max_dist,
                            const GeometrizeOptions& options) {
    return geometrize(pairwise_distances(cloud, options.metric), d, precision, max_dist, options);
}

GeometrizedTable geometrize(const DistanceMatrix& dist, int d, int precision, double max_dist,
                            const GeometrizeOptions& options) {
    if (d < 1) throw InputError("geometrization dimension must be >= 1");
    const std::int64_t m = dist.size();

    std::vector<std::string> labels = options.labels;
    if (labels.empty()) {
        labels.reserve(static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i) labels.push_back(std::to_string(i));
    }
    if (static_cast<std::int64_t>(labels.size()) != m)
        throw InputError("label count does not match observation count");

    const Filtration filt = enumerate_vr_filtration(dist, d, max_dist);

    RunOptions run_opts;
    run_opts.record_events = false;
    CurvatureSeries series = run_filtration(filt, d, precision, max_dist, run_opts);

    const std::size_t k = series.size();
    std::vector<std::int64_t> num(static_cast<std::size_t>(m) * k, 0);
    std::vector<std::int64_t> den(k, 0);
    std::vector<std::int64_t> global(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const CurvatureSnapshot& snap = series.at(j);
        const std::int64_t c = snap.face_count[static_cast<std::size_t>(d)];
        den[j] = (d + 1) * c;
        global[j] = snap.global_sum[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const auto& sums = snap.node_sum[static_cast<std::size_t>(d)];
        for (std::int64_t i = 0; i < m; ++i) num[static_cast<std::size_t>(i) * k + j] = sums[static_cast<std::size_t>(i)];
    }
    return GeometrizedTable(std::move(labels), series.cutoffs, d, std::move(num), std::move(den),
                            std::move(global));
}

void write_geometrized_csv(const std::string& path, const GeometrizedTable& table, int precision,
                           const std::vector<std::string>& group_labels) {
    if (!group_labels.empty() && group_labels.size() != table.observations())
        throw InputError("group label count does not match observation count");
    std::ofstream out(path);
    if (!out) throw InputError(path + ": cannot open file for writing");

    out << "observation";
    char buf[64];
    for (double eps : table.cutoffs()) {
        std::snprintf(buf, sizeof(buf), ",eps_%.*f", precision, eps);
        out << buf;
    }
    if (!group_labels.empty()) out << ",label";
    out << '\n';

    for (std::size_t i = 0; i < table.observations(); ++i) {
        out << table.labels()[i];
        for (std::size_t j = 0; j < table.grid_size(); ++j)
            out << ',' << format_double(table.value(i, j).to_double());
        if (!group_labels.empty()) out << ',' << group_labels[i];
        out << '\n';
    }
}

}  // namespace frc
