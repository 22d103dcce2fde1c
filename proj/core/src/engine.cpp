#include "frc/engine.hpp"

#include <cmath>

namespace frc {

namespace {

std::int64_t frc_from_sets(const std::vector<const NodeSet*>& sets, std::vector<NodeId>& intersection,
                           int d) {
    std::int64_t n = 0;
    const NodeSet* smallest = sets[0];
    for (const NodeSet* s : sets) {
        n += static_cast<std::int64_t>(s->size());
        if (s->size() < smallest->size()) smallest = s;
    }
    intersection.clear();
    for (NodeId x : *smallest) {
        bool in_all = true;
        for (const NodeSet* s : sets) {
            if (s == smallest) continue;
            if (!s->contains(x)) {
                in_all = false;
                break;
            }
        }
        if (in_all) intersection.push_back(x);
    }
    return static_cast<std::int64_t>(d + 2) * static_cast<std::int64_t>(intersection.size()) +
           2 * (d + 1) - n;
}

}  // namespace

std::int64_t face_frc(const NeighbourhoodIndex& index, const Simplex& alpha) {
    const int d = alpha.dim();
    if (d < 1) throw InputError("curvature is defined for faces of dimension >= 1");

    const auto& nodes = alpha.nodes;
    std::vector<const NodeSet*> sets;
    std::vector<NodeId> key;
    sets.reserve(nodes.size());
    key.reserve(nodes.size() - 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        key.clear();
        for (std::size_t j = 0; j < nodes.size(); ++j)
            if (j != i) key.push_back(nodes[j]);
        const NodeSet* s = index.find(key);
        if (s == nullptr || !s->contains(nodes[i]))
            throw InvariantError("neighbourhood index is missing the face's own boundary entry");
        sets.push_back(s);
    }
    std::vector<NodeId> intersection;
    return frc_from_sets(sets, intersection, d);
}

void CurvatureEngine::insert_face(const Simplex& alpha, InsertTrace* trace) {
    const int d = alpha.dim();
    if (d < 1 || d > state_.d_max())
        throw InputError("face dimension must be within 1..d_max");

    const auto& nodes = alpha.nodes;
    const std::size_t k = nodes.size();

    state_.count_face(d);

    // Record the new face in every boundary neighbourhood first; the formula
    // below expects the face's own contribution to be present.
    boundary_sets_.clear();
    for (std::size_t i = 0; i < k; ++i) {
        key_buf_.clear();
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) key_buf_.push_back(nodes[j]);
        NodeSet& s = index_.touch(key_buf_);
        s.insert(nodes[i]);
        boundary_sets_.push_back(&s);
    }

    const std::int64_t frc = frc_from_sets(boundary_sets_, intersection_, d);
    state_.add_global(d, frc);
    for (NodeId x : nodes) state_.add_node(d, x, frc);
    if (trace) {
        trace->face_frc = frc;
        trace->neighbour_deltas.clear();
    }

    // Delta rule over pre-existing neighbours. Each node x in pi(gamma)
    // besides the face's own stands for the neighbour gamma + {x}; it is
    // transverse exactly when x lies in the intersection of all boundary
    // neighbourhoods, i.e. when the common (d+1)-face is boundary-complete.
    for (std::size_t i = 0; i < k; ++i) {
        const NodeSet& s = *boundary_sets_[i];
        for (NodeId x : s) {
            if (x == nodes[i]) continue;
            const bool transverse =
                std::binary_search(intersection_.begin(), intersection_.end(), x);
            const int dlt = delta(transverse, d);
            state_.add_global(d, dlt);
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) state_.add_node(d, nodes[j], dlt);
            state_.add_node(d, x, dlt);
            if (trace) {
                FaceKey neighbour;
                neighbour.reserve(k);
                for (std::size_t j = 0; j < k; ++j)
                    if (j != i) neighbour.push_back(nodes[j]);
                neighbour.insert(std::upper_bound(neighbour.begin(), neighbour.end(), x), x);
                trace->neighbour_deltas.emplace_back(std::move(neighbour), dlt);
            }
        }
    }
}

CurvatureSnapshot CurvatureEngine::snapshot(double cutoff) const {
    CurvatureSnapshot snap;
    snap.cutoff = cutoff;
    snap.node_count = state_.node_count();
    snap.d_max = state_.d_max();
    const std::size_t dims = static_cast<std::size_t>(state_.d_max()) + 1;
    snap.face_count.assign(dims, 0);
    snap.global_sum.assign(dims, 0);
    snap.node_sum.assign(dims, {});
    for (int d = 1; d <= state_.d_max(); ++d) {
        snap.face_count[static_cast<std::size_t>(d)] = state_.face_count(d);
        snap.global_sum[static_cast<std::size_t>(d)] = state_.global_sum(d);
        snap.node_sum[static_cast<std::size_t>(d)] = state_.node_sums(d);
    }
    return snap;
}

CurvatureSeries run_filtration(const Filtration& filt, int d_max, int precision, double max_dist,
                               const RunOptions& options) {
    if (d_max < 1) throw InputError("d_max must be >= 1");
    if (precision < 0) throw InputError("precision must be >= 0");
    if (!std::isfinite(max_dist) || max_dist < 0.0)
        throw InputError("max_dist must be non-negative and finite");
    if (filt.node_count < 1) throw InputError("filtration carries no nodes");

    const double pow10 = std::pow(10.0, precision);
    const auto last_idx = static_cast<std::int64_t>(std::floor(max_dist * pow10 + 1e-9));
    if (last_idx >= 50'000'000)
        throw InputError("cutoff grid would exceed 5e7 points; reduce precision or max_dist");

    CurvatureSeries series;
    series.precision = precision;
    series.max_dist = max_dist;
    series.cutoffs.resize(static_cast<std::size_t>(last_idx) + 1);
    for (std::size_t j = 0; j < series.cutoffs.size(); ++j)
        series.cutoffs[j] = static_cast<double>(j) / pow10;
    if (options.store_grid) series.grid.resize(series.cutoffs.size());

    CurvatureEngine engine(filt.node_count, d_max);
    auto last_snap = std::make_shared<const CurvatureSnapshot>(engine.snapshot(0.0));

    std::size_t next_grid = 0;
    const auto bind_below = [&](double w) {
        while (next_grid < series.cutoffs.size() && series.cutoffs[next_grid] < w) {
            if (options.store_grid) series.grid[next_grid] = last_snap;
            if (options.on_grid) options.on_grid(next_grid, series.cutoffs[next_grid], *last_snap);
            ++next_grid;
        }
    };
    const auto emit = [&](double w) {
        auto snap = std::make_shared<const CurvatureSnapshot>(engine.snapshot(w));
        if (options.record_events) series.events.push_back(snap);
        bind_below(w);
        last_snap = std::move(snap);
    };

    const Simplex* prev = nullptr;
    for (const Simplex& face : filt.faces) {
        if (prev != nullptr && !face_less(*prev, face))
            throw InputError("filtration is not sorted by (weight, dimension, node order)");
        if (face.weight > max_dist) break;
        if (prev != nullptr && face.weight > prev->weight) emit(prev->weight);
        const int dim = face.dim();
        if (dim >= 1 && dim <= d_max) engine.insert_face(face);
        prev = &face;
    }
    if (prev != nullptr) emit(prev->weight);

    // Carry the final state across the rest of the grid.
    while (next_grid < series.cutoffs.size()) {
        if (options.store_grid) series.grid[next_grid] = last_snap;
        if (options.on_grid) options.on_grid(next_grid, series.cutoffs[next_grid], *last_snap);
        ++next_grid;
    }
    return series;
}

}  // namespace frc
