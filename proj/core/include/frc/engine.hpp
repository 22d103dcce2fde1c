#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>

#include "frc/types.hpp"

namespace frc {

/// Sorted, duplicate-free set of node ids. Neighbourhood sets are small and
/// scanned far more often than they are grown, so a flat sorted vector beats
/// a hash set here.
class NodeSet {
public:
    void insert(NodeId x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }
    bool contains(NodeId x) const { return std::binary_search(v_.begin(), v_.end(), x); }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

private:
    std::vector<NodeId> v_;
};

using FaceKey = std::vector<NodeId>;

struct FaceKeyHash {
    std::size_t operator()(const FaceKey& v) const noexcept {
        std::size_t h = 1469598103934665603ull;  // FNV offset basis
        for (NodeId x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// For each inserted d-face alpha and each boundary (d-1)-face gamma of it,
/// pi(gamma) accumulates the nodes x with gamma + {x} an inserted d-face.
/// Keys of size 1 (vertices) live in a dense array, larger keys in hash maps.
/// Absent keys read as the empty set: a vertex with no incident edges has an
/// empty neighbourhood.
class NeighbourhoodIndex {
public:
    NeighbourhoodIndex(std::int64_t node_count, int d_max)
        : vertex_pi_(static_cast<std::size_t>(node_count)),
          higher_pi_(static_cast<std::size_t>(std::max(0, d_max - 1))) {}

    /// pi set for a boundary face, or nullptr when never touched.
    const NodeSet* find(std::span<const NodeId> gamma) const {
        if (gamma.size() == 1) return &vertex_pi_[gamma[0]];
        const auto& map = higher_pi_[gamma.size() - 2];
        const auto it = map.find(FaceKey(gamma.begin(), gamma.end()));
        return it == map.end() ? nullptr : &it->second;
    }

    NodeSet& touch(std::span<const NodeId> gamma) {
        if (gamma.size() == 1) return vertex_pi_[gamma[0]];
        return higher_pi_[gamma.size() - 2][FaceKey(gamma.begin(), gamma.end())];
    }

private:
    std::vector<NodeSet> vertex_pi_;
    std::vector<std::unordered_map<FaceKey, NodeSet, FaceKeyHash>> higher_pi_;
};

/// Exact integer curvature accumulators, one slot per dimension 1..d_max.
/// global_sum[d] is the sum of the current curvature of every inserted
/// d-face; node_sum[d][x] is the same sum restricted to faces containing x.
/// Dividing only at snapshot time keeps the Gauss-Bonnet identity
///   sum_x node_sum[d][x] == (d+1) * global_sum[d]
/// an exact integer statement at every step.
class CurvatureState {
public:
    CurvatureState(std::int64_t node_count, int d_max)
        : node_count_(node_count),
          d_max_(d_max),
          face_count_(static_cast<std::size_t>(d_max) + 1, 0),
          global_sum_(static_cast<std::size_t>(d_max) + 1, 0),
          node_sum_(static_cast<std::size_t>(d_max) + 1,
                    std::vector<std::int64_t>(static_cast<std::size_t>(node_count), 0)) {}

    std::int64_t node_count() const { return node_count_; }
    int d_max() const { return d_max_; }

    std::int64_t face_count(int d) const { return face_count_[static_cast<std::size_t>(d)]; }
    std::int64_t global_sum(int d) const { return global_sum_[static_cast<std::size_t>(d)]; }
    std::int64_t node_sum(int d, NodeId x) const { return node_sum_[static_cast<std::size_t>(d)][x]; }
    const std::vector<std::int64_t>& node_sums(int d) const { return node_sum_[static_cast<std::size_t>(d)]; }

    void count_face(int d) { ++face_count_[static_cast<std::size_t>(d)]; }
    void add_global(int d, std::int64_t v) { global_sum_[static_cast<std::size_t>(d)] += v; }
    void add_node(int d, NodeId x, std::int64_t v) { node_sum_[static_cast<std::size_t>(d)][x] += v; }

private:
    std::int64_t node_count_ = 0;
    int d_max_ = 1;
    std::vector<std::int64_t> face_count_;
    std::vector<std::int64_t> global_sum_;
    std::vector<std::vector<std::int64_t>> node_sum_;
};

/// Frozen accumulator values for one cutoff. All derived quantities are exact
/// rationals of the stored integers.
struct CurvatureSnapshot {
    double cutoff = 0.0;
    std::int64_t node_count = 0;
    int d_max = 1;
    std::vector<std::int64_t> face_count;               // index d, 0 unused
    std::vector<std::int64_t> global_sum;               // index d, 0 unused
    std::vector<std::vector<std::int64_t>> node_sum;    // index d, then node

    /// c_d / binom(m, d+1)
    Rational face_density(int d) const {
        const std::int64_t c = face_count[static_cast<std::size_t>(d)];
        if (c == 0) return Rational::zero();
        return Rational(c, binomial(node_count, d + 1));
    }

    /// Average d-FRC: S_d / c_d, 0 when the dimension is empty.
    Rational avg_frc(int d) const {
        const std::int64_t c = face_count[static_cast<std::size_t>(d)];
        if (c == 0) return Rational::zero();
        return Rational(global_sum[static_cast<std::size_t>(d)], c);
    }

    /// Local d-FRC of node x: S_d(x) / ((d+1) c_d), 0 when empty.
    Rational node_frc(int d, NodeId x) const {
        const std::int64_t c = face_count[static_cast<std::size_t>(d)];
        if (c == 0) return Rational::zero();
        return Rational(node_sum[static_cast<std::size_t>(d)][x], (d + 1) * c);
    }
};

/// Per-insertion record for tests and verification: the curvature of the new
/// face and the delta applied to each pre-existing neighbour.
struct InsertTrace {
    std::int64_t face_frc = 0;
    std::vector<std::pair<FaceKey, int>> neighbour_deltas;
};

/// delta rule: the arrival of a d-face changes each pre-existing neighbour's
/// curvature by exactly +(d+1) when the pair gains a common (d+1)-face
/// (transverse), and by -1 otherwise (parallel).
constexpr int delta(bool forms_higher_face, int d) { return forms_higher_face ? d + 1 : -1; }

/// Curvature of alpha per the set-theoretic formula
///   F(alpha) = (d+2) |intersection of pi(gamma)| + 2(d+1) - sum |pi(gamma)|
/// over the boundary faces gamma. The index must already contain alpha's own
/// contribution to each pi(gamma).
std::int64_t face_frc(const NeighbourhoodIndex& index, const Simplex& alpha);

/// Single-pass incremental engine. Faces must arrive in filtration order
/// (weight, then dimension, then lexicographic); each insertion updates the
/// neighbourhood index, scores the new face, and applies the delta rule to
/// its pre-existing neighbours. After the faces of a weight group have been
/// inserted, the accumulators equal a from-scratch evaluation on the complex
/// at that cutoff.
class CurvatureEngine {
public:
    CurvatureEngine(std::int64_t node_count, int d_max)
        : index_(node_count, d_max), state_(node_count, d_max) {
        if (d_max < 1) throw InputError("d_max must be >= 1");
        if (node_count < 1) throw InputError("node count must be >= 1");
    }

    /// Insert a face of dimension 1..d_max whose boundary faces have already
    /// been inserted.
    void insert_face(const Simplex& alpha, InsertTrace* trace = nullptr);

    CurvatureSnapshot snapshot(double cutoff) const;

    const CurvatureState& state() const { return state_; }
    const NeighbourhoodIndex& index() const { return index_; }

private:
    NeighbourhoodIndex index_;
    CurvatureState state_;
    // Scratch buffers reused across insertions.
    std::vector<const NodeSet*> boundary_sets_;
    std::vector<NodeId> intersection_;
    std::vector<NodeId> key_buf_;
};

struct RunOptions {
    bool record_events = true;  // keep one snapshot per distinct weight
    /// Called once per grid point, in order, as the pass advances.
    std::function<void(std::size_t grid_index, double cutoff, const CurvatureSnapshot&)> on_grid;
    bool store_grid = true;  // keep grid snapshots in the returned series
};

/// Step-function curvature series over the uniform cutoff grid
/// 0, 10^-p, 2*10^-p, ..., max_dist. Grid entries share snapshots: between
/// filtration events the state does not change.
struct CurvatureSeries {
    int precision = 0;
    double max_dist = 0.0;
    std::vector<double> cutoffs;
    std::vector<std::shared_ptr<const CurvatureSnapshot>> grid;    // empty if !store_grid
    std::vector<std::shared_ptr<const CurvatureSnapshot>> events;  // empty if !record_events

    std::size_t size() const { return cutoffs.size(); }
    const CurvatureSnapshot& at(std::size_t j) const { return *grid[j]; }
};

/// Drive the engine over a sorted filtration, emitting a snapshot whenever
/// the weight strictly increases and carrying the last snapshot forward
/// across the uniform grid. Faces of dimension 0 or above d_max contribute no
/// curvature of their own and are skipped; transverse neighbours through
/// (d_max+1)-faces are detected from the d_max-level index directly.
CurvatureSeries run_filtration(const Filtration& filt, int d_max, int precision, double max_dist,
                               const RunOptions& options = {});

}  // namespace frc
