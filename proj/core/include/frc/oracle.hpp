#pragma once

#include <span>
#include <unordered_set>

#include "frc/engine.hpp"
#include "frc/types.hpp"

namespace frc {

/// A fixed simplicial complex with faces grouped by dimension. This is the
/// slow, definitional side of every check: all quantities come from explicit
/// scans over the face lists, with no incremental bookkeeping shared with the
/// engine.
class StaticComplex {
public:
    StaticComplex(std::int64_t node_count, int max_dim)
        : node_count_(node_count),
          faces_(static_cast<std::size_t>(max_dim) + 1),
          members_(static_cast<std::size_t>(max_dim) + 1) {}

    /// Faces of the filtration with weight <= cutoff.
    static StaticComplex from_filtration(const Filtration& filt, double cutoff);

    void add_face(std::span<const NodeId> nodes);

    std::int64_t node_count() const { return node_count_; }
    int max_dim() const { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<FaceKey>& faces(int d) const {
        static const std::vector<FaceKey> empty;
        if (d < 0 || d > max_dim()) return empty;
        return faces_[static_cast<std::size_t>(d)];
    }

    bool contains(std::span<const NodeId> nodes) const {
        const int d = static_cast<int>(nodes.size()) - 1;
        if (d < 0 || d > max_dim()) return false;
        return members_[static_cast<std::size_t>(d)].count(FaceKey(nodes.begin(), nodes.end())) > 0;
    }

    /// Nodes adjacent (via the complex's edges) to every node of gamma;
    /// the definitional reading of the neighbourhood pi(gamma).
    std::vector<NodeId> common_neighbours(std::span<const NodeId> gamma) const;

private:
    std::int64_t node_count_;
    std::vector<std::vector<FaceKey>> faces_;
    std::vector<std::unordered_set<FaceKey, FaceKeyHash>> members_;
    mutable std::vector<std::vector<NodeId>> adjacency_;  // built on first use
    void build_adjacency() const;
};

/// P, T, H of a face by exhaustive scan: parallel and transverse neighbours
/// are d-faces sharing a (d-1)-face, split by whether a common (d+1)-face
/// exists in the complex; higher is the set of (d+1)-faces containing alpha.
struct NeighbourClassification {
    std::vector<FaceKey> parallel;
    std::vector<FaceKey> transverse;
    std::vector<FaceKey> higher;
};

NeighbourClassification classify_neighbours(const StaticComplex& cx, std::span<const NodeId> alpha);

/// F(alpha) = |H| + (d+1) - |P|, straight from the definition.
std::int64_t frc_definition(const StaticComplex& cx, std::span<const NodeId> alpha);

/// Average curvature over the d-faces; 0 for an empty dimension.
Rational global_frc(const StaticComplex& cx, int d);

/// Local curvature of node x: sum of F over d-faces containing x, divided by
/// (d+1)|C_d|; 0 for an empty dimension.
Rational local_frc(const StaticComplex& cx, NodeId x, int d);

/// Batch evaluation in the engine's integer-accumulator convention, for exact
/// cross-checks of whole snapshots: c_d, sum of F, per-node sums of F.
struct OracleSnapshot {
    std::int64_t face_count = 0;
    std::int64_t global_sum = 0;
    std::vector<std::int64_t> node_sum;
};

OracleSnapshot oracle_snapshot(const StaticComplex& cx, int d);

}  // namespace frc
